""" Long runs checking the error bounds on the desk preset; deselect with ``-m "not slow"``.
"""

import numpy as np
import pytest

from src.bounds import compute_g, compute_g_star, compute_lg, compute_mu, corollary_plan, fixed_step_report, \
    theorem1_bound, theorem2_bound
from src.experiments import gen_gaussian_consistent, run_trials
from src.experiments.presets import FIXED_ALPHA, P_GRID, TRIAL_COUNT
from src.masking import MaskModel
from src.solver import Fixed, InverseDecay, ProjectionDomain

pytestmark = pytest.mark.slow


def auto_domain(problem):
    return ProjectionDomain(10.0 * np.linalg.norm(problem.x_star))


class TestFixedStep:

    def test_tail_below_horizon(self, desk_problem):
        domain = auto_domain(desk_problem)
        tails = {}
        for p in P_GRID:
            report = fixed_step_report(desk_problem.A, desk_problem.b, desk_problem.x_star, desk_problem.residual, p,
                                       FIXED_ALPHA, domain.b_domain)
            trace = run_trials(desk_problem, MaskModel(p), Fixed(FIXED_ALPHA), domain, iterations=200000,
                               trial_count=TRIAL_COUNT, root_seed=11, record_every=1000)
            mean, sem = trace.tail(0.1)
            tail_start = trace.iterations[-max(1, int(np.ceil(0.1 * len(trace.iterations))))]
            assert mean <= theorem2_bound(report, tail_start, desk_problem.initial_sq_error) + 3 * sem
            tails[p] = mean
        assert tails[0.3] > tails[0.7] > tails[1.0]

    def test_residual_raises_plateau(self, desk_problem, desk_inconsistent_problem):
        # full observation; at p < 1 the masking noise swamps the residual term
        p = 1.0
        np.testing.assert_array_equal(desk_inconsistent_problem.A, desk_problem.A)
        plateaus = []
        for problem in (desk_problem, desk_inconsistent_problem):
            trace = run_trials(problem, MaskModel(p), Fixed(FIXED_ALPHA), auto_domain(problem), iterations=200000,
                               trial_count=TRIAL_COUNT, root_seed=11, record_every=1000)
            plateaus.append(trace.tail(0.1))
        (consistent, consistent_sem), (inconsistent, inconsistent_sem) = plateaus
        assert inconsistent - 3 * inconsistent_sem > consistent + 3 * consistent_sem


class TestDecreasingStep:

    @pytest.mark.parametrize("p", [0.5, 1.0])
    def test_below_bound_at_every_checkpoint(self, desk_problem, p):
        domain = auto_domain(desk_problem)
        mu = compute_mu(desk_problem.A)
        trace = run_trials(desk_problem, MaskModel(p), InverseDecay(1.0, mu), domain, iterations=10000,
                           trial_count=20, root_seed=5, record_every=10)
        late = trace.iterations >= 10
        bound = theorem1_bound(compute_g(desk_problem.A, desk_problem.b, p, domain.b_domain), mu,
                               trace.iterations[late])
        assert np.all(trace.mean_sq_error[late] <= bound)
        assert np.all(trace.iterate_norms <= domain.radius * (1 + 1e-12))


class TestStepPlan:

    @pytest.mark.parametrize("shape, p", [((200, 20), 1.0), ((100, 5), 0.9)])
    def test_budget_reaches_target(self, shape, p):
        problem = gen_gaussian_consistent(*shape, seed=1)
        epsilon0 = problem.initial_sq_error
        epsilon = epsilon0 / 100
        plan = corollary_plan(epsilon, epsilon0, compute_lg(problem.A, p),
                              compute_g_star(problem.A, problem.x_star, problem.residual, p), compute_mu(problem.A))
        trace = run_trials(problem, MaskModel(p), Fixed(plan.alpha_star), auto_domain(problem),
                           iterations=plan.k_budget, trial_count=20, root_seed=3, record_every=plan.k_budget)
        assert trace.iterations[-1] == plan.k_budget
        assert trace.final_mean <= 2 * epsilon
