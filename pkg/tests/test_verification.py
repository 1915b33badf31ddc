import numpy as np
import pytest

from src.bounds import compute_g, compute_g_star, compute_lg
from src.linalg import full_gradient
from src.verification import bias_instance, cocoercivity_gap, enumerate_expected_update, lipschitz_ratios, \
    min_cocoercivity_gap, naive_bias_gaps, run_verification, second_moment, tiny_problems, unbiasedness_gap

VERIFY_PS = (0.25, 0.5, 0.9, 1.0)


class TestEnumerationOracle:

    @pytest.mark.parametrize("p", VERIFY_PS)
    def test_update_is_unbiased(self, p):
        for A, b, x in tiny_problems(count=20, seed=1):
            assert unbiasedness_gap(A, b, x, p) <= 1e-10

    def test_expectation_of_full_rows(self, rng):
        A = rng.standard_normal((3, 2))
        b = rng.standard_normal(3)
        x = rng.standard_normal(2)
        np.testing.assert_allclose(enumerate_expected_update(A, b, x, 1.0, "naive"), full_gradient(A, b, x),
                                   rtol=1e-12, atol=1e-14)

    def test_naive_objectives_are_biased(self):
        plain, scaled = naive_bias_gaps(*bias_instance(), 0.5)
        assert plain > 1e-3
        assert scaled > 1e-3

    def test_unknown_direction(self):
        with pytest.raises(ValueError):
            enumerate_expected_update(np.eye(2), np.ones(2), np.ones(2), 0.5, "other")


class TestLipschitz:

    @pytest.mark.parametrize("p", [0.3, 0.7, 1.0])
    def test_instance_constants(self, desk_problem, p):
        ratios, instance = lipschitz_ratios(desk_problem.A, p, samples=1000, seed=2)
        assert np.all(ratios <= instance * (1 + 1e-12))
        assert ratios.max() <= compute_lg(desk_problem.A, p)


class TestCocoercivity:

    def test_holds_without_missing_data(self, desk_problem):
        assert min_cocoercivity_gap(desk_problem.A, 1.0, samples=1000, seed=0) >= -1e-12

    def test_fails_for_a_masked_row(self):
        values = np.array([1.0, 1.0])
        gap = cocoercivity_gap(values, 0.5, np.array([1.0, -1.0]), np.zeros(2), compute_lg(np.array([[1.0, 1.0]]), 0.5))
        assert gap < 0


class TestSecondMoments:

    @pytest.mark.parametrize("p", [0.3, 0.7, 1.0])
    def test_g_dominates(self, desk_problem, desk_inconsistent_problem, p):
        for problem in (desk_problem, desk_inconsistent_problem):
            radius = 10 * np.linalg.norm(problem.x_star)
            bound = compute_g(problem.A, problem.b, p, radius ** 2)
            directions = np.random.default_rng(0).standard_normal((3, 20))
            points = [np.zeros(20), problem.x_star] + list(radius * directions / np.linalg.norm(directions, axis=1,
                                                                                                keepdims=True))
            for x in points:
                mean, sem = second_moment(problem.A, problem.b, x, p, samples=100000, seed=1)
                assert mean - 3 * sem <= bound

    @pytest.mark.parametrize("p", [0.3, 0.7, 1.0])
    def test_g_star_dominates(self, desk_problem, desk_inconsistent_problem, p):
        for problem in (desk_problem, desk_inconsistent_problem):
            bound = compute_g_star(problem.A, problem.x_star, problem.residual, p)
            mean, sem = second_moment(problem.A, problem.b, problem.x_star, p, samples=100000, seed=1)
            assert mean <= bound + 3 * sem + 1e-12 * (1 + bound)


class TestSuite:

    def test_passes(self):
        report = run_verification(samples=5000)
        assert report.passed, report.failures()
        assert report.to_dict()["passed"]
        assert any(check.name.startswith("unbiased") for check in report.checks)
