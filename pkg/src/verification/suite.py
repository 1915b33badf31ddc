""" Verification suite run by the ``verify`` command.
"""

from dataclasses import asdict, dataclass, field

import numpy as np

from src.bounds.constants import compute_g, compute_g_star, compute_lg
from src.experiments.generators import gen_gaussian_consistent, gen_gaussian_inconsistent
from src.utils.logger import get_logger
from src.utils.timer import timer
from src.verification.oracles import lipschitz_ratios, min_cocoercivity_gap, naive_bias_gaps, second_moment, \
    unbiasedness_gap

logger = get_logger(__name__)

VERIFY_PS = (0.25, 0.5, 0.9, 1.0)
UNBIASED_TOL = 1e-10
BIAS_FLOOR = 1e-3
TINY_PROBLEM_COUNT = 20
MONTE_CARLO_SAMPLES = 20000


@dataclass(frozen=True)
class Check:
    """ Outcome of one verification check: ``value`` is compared against ``threshold``.
    """
    name: str
    value: float
    threshold: float
    passed: bool


@dataclass
class VerificationReport:
    checks: list = field(default_factory=list)

    @property
    def passed(self):
        return all(check.passed for check in self.checks)

    def failures(self):
        return [check for check in self.checks if not check.passed]

    def add(self, name, value, threshold, passed):
        check = Check(name=name, value=float(value), threshold=float(threshold), passed=bool(passed))
        self.checks.append(check)
        logger.info("%s %s: %.6g (threshold %.6g)", "PASS" if check.passed else "FAIL", name, value, threshold)
        return check

    def to_dict(self):
        return {"passed": self.passed, "checks": [asdict(check) for check in self.checks]}


def tiny_problems(count=TINY_PROBLEM_COUNT, seed=0):
    """ Small random systems (m <= 4, n <= 4) with evaluation points, for the exact enumeration checks.

        Returns:
            list: (A, b, x) triples.
    """
    rng = np.random.default_rng(seed)
    problems = []
    for _ in range(count):
        n = int(rng.integers(1, 5))
        m = int(rng.integers(n, 5))
        problems.append((rng.standard_normal((m, n)), rng.standard_normal(m), rng.standard_normal(n)))
    return problems


def bias_instance():
    """ Fixed generic instance on which both naive gradients are visibly biased.
    """
    A = np.array([[1.0, 2.0, -1.0], [0.5, -1.0, 2.0], [2.0, 0.0, 1.0], [-1.0, 1.0, 1.0]])
    b = np.array([1.0, -2.0, 0.5, 3.0])
    x = np.array([0.5, -1.0, 2.0])
    return A, b, x


def _containment_points(problem, radius, rng, count=3):
    directions = rng.standard_normal((count, problem.A.shape[1]))
    directions *= radius / np.linalg.norm(directions, axis=1, keepdims=True)
    return [np.zeros(problem.A.shape[1]), problem.x_star] + list(directions)


@timer
def run_verification(ps=VERIFY_PS, samples=MONTE_CARLO_SAMPLES, seed=0, problems=None):
    """ Run the unbiasedness, bias, Lipschitz, co-coercivity and second moment checks.

        Args:
            ps (tuple): Observation probabilities to check.
            samples (int): Monte Carlo samples per second moment estimate.
            seed (int): Seed of the fixtures and samples.
            problems (list): Problems for the bound checks; a consistent and an inconsistent 20 x 5 Gaussian
                problem if None.

        Returns:
            VerificationReport: All checks.
    """
    report = VerificationReport()
    fixtures = tiny_problems(seed=seed)
    for p in ps:
        gap = max(unbiasedness_gap(A, b, x, p) for A, b, x in fixtures)
        report.add("unbiased expectation p={:g}".format(p), gap, UNBIASED_TOL, gap <= UNBIASED_TOL)

    plain, scaled = naive_bias_gaps(*bias_instance(), 0.5)
    report.add("naive gradient biased p=0.5", plain, BIAS_FLOOR, plain > BIAS_FLOOR)
    report.add("scaled naive gradient biased p=0.5", scaled, BIAS_FLOOR, scaled > BIAS_FLOOR)

    if problems is None:
        problems = [gen_gaussian_consistent(20, 5, seed), gen_gaussian_inconsistent(20, 5, 0.1, seed)]
    rng = np.random.default_rng(seed)
    for index, problem in enumerate(problems):
        radius = 10.0 * np.linalg.norm(problem.x_star) or 1.0
        for p in ps:
            label = "problem {} p={:g}".format(index, p)
            l_g = compute_lg(problem.A, p)
            ratios, instance = lipschitz_ratios(problem.A, p, samples=1000, seed=seed)
            excess = float(np.max(ratios - instance * (1.0 + 1e-12)))
            report.add("instance Lipschitz " + label, excess, 0.0, excess <= 0.0)
            report.add("supremum Lipschitz " + label, ratios.max(), l_g, ratios.max() <= l_g * (1.0 + 1e-12))

            g_bound = compute_g(problem.A, problem.b, p, radius ** 2)
            worst = 0.0
            for x in _containment_points(problem, radius, rng):
                mean, sem = second_moment(problem.A, problem.b, x, p, samples=samples, seed=seed)
                worst = max(worst, (mean - 3.0 * sem) / g_bound)
            report.add("G dominates second moment " + label, worst, 1.0, worst <= 1.0)

            g_star = compute_g_star(problem.A, problem.x_star, problem.residual, p)
            mean, sem = second_moment(problem.A, problem.b, problem.x_star, p, samples=samples, seed=seed)
            slack = 3.0 * sem + 1e-12 * (1.0 + g_star)
            report.add("G* dominates second moment " + label, mean, g_star + slack, mean <= g_star + slack)

        gap = min_cocoercivity_gap(problem.A, 1.0, seed=seed)
        report.add("co-coercive at p=1 problem {}".format(index), gap, -1e-12, gap >= -1e-12)
    logger.info("verification %s: %d checks, %d failed", "passed" if report.passed else "failed",
                len(report.checks), len(report.failures()))
    return report
