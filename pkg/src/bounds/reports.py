""" Fixed-step report, error bounds and step/iteration plans.
"""

import math
from dataclasses import asdict, dataclass
from typing import NamedTuple

import numpy as np

from src.bounds.constants import compute_g, compute_g_star, compute_lg, compute_mu
from src.linalg.dense import as_matrix, as_vector, row_norms_sq, sigma_min_sq
from src.utils.exceptions import StepTooLargeError
from src.utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class BoundsReport:
    """ Theoretical constants of a (problem, p, alpha) triple.

    Attributes:
        mu (float): Strong convexity parameter.
        l_g (float): Supremum Lipschitz bound.
        g_bound (float): Uniform bound G on the domain.
        g_star (float): Bound G* at x_star.
        rate (float): Contraction factor 1 - 2 alpha mu (1 - alpha L_g).
        horizon (float): Fixed-step error floor alpha G* / (mu (1 - alpha L_g)).
        b_domain (float): Squared radius B of the domain.
        alpha (float): Fixed step size.
        p (float): Observation probability.
    """
    mu: float
    l_g: float
    g_bound: float
    g_star: float
    rate: float
    horizon: float
    b_domain: float
    alpha: float
    p: float

    def to_dict(self):
        """ Plain mapping with the JSON field names.
        """
        return {key: float(value) for key, value in asdict(self).items()}


def fixed_step_report(A, b, x_star, residual, p, alpha, B):
    """ Constants of the fixed-step bound r^k ||x_0 - x_star||^2 + horizon.

        Args:
            A (array): Matrix.
            b (array): Right hand side.
            x_star (array): Least squares solution.
            residual (array): A x_star - b.
            p (float): Observation probability.
            alpha (float): Fixed step size, below 1/L_g.
            B (float): Squared radius of the domain.

        Returns:
            BoundsReport: Report with rate and horizon filled in.
    """
    A = as_matrix(A)
    l_g = compute_lg(A, p)
    if alpha <= 0 or alpha * l_g >= 1.0:
        raise StepTooLargeError(alpha, l_g)
    mu = compute_mu(A)
    g_star = compute_g_star(A, x_star, residual, p)
    damping = 1.0 - alpha * l_g
    return BoundsReport(
        mu=mu, l_g=l_g, g_bound=compute_g(A, b, p, B), g_star=g_star, rate=1.0 - 2.0 * alpha * mu * damping,
        horizon=alpha * g_star / (mu * damping), b_domain=float(B), alpha=float(alpha), p=float(p))


def theorem2_bound(report, k, initial_sq_error):
    """ Fixed-step bound on E||x_k - x_star||^2: rate^k eps_0 + horizon.

        Args:
            report (BoundsReport): Fixed-step report.
            k (int or array): Iteration(s).
            initial_sq_error (float): ||x_0 - x_star||^2.

        Returns:
            float or array: Bound at iteration k.
    """
    return report.rate ** np.asarray(k, dtype=float) * initial_sq_error + report.horizon


def theorem1_bound(G, mu, k):
    """ Decreasing-step bound 17 G (1 + ln k) / (mu^2 k) on E||x_k - x_star||^2 for alpha_k = 1/(mu k).
    """
    k = np.asarray(k, dtype=float)
    if np.any(k < 1):
        raise ValueError("bound is defined for k >= 1")
    return 17.0 * G * (1.0 + np.log(k)) / (mu ** 2 * k)


def lemma2_bound(G, mu, k):
    """ Decreasing-step bound 17 G (1 + ln k) / (mu k) on the objective gap E[F(x_k) - F(x_star)].
    """
    k = np.asarray(k, dtype=float)
    if np.any(k < 1):
        raise ValueError("bound is defined for k >= 1")
    return 17.0 * G * (1.0 + np.log(k)) / (mu * k)


class StepPlan(NamedTuple):
    """ Step size and iteration budget reaching a target error.
    """
    alpha_star: float
    k_budget: int
    target_met: bool


def _budget(value):
    # ceil of a float that is an integer up to rounding noise must not jump by one
    return int(math.ceil(value - 1e-9 * max(1.0, abs(value))))


def corollary_plan(epsilon, epsilon0, L_g, G_star, mu):
    """ Fixed step alpha* = eps mu / (2 G* + 2 mu eps L_g) and budget k = 2 ln(2 eps_0/eps)(L_g/mu + G*/(mu^2 eps)).

        Args:
            epsilon (float): Target squared error, positive.
            epsilon0 (float): Initial squared error, positive.
            L_g (float): Supremum Lipschitz bound.
            G_star (float): Bound G* at x_star.
            mu (float): Strong convexity parameter.

        Returns:
            StepPlan: Step, budget rounded up, and whether the target is already met at k = 0.
    """
    if epsilon <= 0 or epsilon0 <= 0:
        raise ValueError("epsilon and epsilon0 must be positive, got {} and {}".format(epsilon, epsilon0))
    alpha_star = epsilon * mu / (2.0 * G_star + 2.0 * mu * epsilon * L_g)
    if epsilon >= 2.0 * epsilon0:
        logger.warning("target error %g is at least 2 * epsilon0 = %g: target already met, budget 0",
                       epsilon, 2.0 * epsilon0)
        return StepPlan(alpha_star=alpha_star, k_budget=0, target_met=True)
    budget = 2.0 * math.log(2.0 * epsilon0 / epsilon) * (L_g / mu + G_star / (mu ** 2 * epsilon))
    return StepPlan(alpha_star=alpha_star, k_budget=_budget(budget), target_met=False)


def remark_plan(A, x_star, p, epsilon, epsilon0):
    """ Step and budget of :func:`corollary_plan` for a consistent system, written directly in terms of A:
    alpha* = p^3 eps sigma^2 / (4(2-p)(1-p)||x_star||^2 sum ||A_i||^4 + 2 p eps a_max^2 sigma^2) and
    k = 2 ln(2 eps_0/eps)(m a_max^2/(p^2 sigma^2) + 2(2-p)(1-p) m ||x_star||^2 sum ||A_i||^4/(p^3 sigma^4 eps)),
    with sigma = sigma_min(A).

        Returns:
            StepPlan: Step and budget.
    """
    if epsilon <= 0 or epsilon0 <= 0:
        raise ValueError("epsilon and epsilon0 must be positive, got {} and {}".format(epsilon, epsilon0))
    A = as_matrix(A)
    m, n = A.shape
    x_star = as_vector(x_star, n)
    sigma_sq = sigma_min_sq(A)
    norms = row_norms_sq(A)
    a_max = float(norms.max())
    spread = (2.0 - p) * (1.0 - p) * float(x_star @ x_star) * float(np.sum(norms ** 2))
    alpha_star = p ** 3 * epsilon * sigma_sq / (4.0 * spread + 2.0 * p * epsilon * a_max * sigma_sq)
    if epsilon >= 2.0 * epsilon0:
        return StepPlan(alpha_star=alpha_star, k_budget=0, target_met=True)
    budget = 2.0 * math.log(2.0 * epsilon0 / epsilon) * (
        m * a_max / (p ** 2 * sigma_sq) + 2.0 * spread * m / (p ** 3 * sigma_sq ** 2 * epsilon))
    return StepPlan(alpha_star=alpha_star, k_budget=_budget(budget), target_met=False)
