""" Closed-form constants of the convergence analysis: strong convexity, Lipschitz and gradient-norm bounds.
"""

import numpy as np

from src.linalg.dense import as_matrix, as_vector, row_norms_sq, sigma_min_sq
from src.masking.masks import MaskedRow


def _check_p(p):
    if not 0.0 < p <= 1.0:
        raise ValueError("observation probability p must lie in (0, 1], got {}".format(p))


def compute_mu(A):
    """ Strong convexity parameter mu = sigma_min(A)^2 / m of the least squares objective.

        Args:
            A (array): Matrix with full column rank.

        Returns:
            float: mu.
    """
    A = as_matrix(A)
    return sigma_min_sq(A) / A.shape[0]


def compute_lg(A, p):
    """ Supremum Lipschitz bound L_g = max_i ||A_i||^2 / p^2 of the update over rows and masks.
    """
    _check_p(p)
    return float(row_norms_sq(as_matrix(A)).max()) / p ** 2


def instance_lipschitz(masked, p):
    """ Lipschitz constant ||A~_i||^2 / p^2 of the update for one row and one mask.

        Args:
            masked (MaskedRow or array): Masked row.
            p (float): Observation probability.

        Returns:
            float: Lipschitz constant of x -> g(x).
    """
    values = masked.values if isinstance(masked, MaskedRow) else np.asarray(masked, dtype=float)
    return float(values @ values) / p ** 2


def compute_g(A, b, p, B):
    """ Uniform bound G on E||g(x)||^2 over the ball ||x||^2 <= B, in the form used by the decreasing-step bound:
    G = (2B/(m p^2)) (1 + (1-p)(2-p)/p) sum ||A_i||^4 + (2/(m p^2)) sum ||A_i||^2 b_i^2.

        Args:
            A (array): Matrix.
            b (array): Right hand side.
            p (float): Observation probability.
            B (float): Squared radius of the domain, positive.

        Returns:
            float: G.
    """
    _check_p(p)
    if B <= 0:
        raise ValueError("domain bound B must be positive, got {}".format(B))
    A = as_matrix(A)
    b = as_vector(b, A.shape[0])
    m = A.shape[0]
    norms = row_norms_sq(A)
    quartic = float(np.sum(norms ** 2))
    return (2.0 * B / (m * p ** 2)) * (1.0 + (1.0 - p) * (2.0 - p) / p) * quartic \
        + (2.0 / (m * p ** 2)) * float(np.sum(norms * b ** 2))


def compute_g_lemma_form(A, b, p, B):
    """ G written as (2B/(m p^2) + 2p(1-p)(2-p)B/(m p^4)) sum ||A_i||^4 + (2/(m p^2)) sum ||A_i||^2 b_i^2.

        Algebraically equal to :func:`compute_g`; kept separately so both written forms can be checked against each
        other.
    """
    _check_p(p)
    if B <= 0:
        raise ValueError("domain bound B must be positive, got {}".format(B))
    A = as_matrix(A)
    b = as_vector(b, A.shape[0])
    m = A.shape[0]
    norms = row_norms_sq(A)
    coefficient = 2.0 * B / (m * p ** 2) + 2.0 * p * (1.0 - p) * (2.0 - p) * B / (m * p ** 4)
    return coefficient * float(np.sum(norms ** 2)) + (2.0 / (m * p ** 2)) * float(np.sum(norms * b ** 2))


def compute_g_star(A, x_star, residual, p):
    """ Bound G* on E||g(x_star)||^2:
    G* = (2/(m p^2)) sum ||A_i||^2 r_i^2 + (2(1-p)(2-p)/(m p^3)) ||x_star||^2 sum ||A_i||^4.

        Args:
            A (array): Matrix.
            x_star (array): Least squares solution.
            residual (array): A x_star - b, zero for consistent systems.
            p (float): Observation probability.

        Returns:
            float: G*.
    """
    _check_p(p)
    A = as_matrix(A)
    m, n = A.shape
    x_star = as_vector(x_star, n)
    residual = as_vector(residual, m)
    norms = row_norms_sq(A)
    return (2.0 / (m * p ** 2)) * float(np.sum(norms * residual ** 2)) \
        + (2.0 * (1.0 - p) * (2.0 - p) / (m * p ** 3)) * float(x_star @ x_star) * float(np.sum(norms ** 2))
