""" Synthetic problems with planted solutions.
"""

import numpy as np
from scipy.linalg import toeplitz

from src.experiments.problem import Problem
from src.linalg.dense import CONSISTENCY_RTOL, nullspace_residual
from src.utils.exceptions import ConfigError
from src.utils.logger import get_logger

logger = get_logger(__name__)


def _check_shape(m, n):
    if n < 1 or m < n:
        raise ConfigError("need m >= n >= 1 for an overdetermined system, got m={}, n={}".format(m, n))


def gen_gaussian_consistent(m, n, seed):
    """ Standard Gaussian A and planted x_star with b = A x_star.

        Args:
            m (int): Number of rows.
            n (int): Number of columns, at most m.
            seed (int): Generator seed.

        Returns:
            Problem: Consistent problem.
    """
    _check_shape(m, n)
    rng = np.random.default_rng(seed)
    A = rng.standard_normal((m, n))
    x_star = rng.standard_normal(n)
    return Problem(A=A, b=A @ x_star, x_star=x_star, residual=np.zeros(m), consistent=True,
                   metadata={"generator": "gaussian", "m": m, "n": n, "seed": seed, "residual_scale": 0.0})


def gen_gaussian_inconsistent(m, n, residual_scale, seed):
    """ Gaussian problem whose right hand side is moved off range(A) by a vector in the null space of A^T.

        A and x_star are the draws of :func:`gen_gaussian_consistent` with the same seed, and
        b = A x_star - w with A^T w = 0 and ||w|| = residual_scale ||A x_star||, so x_star stays the minimizer.

        Args:
            m (int): Number of rows.
            n (int): Number of columns.
            residual_scale (float): Residual norm relative to ||A x_star||, non-negative.
            seed (int): Generator seed.

        Returns:
            Problem: Problem with residual w.
    """
    if residual_scale < 0:
        raise ConfigError("residual_scale must be non-negative, got {}".format(residual_scale))
    problem = gen_gaussian_consistent(m, n, seed)
    problem.metadata["residual_scale"] = residual_scale
    if residual_scale == 0:
        return problem
    rng = np.random.default_rng(seed)
    rng.standard_normal((m, n))
    rng.standard_normal(n)
    w = nullspace_residual(problem.A, rng.standard_normal(m))
    if not np.any(w):
        raise ConfigError("square system has no room for a residual orthogonal to range(A)")
    w *= residual_scale * np.linalg.norm(problem.b) / np.linalg.norm(w)
    b = problem.b - w
    if np.linalg.norm(w) <= CONSISTENCY_RTOL * (1.0 + np.linalg.norm(b)):
        raise ConfigError("residual_scale {:g} gives a residual of norm {:.3g}, inside the consistency tolerance; "
                          "use 0 for a consistent problem".format(residual_scale, np.linalg.norm(w)))
    return Problem(A=problem.A, b=b, x_star=problem.x_star, residual=w, consistent=False,
                   metadata=problem.metadata)


def gen_correlated_consistent(m, n, correlation, seed):
    """ Consistent problem with Gaussian rows of covariance correlation^|j-k| and planted standard Gaussian x_star.

        Args:
            m (int): Number of rows.
            n (int): Number of columns.
            correlation (float): Correlation of neighbouring columns, |correlation| < 1.
            seed (int): Generator seed.

        Returns:
            Problem: Consistent problem.
    """
    _check_shape(m, n)
    if not -1.0 < correlation < 1.0:
        raise ConfigError("correlation must lie in (-1, 1), got {}".format(correlation))
    rng = np.random.default_rng(seed)
    covariance = toeplitz(correlation ** np.arange(n))
    A = rng.multivariate_normal(np.zeros(n), covariance, size=m, method="cholesky")
    x_star = rng.standard_normal(n)
    logger.debug("correlated problem %dx%d with correlation %g", m, n, correlation)
    return Problem(A=A, b=A @ x_star, x_star=x_star, residual=np.zeros(m), consistent=True,
                   metadata={"generator": "correlated", "m": m, "n": n, "seed": seed, "correlation": correlation})
