""" Dense real matrix and vector kernel: row norms, smallest singular value, least squares and nullspace residuals.
"""

from dataclasses import dataclass

import numpy as np
from scipy import linalg

from src.utils.exceptions import ConvergenceError, RankDeficiencyError
from src.utils.logger import get_logger
from src.utils.timer import timer

logger = get_logger(__name__)

# ||residual|| <= CONSISTENCY_RTOL * (1 + ||b||) marks a system as consistent
CONSISTENCY_RTOL = 1e-8
# Cholesky pivots below this fraction of the largest pivot count as rank deficiency
PIVOT_RTOL = 1e-7
SIGMA_MIN_MAX_ITER = 10000


@dataclass(frozen=True)
class LsqSolution:
    """ Least squares solution of an overdetermined system.

    Attributes:
        x_star (array): Minimizer of ||Ax - b||, length n.
        residual (array): A x_star - b, length m.
        consistent (bool): True iff ||residual|| <= 1e-8 (1 + ||b||).
    """
    x_star: np.ndarray
    residual: np.ndarray
    consistent: bool


def as_matrix(A):
    """ Validate a dense real matrix.

        Args:
            A (array-like): Matrix with m >= 1 rows and n >= 1 columns.

        Returns:
            array: Float copy of the matrix.
    """
    A = np.array(A, dtype=float, ndmin=2)
    if A.ndim != 2 or A.shape[0] < 1 or A.shape[1] < 1:
        raise ValueError("expected a non-empty 2-d matrix, got shape {}".format(A.shape))
    if not np.all(np.isfinite(A)):
        raise ValueError("matrix entries must be finite")
    return A


def as_vector(v, length=None):
    """ Validate a dense real vector.

        Args:
            v (array-like): Vector.
            length (int): Expected length, not checked if None.

        Returns:
            array: Float copy of the vector.
    """
    v = np.array(v, dtype=float).reshape(-1)
    if length is not None and v.shape[0] != length:
        raise ValueError("expected a vector of length {}, got {}".format(length, v.shape[0]))
    if not np.all(np.isfinite(v)):
        raise ValueError("vector entries must be finite")
    return v


def row_norm_sq(A, i):
    """ Squared Euclidean norm of row i.

        Args:
            A (array): Matrix.
            i (int): Row index, 0 <= i < m.

        Returns:
            float: Sum of squares of the entries of row i.
    """
    A = np.asarray(A, dtype=float)
    if not 0 <= i < A.shape[0]:
        raise IndexError("row index {} out of range for {} rows".format(i, A.shape[0]))
    return float(np.dot(A[i], A[i]))


def row_norms_sq(A):
    """ Squared Euclidean norms of all rows.

        Args:
            A (array): Matrix.

        Returns:
            array: Vector of length m.
    """
    A = np.asarray(A, dtype=float)
    return np.einsum("ij,ij->i", A, A)


def _normal_factor(A):
    """ Cholesky factor of the normal matrix, raising on rank deficiency.
    """
    m, n = A.shape
    if m < n:
        raise RankDeficiencyError("matrix with {} rows and {} columns cannot have full column rank".format(m, n))
    normal = A.T @ A
    try:
        factor = linalg.cho_factor(normal, lower=False, check_finite=False)
    except linalg.LinAlgError as error:
        raise RankDeficiencyError("normal matrix is not positive definite: {}".format(error)) from error
    pivots = np.abs(np.diag(factor[0]))
    if pivots.min() <= PIVOT_RTOL * pivots.max():
        raise RankDeficiencyError("normal matrix is numerically singular (pivot ratio {:.3g})".format(
            pivots.min() / pivots.max()))
    return factor


def sigma_min_sq(A, tol=1e-12, max_iter=SIGMA_MIN_MAX_ITER):
    """ Squared smallest singular value by inverse iteration on the normal matrix with Ritz extraction.

        The inverse iterates span a growing orthonormal basis Q. The Ritz value is the smallest squared singular
        value of AQ, which approaches sigma_min^2 from above. The method stops once the Ritz pair (theta, v)
        satisfies ||A^T A v - theta v|| <= tol * theta, or when Q spans the whole space and theta is exact, so close
        eigenvalues cost at most n iterations.

        Args:
            A (array): Matrix with full column rank.
            tol (float): Relative tolerance on the eigen-residual of the Ritz pair.
            max_iter (int): Iteration cap.

        Returns:
            float: sigma_min(A)^2.
    """
    A = as_matrix(A)
    n = A.shape[1]
    factor = _normal_factor(A)
    vector = np.random.default_rng(0).standard_normal(n)
    basis = np.empty((n, 0))
    image = np.empty((A.shape[0], 0))
    theta = None
    for iteration in range(1, max_iter + 1):
        vector = linalg.cho_solve(factor, vector, check_finite=False)
        start_norm = np.linalg.norm(vector)
        for _ in range(2):
            vector = vector - basis @ (basis.T @ vector)
        if np.linalg.norm(vector) <= 1e-10 * start_norm:
            # the basis is an invariant subspace, so its Ritz values are eigenvalues
            logger.debug("sigma_min_sq reached an invariant subspace after %d iterations", iteration)
            return theta
        vector /= np.linalg.norm(vector)
        basis = np.column_stack([basis, vector])
        image = np.column_stack([image, A @ vector])
        _, singular, right = linalg.svd(image, full_matrices=False, check_finite=False)
        theta = float(singular[-1] ** 2)
        ritz = basis @ right[-1]
        residual = np.linalg.norm(A.T @ (A @ ritz) - theta * ritz)
        if residual <= tol * theta or basis.shape[1] == n:
            logger.debug("sigma_min_sq converged after %d iterations", iteration)
            return theta
    raise ConvergenceError("inverse iteration for sigma_min^2 did not reach tolerance {:g}".format(tol), max_iter)


@timer
def least_squares(A, b):
    """ Solve min ||Ax - b|| through the normal equations.

        Args:
            A (array): m x n matrix with m >= n and full column rank.
            b (array): Right hand side of length m.

        Returns:
            LsqSolution: Minimizer, residual A x_star - b and consistency flag.
    """
    A = as_matrix(A)
    b = as_vector(b, A.shape[0])
    factor = _normal_factor(A)
    x_star = linalg.cho_solve(factor, A.T @ b, check_finite=False)
    residual = A @ x_star - b
    consistent = bool(np.linalg.norm(residual) <= CONSISTENCY_RTOL * (1.0 + np.linalg.norm(b)))
    return LsqSolution(x_star=x_star, residual=residual, consistent=consistent)


def nullspace_residual(A, z, scale=1.0):
    """ Project z onto the orthogonal complement of range(A) and rescale it.

        The projection is applied twice so that A^T w vanishes to working precision.

        Args:
            A (array): m x n matrix with full column rank.
            z (array): Vector of length m.
            scale (float): Factor multiplying the projected vector.

        Returns:
            array: scale * (z - A (A^T A)^{-1} A^T z); the zero vector if z lies in range(A).
    """
    A = as_matrix(A)
    z = as_vector(z, A.shape[0])
    factor = _normal_factor(A)
    projected = z.copy()
    for _ in range(2):
        projected = projected - A @ linalg.cho_solve(factor, A.T @ projected, check_finite=False)
    if np.linalg.norm(projected) <= 1e-12 * max(np.linalg.norm(z), np.finfo(float).tiny):
        return np.zeros_like(z)
    return scale * projected


def objective(A, b, x):
    """ Least squares objective F(x) = ||Ax - b||^2 / (2m).
    """
    A = np.asarray(A, dtype=float)
    residual = A @ x - b
    return float(residual @ residual) / (2.0 * A.shape[0])


def full_gradient(A, b, x):
    """ Gradient of the least squares objective, (A^T A x - A^T b) / m.
    """
    A = np.asarray(A, dtype=float)
    return (A.T @ (A @ x) - A.T @ b) / A.shape[0]
