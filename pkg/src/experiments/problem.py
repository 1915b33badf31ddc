""" Least squares problem with its reference solution.
"""

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from src.linalg.dense import CONSISTENCY_RTOL, as_matrix, as_vector, least_squares
from src.utils.exceptions import ConfigError

# ||A x_star - b - residual|| must stay below this fraction of (1 + ||b||)
PROBLEM_RTOL = 1e-8


@dataclass
class Problem:
    """ Overdetermined system A x = b.

    Attributes:
        A (array): m x n matrix.
        b (array): Right hand side of length m.
        x_star (array): Least squares solution, None if unknown.
        residual (array): A x_star - b.
        consistent (bool): True iff the residual vanishes up to tolerance.
        metadata (dict): Provenance, e.g. generator name, sizes and seed.
    """
    A: np.ndarray
    b: np.ndarray
    x_star: Optional[np.ndarray] = None
    residual: Optional[np.ndarray] = None
    consistent: bool = False
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        self.A = as_matrix(self.A)
        self.b = as_vector(self.b, self.A.shape[0])
        if self.x_star is None:
            return
        self.x_star = as_vector(self.x_star, self.A.shape[1])
        if self.residual is None:
            self.residual = self.A @ self.x_star - self.b
        self.residual = as_vector(self.residual, self.A.shape[0])
        scale = 1.0 + np.linalg.norm(self.b)
        if np.linalg.norm(self.A @ self.x_star - self.b - self.residual) > PROBLEM_RTOL * scale:
            raise ConfigError("residual does not equal A x_star - b")
        if self.consistent != bool(np.linalg.norm(self.residual) <= CONSISTENCY_RTOL * scale):
            raise ConfigError("consistency flag disagrees with the residual norm")

    @property
    def shape(self):
        return self.A.shape

    @property
    def initial_sq_error(self):
        """ ||x_star||^2, the squared error of the zero starting point.
        """
        return float(self.x_star @ self.x_star)


def solve_problem(A, b, metadata=None):
    """ Problem whose reference solution comes from a least squares solve.

        Args:
            A (array): Matrix with full column rank.
            b (array): Right hand side.
            metadata (dict): Provenance.

        Returns:
            Problem: Problem with x_star, residual and consistency flag filled in.
    """
    solution = least_squares(A, b)
    return Problem(A=A, b=b, x_star=solution.x_star, residual=solution.residual, consistent=solution.consistent,
                   metadata=dict(metadata or {}))
