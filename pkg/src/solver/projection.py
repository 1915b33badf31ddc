""" Projection onto a centered Euclidean ball.
"""

from dataclasses import dataclass

import numpy as np

from src.utils.exceptions import ConfigError


@dataclass(frozen=True)
class ProjectionDomain:
    """ Ball W = {x : ||x|| <= radius}.

    Attributes:
        radius (float): Positive, finite radius.
    """
    radius: float

    def __post_init__(self):
        if not np.isfinite(self.radius) or self.radius <= 0:
            raise ConfigError("projection radius must be positive and finite, got {}".format(self.radius))

    @property
    def b_domain(self):
        """ B = max ||x||^2 over W.
        """
        return float(self.radius) ** 2

    def contains(self, x, rtol=1e-12):
        """ Whether x (or every row of a stack of vectors) lies in the ball.
        """
        return bool(np.all(np.linalg.norm(x, axis=-1) <= self.radius * (1.0 + rtol)))


def project(x, domain):
    """ Project onto the ball; works on a single vector or on a stack of row vectors.

        Args:
            x (array): Vector of length n, or array of shape (lanes, n).
            domain (ProjectionDomain): Ball to project onto.

        Returns:
            array: x where ||x|| <= radius, otherwise x * radius / ||x||.
    """
    x = np.asarray(x, dtype=float)
    norms = np.linalg.norm(x, axis=-1, keepdims=True)
    outside = norms > domain.radius
    if not outside.any():
        return x
    return np.where(outside, x * (domain.radius / np.where(outside, norms, 1.0)), x)
