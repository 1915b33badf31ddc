""" Step size schedules.
"""

import abc
from dataclasses import dataclass

import numpy as np

from src.utils.exceptions import ConfigError


class Schedule(abc.ABC):
    """ Step size regime alpha_k, k = 1, 2, ...
    """

    @abc.abstractmethod
    def steps(self, ks):
        """ Step sizes for an array of iteration numbers.

            Args:
                ks (array): Iteration numbers, all >= 1.

            Returns:
                array: Step sizes.
        """

    @abc.abstractmethod
    def describe(self):
        """ Plain mapping of the schedule parameters, used for digests and sidecars.
        """


def _positive(name, value):
    if not np.isfinite(value) or value <= 0:
        raise ConfigError("schedule parameter {} must be positive and finite, got {}".format(name, value))


@dataclass(frozen=True)
class Fixed(Schedule):
    """ Constant step alpha.
    """
    alpha: float

    def __post_init__(self):
        _positive("alpha", self.alpha)

    def steps(self, ks):
        return np.full(np.shape(ks), float(self.alpha))

    def describe(self):
        return {"kind": "fixed", "alpha": self.alpha}


@dataclass(frozen=True)
class InverseDecay(Schedule):
    """ alpha_k = c / (mu_hat k). With c = 1 and mu_hat = mu this is the step of the decreasing-step bound.
    """
    c: float
    mu_hat: float

    def __post_init__(self):
        _positive("c", self.c)
        _positive("mu_hat", self.mu_hat)

    def steps(self, ks):
        return self.c / (self.mu_hat * np.asarray(ks, dtype=float))

    def describe(self):
        return {"kind": "inverse", "c": self.c, "mu_hat": self.mu_hat}


@dataclass(frozen=True)
class GeometricStaged(Schedule):
    """ alpha_k = (c / mu_hat) ratio^floor(k / period): the step shrinks by ``ratio`` every ``period`` iterations.
    """
    c: float
    mu_hat: float
    ratio: float
    period: int

    def __post_init__(self):
        _positive("c", self.c)
        _positive("mu_hat", self.mu_hat)
        if not 0.0 < self.ratio < 1.0:
            raise ConfigError("schedule ratio must lie in (0, 1), got {}".format(self.ratio))
        if int(self.period) != self.period or self.period < 1:
            raise ConfigError("schedule period must be a positive integer, got {}".format(self.period))

    def steps(self, ks):
        stages = np.asarray(ks, dtype=np.int64) // int(self.period)
        return (self.c / self.mu_hat) * self.ratio ** stages

    def describe(self):
        return {"kind": "geometric", "c": self.c, "mu_hat": self.mu_hat, "ratio": self.ratio, "period": self.period}


def step_size(schedule, k):
    """ Step size of iteration k.

        Args:
            schedule (Schedule): Step size regime.
            k (int): Iteration number, k >= 1.

        Returns:
            float: alpha_k.
    """
    if k < 1:
        raise ValueError("iterations are counted from 1, got k={}".format(k))
    return float(schedule.steps(np.array([k]))[0])
