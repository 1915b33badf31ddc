""" Exception hierarchy. Each class carries the exit status the command line uses for it.
"""


class MsgdError(Exception):
    """Base class of all errors raised by the package."""
    exit_code = 1


class ConfigError(MsgdError, ValueError):
    """Malformed configuration or invalid parameter."""
    exit_code = 2


class DataFormatError(ConfigError):
    """Matrix or vector file that cannot be turned into a problem."""
    exit_code = 2


class StepTooLargeError(ConfigError):
    """Fixed step size outside the range covered by the fixed-step bound.

    Attributes:
        l_g (float): Supremum Lipschitz bound the step violates.
    """

    def __init__(self, alpha, l_g):
        self.alpha = alpha
        self.l_g = l_g
        super().__init__("step size alpha={:g} must be smaller than 1/L_g = {:g} (L_g = {:g})".format(
            alpha, 1.0 / l_g, l_g))


class NumericalError(MsgdError, ArithmeticError):
    """Numerical failure."""
    exit_code = 3


class RankDeficiencyError(NumericalError):
    """Matrix without full column rank."""


class ConvergenceError(NumericalError):
    """Iterative method that did not converge.

    Attributes:
        iterations (int): Number of iterations spent before giving up.
    """

    def __init__(self, message, iterations):
        self.iterations = iterations
        super().__init__("{} (after {} iterations)".format(message, iterations))


class VerificationError(MsgdError):
    """At least one verification check failed."""
    exit_code = 4
