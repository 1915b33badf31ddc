""" Decorator to report the time needed for the evaluation of a function.
"""

import functools
import time

from src.utils.logger import get_logger

logger = get_logger(__name__)


def timer(function):
    """ Report the time needed for the evaluation of a function through the package logger.

        Args:
            function (function): Function that is executed.

        Returns:
            function: Wrapped function returning the result of the executed function.
    """

    @functools.wraps(function)
    def time_measurement(*args, **kwargs):
        """ Measure time elapsed by executing a function.
        """
        time_start = time.perf_counter()
        result = function(*args, **kwargs)
        time_elapsed = time.perf_counter() - time_start
        logger.info("Finished function: %r in %s seconds.", function.__name__, round(time_elapsed, 2))
        return result

    return time_measurement
