""" Logger setup shared by all subpackages.
"""

import logging

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
ROOT_LOGGER = "src"


def get_logger(name):
    """ Return a module logger below the package root logger.

        The root logger gets a single stream handler the first time any module asks for a logger.

        Args:
            name (str): Module name, usually ``__name__``.

        Returns:
            logging.Logger: Logger for the module.
    """
    root = logging.getLogger(ROOT_LOGGER)
    if not root.handlers:
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        root.addHandler(handler)
        root.setLevel(logging.INFO)
    return logging.getLogger(name)


def set_verbosity(verbose):
    """ Switch the package root logger between INFO and DEBUG.

        Args:
            verbose (bool): Log debug messages if true.
    """
    get_logger(ROOT_LOGGER).setLevel(logging.DEBUG if verbose else logging.INFO)
