"""
.. automodule:: src.utils.timer
    :members:
.. automodule:: src.utils.logger
    :members:
.. automodule:: src.utils.exceptions
    :members:
.. automodule:: src.utils.seeding
    :members:
.. automodule:: src.utils.hashing
    :members:
"""
from .exceptions import MsgdError, ConfigError, DataFormatError, StepTooLargeError, NumericalError, \
    RankDeficiencyError, ConvergenceError, VerificationError
from .hashing import config_digest
from .logger import get_logger, set_verbosity
from .seeding import derive_seed, stream, ROW_STREAM, MASK_STREAM, FROZEN_STREAM, CORPUS_STREAM
from .timer import timer
