""" Imputation baselines: fill the unobserved entries before running a standard solver.
"""

import enum
from typing import NamedTuple

import numpy as np
import pandas as pd

from src.utils.exceptions import ConfigError
from src.utils.logger import get_logger

logger = get_logger(__name__)


class ImputationStrategy(enum.Enum):
    ZERO = "zero"
    ROW_MEAN = "row_mean"
    COL_MEAN = "col_mean"


class Imputed(NamedTuple):
    """ Imputed matrix and the number of rows or columns without a single observed entry (filled with 0).
    """
    values: np.ndarray
    empty_count: int


def impute(A, mask, strategy):
    """ Replace the unobserved entries of A.

        Args:
            A (array): Full matrix.
            mask (array): Boolean observation pattern of A's shape.
            strategy (ImputationStrategy or str): ``zero``, ``row_mean`` or ``col_mean``; means run over observed
                entries only.

        Returns:
            Imputed: Imputed matrix and empty row/column count.
    """
    A = np.asarray(A, dtype=float)
    mask = np.asarray(mask, dtype=bool)
    if mask.shape != A.shape:
        raise ConfigError("mask shape {} does not match matrix shape {}".format(mask.shape, A.shape))
    strategy = ImputationStrategy(strategy)
    observed = pd.DataFrame(A).where(mask)
    if strategy is ImputationStrategy.ZERO:
        return Imputed(values=observed.fillna(0.0).to_numpy(), empty_count=0)
    if strategy is ImputationStrategy.ROW_MEAN:
        means = observed.mean(axis=1)
        filled = observed.where(observed.notna(), means.fillna(0.0), axis=0)
    else:
        means = observed.mean(axis=0)
        filled = observed.fillna(means.fillna(0.0))
    empty_count = int(means.isna().sum())
    if empty_count:
        logger.warning("%d %s without observed entries imputed with 0", empty_count,
                       "rows" if strategy is ImputationStrategy.ROW_MEAN else "columns")
    return Imputed(values=filled.to_numpy(dtype=float), empty_count=empty_count)
