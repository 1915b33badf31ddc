""" Stochastic update directions.

All functions accept a single row (shape ``(n,)``) or a stack of rows (shape ``(lanes, n)``) with matching
right hand sides and iterates, so the engine can advance several runs at once.
"""

import numpy as np

from src.masking.masks import MaskedRow


def _values(masked):
    if isinstance(masked, MaskedRow):
        return masked.values
    return np.asarray(masked, dtype=float)


def _trailing(value):
    value = np.asarray(value, dtype=float)
    return value[..., None]


def msgd_gradient(masked, b_i, x, p):
    """ Missing-data corrected update
    g(x) = (1/p^2) A~_i^T (A~_i x - p b_i) - ((1-p)/p^2) diag(A~_i^T A~_i) x.

        Args:
            masked (MaskedRow or array): Masked row(s) A~_i, zero at missing entries.
            b_i (float or array): Right hand side entry (one per row).
            x (array): Iterate(s).
            p (float or array): Observation probability (one per row).

        Returns:
            array: Update direction(s), same shape as x.
    """
    values = _values(masked)
    p = _trailing(p)
    inner = np.sum(values * x, axis=-1, keepdims=True) - p * _trailing(b_i)
    return (values * inner - (1.0 - p) * values * values * x) / p ** 2


def sgd_gradient(row, b_i, x):
    """ Classical stochastic gradient A_i^T (A_i x - b_i) of the least squares objective.
    """
    row = _values(row)
    return row * (np.sum(row * x, axis=-1, keepdims=True) - _trailing(b_i))


def naive_gradient(masked, b_i, x):
    """ Gradient of the naive objective on the zero-filled system, A~_i^T (A~_i x - b_i). Biased for p < 1.
    """
    return sgd_gradient(masked, b_i, x)


def naive_scaled_gradient(masked, b_i, x, p):
    """ Gradient of the rescaled naive objective, A~_i^T (A~_i x - p b_i). Biased for p < 1.
    """
    values = _values(masked)
    return values * (np.sum(values * x, axis=-1, keepdims=True) - _trailing(p) * _trailing(b_i))
