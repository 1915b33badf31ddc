""" Exact and sampled oracles for the properties of the update direction.

Expectations over masks are exact: they sum over all 2^n row masks with their Bernoulli weights. Second moments are
Monte Carlo estimates returned together with their standard error.
"""

import numpy as np

from src.bounds.constants import compute_lg
from src.linalg.dense import as_matrix, as_vector, full_gradient
from src.masking.masks import enumerate_masks
from src.solver.gradients import msgd_gradient, naive_gradient, naive_scaled_gradient

DIRECTIONS = ("msgd", "naive", "naive_scaled")


def _direction(name, values, b_i, x, p):
    if name == "msgd":
        return msgd_gradient(values, b_i, x, p)
    if name == "naive":
        return naive_gradient(values, b_i, x)
    if name == "naive_scaled":
        return naive_scaled_gradient(values, b_i, x, p)
    raise ValueError("unknown direction {!r}, choose from {}".format(name, DIRECTIONS))


def enumerate_expected_update(A, b, x, p, direction="msgd"):
    """ Exact expectation of an update direction over a uniform row and all masks of that row.

        Args:
            A (array): Matrix with at most 20 columns.
            b (array): Right hand side.
            x (array): Point of evaluation.
            p (float): Observation probability.
            direction (str): ``msgd``, ``naive`` or ``naive_scaled``.

        Returns:
            array: (1/m) sum_i sum_D P(D) g_{i,D}(x).
    """
    A = as_matrix(A)
    m, n = A.shape
    b = as_vector(b, m)
    x = as_vector(x, n)
    enumeration = enumerate_masks(n)
    weights = enumeration.weights(p)
    expected = np.zeros(n)
    for i in range(m):
        values = np.where(enumeration.masks, A[i], 0.0)
        expected += weights @ _direction(direction, values, np.full(len(enumeration), b[i]), x, p)
    return expected / m


def unbiasedness_gap(A, b, x, p):
    """ ||E g(x) - grad F(x)|| for the missing-data corrected update.
    """
    return float(np.linalg.norm(enumerate_expected_update(A, b, x, p) - full_gradient(A, b, x)))


def naive_bias_gaps(A, b, x, p):
    """ ||E g(x) - grad F(x)|| for the gradients of the two naive objectives on the zero-filled system.

        Returns:
            tuple: Gap of the plain and of the p-scaled naive gradient.
    """
    gradient = full_gradient(A, b, x)
    return tuple(float(np.linalg.norm(enumerate_expected_update(A, b, x, p, direction) - gradient))
                 for direction in ("naive", "naive_scaled"))


def _random_instances(A, p, samples, rng):
    m, n = A.shape
    rows = rng.integers(m, size=samples)
    values = np.where(rng.random((samples, n)) < p, A[rows], 0.0)
    return values, rng.standard_normal((samples, n)), rng.standard_normal((samples, n))


def lipschitz_ratios(A, p, samples=1000, seed=0):
    """ Sampled Lipschitz ratios ||g(x) - g(y)|| / ||x - y|| for random rows, masks and points.

        Args:
            A (array): Matrix.
            p (float): Observation probability.
            samples (int): Number of (row, mask, x, y) samples.
            seed (int): Generator seed.

        Returns:
            tuple: Ratios and the instance constants ||A~_i||^2 / p^2 of the sampled masked rows.
    """
    A = as_matrix(A)
    values, x, y = _random_instances(A, p, samples, np.random.default_rng(seed))
    zero = np.zeros(samples)
    difference = msgd_gradient(values, zero, x, p) - msgd_gradient(values, zero, y, p)
    ratios = np.linalg.norm(difference, axis=1) / np.linalg.norm(x - y, axis=1)
    return ratios, np.sum(values * values, axis=1) / p ** 2


def second_moment(A, b, x, p, samples=100000, seed=0):
    """ Monte Carlo estimate of E||g(x)||^2 over uniform rows and fresh masks.

        Returns:
            tuple: Sample mean and its standard error.
    """
    A = as_matrix(A)
    m, n = A.shape
    rng = np.random.default_rng(seed)
    rows = rng.integers(m, size=samples)
    values = np.where(rng.random((samples, n)) < p, A[rows], 0.0)
    norms = np.sum(msgd_gradient(values, np.asarray(b, dtype=float)[rows], x, p) ** 2, axis=1)
    return float(norms.mean()), float(norms.std(ddof=1) / np.sqrt(samples))


def cocoercivity_gap(values, p, x, y, l_g):
    """ <g(x) - g(y), x - y> - ||g(x) - g(y)||^2 / L_g for one masked row, relative to L_g ||x - y||^2.

        Negative values mean the update is not co-coercive with constant 1/L_g on this instance.
    """
    values = np.asarray(values, dtype=float)
    difference = msgd_gradient(values, 0.0, x, p) - msgd_gradient(values, 0.0, y, p)
    step = np.asarray(x, dtype=float) - np.asarray(y, dtype=float)
    gap = np.sum(difference * step, axis=-1) - np.sum(difference * difference, axis=-1) / l_g
    return gap / (l_g * np.sum(step * step, axis=-1))


def min_cocoercivity_gap(A, p, samples=1000, seed=0):
    """ Smallest relative co-coercivity gap over random rows, masks and points, with L_g = max ||A_i||^2 / p^2.
    """
    A = as_matrix(A)
    values, x, y = _random_instances(A, p, samples, np.random.default_rng(seed))
    return float(np.min(cocoercivity_gap(values, p, x, y, compute_lg(A, p))))
