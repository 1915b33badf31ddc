""" Bernoulli missingness model: per-row masks, masked rows and exhaustive mask enumeration.
"""

import enum
import itertools
from dataclasses import dataclass

import numpy as np

from src.utils.exceptions import ConfigError
from src.utils.seeding import FROZEN_STREAM, MASK_STREAM, stream

# 2^20 masks is the largest enumeration we allow
ENUMERATION_GUARD = 20


class MaskMode(enum.Enum):
    """ When the mask of a row is drawn.
    """
    RESAMPLE = "resample"
    FROZEN = "frozen"


@dataclass(frozen=True)
class MaskModel:
    """ Entries are observed independently with probability p.

    Attributes:
        p (float): Observation probability in (0, 1].
        mode (MaskMode): Fresh mask every iteration, or one mask per row drawn on first access and replayed.
    """
    p: float
    mode: MaskMode = MaskMode.RESAMPLE

    def __post_init__(self):
        if not 0.0 < self.p <= 1.0:
            raise ConfigError("observation probability p must lie in (0, 1], got {}".format(self.p))
        object.__setattr__(self, "mode", MaskMode(self.mode))


@dataclass(frozen=True)
class MaskedRow:
    """ Row of A with missing entries set to zero.

    Attributes:
        mask (array): Boolean observation pattern, the diagonal of D_i.
        values (array): D_i A_i, zero wherever mask is false.
    """
    mask: np.ndarray
    values: np.ndarray


def apply_mask(row, mask):
    """ Zero the unobserved entries of a row.

        Args:
            row (array): Full row A_i.
            mask (array): Boolean observation pattern of the same length.

        Returns:
            MaskedRow: Masked row.
    """
    mask = np.asarray(mask, dtype=bool)
    return MaskedRow(mask=mask, values=np.where(mask, row, 0.0))


class MaskSampler:
    """ Mask source of a single run.

    In resample mode every request draws fresh Bernoulli entries from the run's mask stream. In frozen mode the mask
    of row i comes from its own counter-based stream, so it is the same on every access and does not depend on the
    order rows are visited in.

    Attributes:
        model (MaskModel): Missingness model.
        n (int): Row length.
        seed (int): Run seed.
    """

    def __init__(self, model, n, seed):
        self.model = model
        self.n = n
        self.seed = seed
        self._rng = stream(seed, MASK_STREAM)
        self._frozen = {}

    def frozen_row(self, i):
        """ Frozen mask of row i, drawn on first access.
        """
        i = int(i)
        if i not in self._frozen:
            self._frozen[i] = stream(self.seed, FROZEN_STREAM, i).random(self.n) < self.model.p
        return self._frozen[i]

    def block(self, rows):
        """ Masks for a sequence of row requests.

            Args:
                rows (array): Row indices, one per iteration.

            Returns:
                array: Boolean array of shape (len(rows), n).
        """
        rows = np.asarray(rows).reshape(-1)
        if self.model.p == 1.0:
            return np.ones((rows.shape[0], self.n), dtype=bool)
        if self.model.mode is MaskMode.FROZEN:
            return np.array([self.frozen_row(i) for i in rows], dtype=bool).reshape(rows.shape[0], self.n)
        return self._rng.random((rows.shape[0], self.n)) < self.model.p

    def frozen_matrix(self, m):
        """ Frozen masks of all m rows stacked into a matrix.
        """
        return np.array([self.frozen_row(i) for i in range(m)], dtype=bool).reshape(m, self.n)


def sample_masked_row(A, i, model, sampler):
    """ Draw the masked version of row i.

        Args:
            A (array): Full matrix.
            i (int): Row index, 0 <= i < m.
            model (MaskModel): Missingness model, must match the sampler's.
            sampler (MaskSampler): Mask source owning the generator state.

        Returns:
            MaskedRow: Mask and masked values of row i.
    """
    A = np.asarray(A, dtype=float)
    if not 0 <= i < A.shape[0]:
        raise IndexError("row index {} out of range for {} rows".format(i, A.shape[0]))
    if sampler.model != model:
        raise ConfigError("sampler was built for {}, not {}".format(sampler.model, model))
    return apply_mask(A[i], sampler.block([i])[0])


class MaskEnumeration:
    """ All 2^n binary masks of a row, in binary counting order with False before True.

    Attributes:
        n (int): Row length.
        masks (array): Boolean array of shape (2^n, n).
    """

    def __init__(self, n):
        if n < 1:
            raise ValueError("row length must be positive, got {}".format(n))
        if n > ENUMERATION_GUARD:
            raise ValueError("cannot enumerate 2^{} masks: row length exceeds the enumeration guard of {}".format(
                n, ENUMERATION_GUARD))
        self.n = n
        self.masks = np.array(list(itertools.product([False, True], repeat=n)), dtype=bool)

    def __len__(self):
        return self.masks.shape[0]

    def weights(self, p):
        """ Probability p^#true (1-p)^#false of every mask.
        """
        kept = self.masks.sum(axis=1)
        return p ** kept * (1.0 - p) ** (self.n - kept)

    def items(self, p):
        """ Yield (mask, weight) pairs for observation probability p.
        """
        for mask, weight in zip(self.masks, self.weights(p)):
            yield mask, float(weight)


def enumerate_masks(n):
    """ Enumerate the 2^n row masks; weights are evaluated per requested p.

        Args:
            n (int): Row length, at most 20.

        Returns:
            MaskEnumeration: Enumeration object.
    """
    return MaskEnumeration(n)
