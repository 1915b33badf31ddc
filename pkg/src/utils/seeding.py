""" Seed splitting rules.

Trial ``t`` of an experiment with root seed ``s`` runs with the seed drawn from
``SeedSequence(s, spawn_key=(t,))``. Inside a run, row choices, masks and frozen
masks come from separate child streams of the run seed, and the frozen mask of
row ``i`` has its own child ``(FROZEN_STREAM, i)``. Adding trials or reordering
row accesses therefore never changes earlier draws.
"""

import numpy as np

ROW_STREAM = 0
MASK_STREAM = 1
FROZEN_STREAM = 2
CORPUS_STREAM = 3


def derive_seed(root_seed, trial_index):
    """ Seed of one trial.

        Args:
            root_seed (int): Root seed of the experiment.
            trial_index (int): Index of the trial.

        Returns:
            int: Seed of the trial.
    """
    sequence = np.random.SeedSequence(root_seed, spawn_key=(trial_index,))
    return int(sequence.generate_state(1, dtype=np.uint64)[0])


def stream(seed, *key):
    """ Independent generator for one named stream of a run.

        Args:
            seed (int): Run seed.
            *key (int): Stream key, e.g. ``ROW_STREAM`` or ``(FROZEN_STREAM, i)``.

        Returns:
            numpy.random.Generator: Generator of the stream.
    """
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=tuple(int(k) for k in key)))
