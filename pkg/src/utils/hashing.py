""" Digest of a resolved configuration.
"""

import hashlib
import json

import numpy as np


def _canonical(value):
    if isinstance(value, dict):
        return {str(key): _canonical(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_canonical(item) for item in value]
    if isinstance(value, np.ndarray):
        return hashlib.sha256(np.ascontiguousarray(value, dtype=float).tobytes()).hexdigest()
    if isinstance(value, np.generic):
        return value.item()
    return value


def config_digest(config):
    """ SHA-256 of the canonical JSON form of a configuration mapping.

        Arrays are replaced by the digest of their bytes so problem data enters the digest without being inlined.

        Args:
            config (dict): Resolved configuration.

        Returns:
            str: Hex digest.
    """
    text = json.dumps(_canonical(config), sort_keys=True, separators=(",", ":"), default=str)
    return hashlib.sha256(text.encode("utf-8")).hexdigest()
