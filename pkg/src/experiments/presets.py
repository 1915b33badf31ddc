""" Experiment constants and named problem sizes.
"""

from src.utils.exceptions import ConfigError

FIXED_ALPHA = 1e-4
TRIAL_COUNT = 20
# residual norm relative to ||A x_star|| of the inconsistent experiments
RESIDUAL_SCALE = 0.1
P_GRID = (0.3, 0.7, 1.0)
IMPUTATION_P = 0.5
CORRELATION = 0.5

# desk runs in seconds, large matches the full-size synthetic runs
PRESETS = {
    "desk": {"m": 200, "n": 20},
    "large": {"m": 1000, "n": 200},
}


def preset_shape(name):
    """ (m, n) of a named preset.
    """
    try:
        shape = PRESETS[name]
    except KeyError:
        raise ConfigError("unknown preset {!r}, choose from {}".format(name, sorted(PRESETS)))
    return shape["m"], shape["n"]
