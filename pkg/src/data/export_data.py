""" Functions to write problems, traces and reports.
"""

import json
import os

import numpy as np
import pandas as pd

from src.data.import_data import MATRIX_FILE, PROBLEM_FILE, RHS_FILE
from src.utils.logger import get_logger

logger = get_logger(__name__)

FLOAT_FORMAT = "%.17g"
META_SUFFIX = ".meta.json"


def _jsonable(value):
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, np.ndarray):
        return value.tolist()
    raise TypeError("{!r} is not JSON serializable".format(value))


def write_json(content, path):
    """ Write a mapping as sorted, indented JSON.
    """
    with open(path, mode="wt", encoding="utf-8") as file:
        json.dump(content, file, indent=2, sort_keys=True, default=_jsonable)
        file.write("\n")


def write_problem(problem, directory):
    """ Write A and b as CSV files and x_star, residual and metadata as a JSON sidecar.

        Args:
            problem (Problem): Problem with a known x_star.
            directory (string): Output directory, created if missing.

        Returns:
            list: Paths of the written files.
    """
    os.makedirs(directory, exist_ok=True)
    paths = [os.path.join(directory, name) for name in (MATRIX_FILE, RHS_FILE, PROBLEM_FILE)]
    pd.DataFrame(problem.A).to_csv(paths[0], header=False, index=False, float_format=FLOAT_FORMAT,
                                   lineterminator="\n")
    pd.DataFrame(problem.b).to_csv(paths[1], header=False, index=False, float_format=FLOAT_FORMAT,
                                   lineterminator="\n")
    write_json({"x_star": problem.x_star.tolist(), "residual": problem.residual.tolist(),
                "consistent": bool(problem.consistent), "metadata": problem.metadata}, paths[2])
    logger.info("problem of shape %s written to %s", problem.A.shape, directory)
    return paths


def meta_path(path):
    return path + META_SUFFIX


def write_trace(trace, path, config=None):
    """ Write an aggregate trace CSV and its ``.meta.json`` sidecar carrying the configuration digest.

        Args:
            trace (AggregateTrace): Trace to write.
            path (string): CSV path.
            config (dict): Resolved configuration recorded in the sidecar.

        Returns:
            string: CSV path.
    """
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    trace.to_csv(path)
    write_json({"config_digest": trace.config_digest, "trial_count": trace.trial_count,
                "checkpoints": int(np.asarray(trace.iterations).shape[0]), "config": config or {}}, meta_path(path))
    logger.info("trace with %d checkpoints written to %s", len(trace.iterations), path)
    return path


def suffixed_path(path, suffix):
    """ ``out/trace.csv`` with suffix ``zero`` becomes ``out/trace_zero.csv``.
    """
    stem, extension = os.path.splitext(path)
    return "{}_{}{}".format(stem, suffix, extension or ".csv")
