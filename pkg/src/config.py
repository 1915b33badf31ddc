""" Experiment configuration: JSON loading, validation and resolution into solver objects.

A configuration file looks like::

    {
        "problem": {"generator": "gaussian", "m": 200, "n": 20, "seed": 1},
        "p": 0.5,
        "schedule": {"kind": "fixed", "alpha": 1e-4},
        "radius": "auto",
        "iterations": 100000,
        "trial_count": 20,
        "record_every": 1000,
        "root_seed": 0,
        "output": "traces/p05.csv"
    }

Relative paths are taken relative to the directory of the configuration file. Problem generators are ``gaussian``,
``inconsistent`` (``residual_scale`` defaults to 0.1) and ``correlated``.
"""

import json
import os
from dataclasses import MISSING, asdict, dataclass, fields
from typing import Optional, Union

import numpy as np

from src.bounds.constants import compute_mu
from src.data.import_data import load_csv_problem
from src.experiments.generators import gen_correlated_consistent, gen_gaussian_consistent, \
    gen_gaussian_inconsistent
from src.experiments.presets import CORRELATION, RESIDUAL_SCALE, TRIAL_COUNT, preset_shape
from src.linalg.dense import sigma_min_sq
from src.masking.masks import MaskMode, MaskModel
from src.solver.engine import METHODS
from src.solver.projection import ProjectionDomain
from src.solver.schedules import Fixed, GeometricStaged, InverseDecay
from src.utils.exceptions import ConfigError
from src.utils.hashing import config_digest
from src.utils.logger import get_logger

logger = get_logger(__name__)

AUTO_RADIUS_FACTOR = 10.0
GENERATORS = ("gaussian", "inconsistent", "correlated")
GENERATOR_FIELDS = {"generator", "m", "n", "seed", "residual_scale", "correlation", "preset"}
FILE_FIELDS = {"matrix", "rhs", "rhs_column", "header"}
SCHEDULE_FIELDS = {
    "fixed": {"kind", "alpha"},
    "inverse": {"kind", "c", "mu_hat"},
    "geometric": {"kind", "c", "mu_hat", "ratio", "period"},
}
MU_HAT_NAMES = ("mu", "sigma_min_sq")


@dataclass
class ExperimentConfig:
    """ Resolved experiment configuration; field names equal the JSON keys.
    """
    problem: dict
    p: float
    schedule: dict
    iterations: int
    output: str
    mask_mode: str = "resample"
    radius: Union[float, str] = "auto"
    trial_count: int = TRIAL_COUNT
    record_every: int = 1
    root_seed: int = 0
    method: str = "msgd"
    corpus_size: Optional[int] = None

    def to_dict(self):
        return asdict(self)


def _fail(field_name, message):
    raise ConfigError("config.{}: {}".format(field_name, message))


def _integer(value, field_name, minimum):
    if isinstance(value, bool) or not isinstance(value, int) or value < minimum:
        _fail(field_name, "expected an integer >= {}, got {!r}".format(minimum, value))
    return value


def _number(value, field_name):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        _fail(field_name, "expected a number, got {!r}".format(value))
    return float(value)


def _unknown(mapping, allowed, prefix):
    for key in sorted(set(mapping) - set(allowed)):
        _fail(prefix + key, "unknown field")


def _resolve_path(path, base_dir, field_name):
    if not isinstance(path, str):
        _fail(field_name, "expected a path, got {!r}".format(path))
    resolved = path if os.path.isabs(path) else os.path.normpath(os.path.join(base_dir, path))
    if not os.path.isfile(resolved):
        _fail(field_name, "file not found: {}".format(resolved))
    return resolved


def _validate_problem(problem, base_dir):
    if not isinstance(problem, dict):
        _fail("problem", "expected an object")
    problem = dict(problem)
    if "generator" in problem:
        _unknown(problem, GENERATOR_FIELDS, "problem.")
        if problem["generator"] not in GENERATORS:
            _fail("problem.generator", "expected one of {}, got {!r}".format(GENERATORS, problem["generator"]))
        if "preset" in problem:
            problem["m"], problem["n"] = preset_shape(problem["preset"])
        for key in ("m", "n"):
            if key not in problem:
                _fail("problem." + key, "missing field")
            _integer(problem[key], "problem." + key, 1)
        _integer(problem.setdefault("seed", 0), "problem.seed", 0)
        default_scale = RESIDUAL_SCALE if problem["generator"] == "inconsistent" else 0.0
        if _number(problem.setdefault("residual_scale", default_scale), "problem.residual_scale") < 0:
            _fail("problem.residual_scale", "must be non-negative")
        if problem["generator"] == "inconsistent" and problem["residual_scale"] == 0:
            _fail("problem.residual_scale", "must be positive for the inconsistent generator")
        if problem["generator"] == "correlated":
            _number(problem.setdefault("correlation", CORRELATION), "problem.correlation")
    elif "matrix" in problem:
        _unknown(problem, FILE_FIELDS, "problem.")
        problem["matrix"] = _resolve_path(problem["matrix"], base_dir, "problem.matrix")
        if ("rhs" in problem) == ("rhs_column" in problem):
            _fail("problem", "give exactly one of rhs and rhs_column")
        if "rhs" in problem:
            problem["rhs"] = _resolve_path(problem["rhs"], base_dir, "problem.rhs")
        else:
            _integer(problem["rhs_column"], "problem.rhs_column", 0)
        if not isinstance(problem.setdefault("header", False), bool):
            _fail("problem.header", "expected true or false")
    else:
        _fail("problem", "expected a generator block or a matrix file block")
    return problem


def _validate_schedule(schedule):
    if not isinstance(schedule, dict) or schedule.get("kind") not in SCHEDULE_FIELDS:
        _fail("schedule.kind", "expected one of {}".format(tuple(SCHEDULE_FIELDS)))
    _unknown(schedule, SCHEDULE_FIELDS[schedule["kind"]], "schedule.")
    for key in sorted(SCHEDULE_FIELDS[schedule["kind"]] - {"kind"}):
        if key not in schedule:
            _fail("schedule." + key, "missing field")
        if key == "mu_hat" and schedule[key] in MU_HAT_NAMES:
            continue
        if key == "period":
            _integer(schedule[key], "schedule.period", 1)
        elif _number(schedule[key], "schedule." + key) <= 0:
            _fail("schedule." + key, "must be positive")
    return dict(schedule)


def validate_config(content, base_dir="."):
    """ Validate a parsed configuration mapping.

        Args:
            content (dict): Parsed JSON.
            base_dir (string): Directory relative paths are resolved against.

        Returns:
            ExperimentConfig: Validated configuration with absolute paths.
    """
    if not isinstance(content, dict):
        raise ConfigError("config: expected a JSON object")
    names = {item.name for item in fields(ExperimentConfig)}
    _unknown(content, names, "")
    for item in fields(ExperimentConfig):
        if item.name not in content and item.default is MISSING:
            _fail(item.name, "missing field")
    values = dict(content)
    values["problem"] = _validate_problem(values["problem"], base_dir)
    values["schedule"] = _validate_schedule(values["schedule"])
    p = _number(values["p"], "p")
    if not 0.0 < p <= 1.0:
        _fail("p", "must lie in (0, 1], got {}".format(p))
    values["p"] = p
    if values.get("mask_mode", "resample") not in [mode.value for mode in MaskMode]:
        _fail("mask_mode", "expected resample or frozen, got {!r}".format(values["mask_mode"]))
    radius = values.get("radius", "auto")
    if radius != "auto" and _number(radius, "radius") <= 0:
        _fail("radius", "must be positive or \"auto\"")
    _integer(values["iterations"], "iterations", 1)
    _integer(values.get("trial_count", TRIAL_COUNT), "trial_count", 1)
    _integer(values.get("record_every", 1), "record_every", 1)
    _integer(values.get("root_seed", 0), "root_seed", 0)
    if values.get("method", "msgd") not in METHODS:
        _fail("method", "expected one of {}, got {!r}".format(METHODS, values["method"]))
    if values.get("corpus_size") is not None:
        _integer(values["corpus_size"], "corpus_size", 1)
    if not isinstance(values["output"], str) or not values["output"]:
        _fail("output", "expected a path")
    if not os.path.isabs(values["output"]):
        values["output"] = os.path.normpath(os.path.join(base_dir, values["output"]))
    return ExperimentConfig(**values)


def load_config(path):
    """ Load and validate a JSON configuration file.

        Args:
            path (string): Path of the configuration file.

        Returns:
            ExperimentConfig: Validated configuration.
    """
    try:
        with open(path, encoding="utf-8") as file:
            content = json.load(file)
    except OSError as error:
        raise ConfigError("cannot read config {}: {}".format(path, error)) from error
    except json.JSONDecodeError as error:
        raise ConfigError("config {} is not valid JSON: {}".format(path, error)) from error
    return validate_config(content, base_dir=os.path.dirname(os.path.abspath(path)))


def build_problem(config):
    """ Generate or load the problem of a configuration.
    """
    block = config.problem
    if "matrix" in block:
        return load_csv_problem(block["matrix"], rhs_path=block.get("rhs"), rhs_column=block.get("rhs_column"),
                                header=block["header"])
    if block["generator"] == "correlated":
        return gen_correlated_consistent(block["m"], block["n"], block["correlation"], block["seed"])
    if block["residual_scale"] > 0:
        return gen_gaussian_inconsistent(block["m"], block["n"], block["residual_scale"], block["seed"])
    return gen_gaussian_consistent(block["m"], block["n"], block["seed"])


def build_model(config):
    return MaskModel(config.p, MaskMode(config.mask_mode))


def resolve_mu_hat(value, problem):
    """ Numeric mu_hat; ``mu`` and ``sigma_min_sq`` are computed from the problem matrix.
    """
    if value == "mu":
        return compute_mu(problem.A)
    if value == "sigma_min_sq":
        return sigma_min_sq(problem.A)
    return float(value)


def build_schedule(config, problem):
    """ Schedule object of a configuration.
    """
    block = config.schedule
    if block["kind"] == "fixed":
        return Fixed(float(block["alpha"]))
    mu_hat = resolve_mu_hat(block["mu_hat"], problem)
    if block["kind"] == "inverse":
        return InverseDecay(float(block["c"]), mu_hat)
    return GeometricStaged(float(block["c"]), mu_hat, float(block["ratio"]), int(block["period"]))


def build_domain(config, problem):
    """ Projection ball; ``auto`` resolves to 10 ||x_star||, or 1 if x_star is zero.
    """
    if config.radius != "auto":
        radius = float(config.radius)
        if np.linalg.norm(problem.x_star) > radius:
            raise ConfigError("config.radius: ball of radius {:g} does not contain x_star (norm {:g})".format(
                radius, np.linalg.norm(problem.x_star)))
        return ProjectionDomain(radius)
    radius = AUTO_RADIUS_FACTOR * float(np.linalg.norm(problem.x_star))
    if radius == 0.0:
        radius = 1.0
        logger.info("x_star is zero, auto radius falls back to %g", radius)
    else:
        logger.info("auto radius resolved to %g = %g * ||x_star||", radius, AUTO_RADIUS_FACTOR)
    return ProjectionDomain(radius)


def resolved_digest(config, problem, schedule, domain):
    """ Digest of the configuration with the problem data and resolved schedule and radius folded in.
    """
    return config_digest({"config": config.to_dict(), "A": problem.A, "b": problem.b,
                          "schedule": schedule.describe(), "radius": domain.radius})
