import os

import numpy as np
import pytest

from src.bounds import compute_mu
from src.config import build_domain, build_model, build_problem, build_schedule, load_config, resolved_digest, \
    validate_config
from src.experiments import solve_problem
from src.masking import MaskMode
from src.solver import Fixed, GeometricStaged, InverseDecay
from src.utils.exceptions import ConfigError


def base_config(**overrides):
    content = {
        "problem": {"generator": "gaussian", "m": 40, "n": 5, "seed": 2},
        "p": 0.5,
        "schedule": {"kind": "fixed", "alpha": 1e-3},
        "iterations": 100,
        "output": "trace.csv",
    }
    content.update(overrides)
    return content


class TestValidation:

    def test_defaults(self, tmp_path):
        config = validate_config(base_config(), base_dir=str(tmp_path))
        assert config.mask_mode == "resample"
        assert config.radius == "auto"
        assert config.trial_count == 20
        assert config.output == os.path.join(str(tmp_path), "trace.csv")

    def test_unknown_field(self):
        with pytest.raises(ConfigError, match="config.foo: unknown field"):
            validate_config(base_config(foo=1))

    def test_unknown_nested_field(self):
        with pytest.raises(ConfigError, match="config.problem.bogus"):
            validate_config(base_config(problem={"generator": "gaussian", "m": 4, "n": 2, "bogus": 1}))

    def test_missing_field(self):
        content = base_config()
        del content["iterations"]
        with pytest.raises(ConfigError, match="config.iterations: missing field"):
            validate_config(content)

    @pytest.mark.parametrize("p", [0, -0.5, 1.5, "half"])
    def test_probability_range(self, p):
        with pytest.raises(ConfigError, match="config.p"):
            validate_config(base_config(p=p))

    def test_schedule_kind(self):
        with pytest.raises(ConfigError, match="config.schedule.kind"):
            validate_config(base_config(schedule={"kind": "cosine"}))

    def test_negative_step(self):
        with pytest.raises(ConfigError, match="config.schedule.alpha"):
            validate_config(base_config(schedule={"kind": "fixed", "alpha": -1.0}))

    def test_relative_paths(self, tmp_path, fixture_path, write_config):
        data = tmp_path / "data"
        data.mkdir()
        for name in ("identity_A.csv", "identity_b.csv"):
            (data / name).write_text(open(fixture_path(name)).read())
        path = write_config(base_config(problem={"matrix": "data/identity_A.csv", "rhs": "data/identity_b.csv"}))
        config = load_config(path)
        assert config.problem["matrix"] == str(data / "identity_A.csv")
        np.testing.assert_allclose(build_problem(config).x_star, [1.0, 1.0])

    def test_missing_matrix_file(self, write_config):
        path = write_config(base_config(problem={"matrix": "nowhere.csv", "rhs_column": 0}))
        with pytest.raises(ConfigError, match="config.problem.matrix: file not found"):
            load_config(path)

    def test_invalid_json(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{\"p\": ")
        with pytest.raises(ConfigError, match="not valid JSON"):
            load_config(str(path))

    def test_preset_shape(self):
        config = validate_config(base_config(problem={"generator": "gaussian", "preset": "desk"}))
        assert (config.problem["m"], config.problem["n"]) == (200, 20)

    def test_inconsistent_generator_defaults(self):
        config = validate_config(base_config(problem={"generator": "inconsistent", "m": 40, "n": 5}))
        assert config.problem["residual_scale"] == 0.1
        assert config.trial_count == 20
        problem = build_problem(config)
        assert not problem.consistent
        assert np.linalg.norm(problem.residual) == pytest.approx(0.1 * np.linalg.norm(problem.A @ problem.x_star))

    def test_inconsistent_generator_needs_residual(self):
        with pytest.raises(ConfigError, match="config.problem.residual_scale"):
            validate_config(base_config(problem={"generator": "inconsistent", "m": 40, "n": 5,
                                                 "residual_scale": 0}))

    def test_correlated_default(self):
        config = validate_config(base_config(problem={"generator": "correlated", "m": 40, "n": 5}))
        assert config.problem["correlation"] == 0.5


class TestResolution:

    def test_auto_radius(self, tmp_path):
        config = validate_config(base_config(), base_dir=str(tmp_path))
        problem = build_problem(config)
        assert build_domain(config, problem).radius == pytest.approx(10 * np.linalg.norm(problem.x_star))

    def test_auto_radius_for_zero_solution(self):
        config = validate_config(base_config())
        problem = solve_problem(np.eye(2), np.zeros(2))
        assert build_domain(config, problem).radius == 1.0

    def test_radius_must_contain_solution(self):
        config = validate_config(base_config(radius=1e-6))
        with pytest.raises(ConfigError, match="config.radius"):
            build_domain(config, build_problem(config))

    def test_schedules(self):
        config = validate_config(base_config(schedule={"kind": "inverse", "c": 1.0, "mu_hat": "mu"}))
        problem = build_problem(config)
        schedule = build_schedule(config, problem)
        assert isinstance(schedule, InverseDecay)
        assert schedule.mu_hat == pytest.approx(compute_mu(problem.A))
        assert isinstance(build_schedule(validate_config(base_config()), problem), Fixed)
        staged = validate_config(base_config(schedule={"kind": "geometric", "c": 1.0, "mu_hat": 0.5, "ratio": 0.8,
                                                       "period": 10}))
        assert isinstance(build_schedule(staged, problem), GeometricStaged)

    def test_mask_model(self):
        model = build_model(validate_config(base_config(mask_mode="frozen")))
        assert model.mode is MaskMode.FROZEN
        assert model.p == 0.5

    def test_digest_depends_on_data(self):
        config = validate_config(base_config())
        problem = build_problem(config)
        schedule = build_schedule(config, problem)
        domain = build_domain(config, problem)
        first = resolved_digest(config, problem, schedule, domain)
        assert first == resolved_digest(config, problem, schedule, domain)
        other = solve_problem(problem.A, problem.b + 1.0)
        assert first != resolved_digest(config, other, schedule, domain)
