import json
import os

import pytest
from click.testing import CliRunner

from src.cli import cli


def parse_json(output):
    return json.JSONDecoder().raw_decode(output[output.index("{"):])[0]


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def identity_config(fixture_path, write_config, tmp_path):
    return write_config({
        "problem": {"matrix": fixture_path("identity_A.csv"), "rhs": fixture_path("identity_b.csv")},
        "p": 1.0,
        "schedule": {"kind": "fixed", "alpha": 0.1},
        "radius": 10,
        "iterations": 50,
        "trial_count": 2,
        "output": str(tmp_path / "identity.csv"),
    })


@pytest.fixture
def gaussian_config(write_config, tmp_path):
    return write_config({
        "problem": {"generator": "gaussian", "m": 40, "n": 5, "seed": 4},
        "p": 0.5,
        "schedule": {"kind": "fixed", "alpha": 1e-3},
        "iterations": 500,
        "trial_count": 3,
        "record_every": 100,
        "root_seed": 9,
        "output": str(tmp_path / "out" / "trace.csv"),
    })


class TestBounds:

    def test_identity_report(self, runner, identity_config):
        result = runner.invoke(cli, ["bounds", identity_config])
        assert result.exit_code == 0, result.output
        report = parse_json(result.output)
        assert report["mu"] == pytest.approx(0.5)
        assert report["l_g"] == pytest.approx(1.0)
        assert report["b_domain"] == pytest.approx(100.0)
        assert "corollary" not in report

    def test_step_plan(self, runner, identity_config):
        result = runner.invoke(cli, ["bounds", identity_config, "--epsilon", "0.02"])
        assert result.exit_code == 0, result.output
        plan = parse_json(result.output)["corollary"]
        assert plan["epsilon0"] == pytest.approx(2.0)
        assert plan["k_budget"] >= 1

    def test_step_too_large(self, runner, identity_config):
        result = runner.invoke(cli, ["bounds", identity_config, "--alpha", "2"])
        assert result.exit_code == 2
        assert "must be smaller than 1/L_g" in result.output


class TestSolve:

    def test_reproducible_trace(self, runner, gaussian_config, tmp_path):
        path = str(tmp_path / "out" / "trace.csv")
        outputs = []
        for _ in range(2):
            result = runner.invoke(cli, ["solve", gaussian_config])
            assert result.exit_code == 0, result.output
            with open(path, "rb") as trace, open(path + ".meta.json", "rb") as meta:
                outputs.append((trace.read(), meta.read()))
        assert outputs[0] == outputs[1]
        lines = outputs[0][0].decode().splitlines()
        assert lines[0] == "iteration,mean_sq_error,trial_count"
        assert [line.split(",")[0] for line in lines[1:]] == ["0", "100", "200", "300", "400", "500"]
        assert all(line.endswith(",3") for line in lines[1:])
        assert len(json.loads(outputs[0][1])["config_digest"]) == 64

    def test_malformed_config(self, runner, write_config, tmp_path):
        path = write_config({"problem": {"generator": "gaussian", "m": 10, "n": 2}, "p": 2.0,
                             "schedule": {"kind": "fixed", "alpha": 0.1}, "iterations": 10,
                             "output": str(tmp_path / "x.csv")})
        result = runner.invoke(cli, ["solve", path])
        assert result.exit_code == 2
        assert "config.p" in result.output

    def test_missing_config(self, runner, tmp_path):
        result = runner.invoke(cli, ["solve", str(tmp_path / "none.json")])
        assert result.exit_code == 2

    def test_rank_deficient_matrix(self, runner, fixture_path, write_config, tmp_path):
        path = write_config({"problem": {"matrix": fixture_path("rank_deficient.csv"),
                                         "rhs": fixture_path("three_ones.csv")},
                             "p": 0.5, "schedule": {"kind": "fixed", "alpha": 0.1}, "iterations": 10,
                             "output": str(tmp_path / "x.csv")})
        result = runner.invoke(cli, ["solve", path])
        assert result.exit_code == 3
        assert "error:" in result.output


class TestOtherCommands:

    def test_generate(self, runner, tmp_path):
        directory = str(tmp_path / "problem")
        result = runner.invoke(cli, ["generate", "-m", "30", "-n", "3", "--seed", "2", "--residual-scale", "0.1",
                                     "-o", directory])
        assert result.exit_code == 0, result.output
        assert sorted(os.listdir(directory)) == ["A.csv", "b.csv", "problem.json"]
        with open(os.path.join(directory, "problem.json")) as file:
            assert not json.load(file)["consistent"]

    def test_generate_inconsistent_default_scale(self, runner, tmp_path):
        directory = str(tmp_path / "inconsistent")
        result = runner.invoke(cli, ["generate", "--kind", "inconsistent", "-m", "30", "-n", "3", "-o", directory])
        assert result.exit_code == 0, result.output
        with open(os.path.join(directory, "problem.json")) as file:
            sidecar = json.load(file)
        assert not sidecar["consistent"]
        assert sidecar["metadata"]["residual_scale"] == 0.1

    def test_generate_inconsistent_needs_residual(self, runner, tmp_path):
        result = runner.invoke(cli, ["generate", "--kind", "inconsistent", "--residual-scale", "0",
                                     "-o", str(tmp_path / "x")])
        assert result.exit_code == 2

    def test_compare_imputation(self, runner, gaussian_config, tmp_path):
        result = runner.invoke(cli, ["compare-imputation", gaussian_config])
        assert result.exit_code == 0, result.output
        written = sorted(name for name in os.listdir(str(tmp_path / "out")) if name.endswith(".csv"))
        assert written == ["trace_col_mean.csv", "trace_msgd.csv", "trace_row_mean.csv", "trace_zero.csv"]

    def test_verify(self, runner):
        result = runner.invoke(cli, ["verify", "--samples", "5000"])
        assert result.exit_code == 0, result.output
        assert "FAIL" not in result.output
        assert "PASS unbiased expectation p=0.5" in result.output
