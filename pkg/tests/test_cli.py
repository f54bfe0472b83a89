import csv
import io
import json
import math

import pytest

from inducedym.cli import EXIT_ERROR, EXIT_INTERNAL, EXIT_OK, main
from inducedym.commands.registry import CommandRegistry


def run_cli(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def run_json(capsys, *argv):
    code, out = run_cli(capsys, *argv)
    assert code == EXIT_OK, out
    return json.loads(out)


# ── Computations ──────────────────────────────────────────────────────


def test_oneplaq_residue_is_exact(capsys):
    body = run_json(capsys, "oneplaq", "--nc", "1", "--nb", "2", "--alpha-b", "1/2", "--engine", "residue")
    assert body["command"] == "oneplaq"
    assert body["exact"] == "4/5"
    assert body["value"] == pytest.approx(0.8)


@pytest.mark.parametrize("engine", ["det", "quadrature"])
def test_oneplaq_float_engines(capsys, engine):
    alpha = 0.3
    body = run_json(capsys, "oneplaq", "--nc", "1", "--nb", "2", "--alpha-b", str(alpha), "--engine", engine)
    # f_1 / f_0 for two bosons of one color
    expected = alpha * (1 + (1 - alpha ** 2) / (1 + alpha ** 2))
    assert body["value"] == pytest.approx(expected, rel=1e-9)


def test_coeff_csv(capsys):
    code, out = run_cli(capsys, "coeff", "--nc", "2", "--nb", "1", "--alpha-b", "0.5", "--signature", "1,1")
    assert code == EXIT_OK
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [r["signature"] for r in rows] == ["(1,1)"]
    assert abs(float(rows[0]["c_lambda"])) < 1e-12


def test_zg(capsys):
    body = run_json(capsys, "zg", "--nc", "1", "--kind", "cauchy", "--mu", "1", "--genus", "1")
    assert body["value"] == pytest.approx(1 / math.tanh(0.5), rel=1e-9)
    assert body["tail_bound"] < 1e-8


def test_glue(capsys):
    body = run_json(capsys, "glue", "--nc", "1", "--mu", "0.5", "--mu-minus", "0.7", "--genus", "0")
    assert body["surface"] == "sphere"
    assert body["difference"] < 1e-8


def test_dual_on_bundled_torus(capsys):
    alpha = 0.3
    body = run_json(capsys, "dual", "--complex", "torus2x2.json", "--alpha", str(alpha), "--grid", "32")
    expected = (1 - alpha ** 2) ** -4 * (1 + alpha ** 4) / (1 - alpha ** 4)
    assert body["value"] == pytest.approx(expected, rel=1e-8)
    assert body["oracle"]["value"] == pytest.approx(expected, rel=1e-6)


def test_dual_wilson_loop(capsys):
    body = run_json(capsys, "dual", "--complex", "plaquette.json", "--alpha", "0.5", "--contour", "plaquette:0")
    assert body["value"] == pytest.approx(0.5)


def test_repn_listing(capsys):
    code, out = run_cli(capsys, "repn", "--nc", "2", "--max-abs", "1")
    assert code == EXIT_OK
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 6
    assert all(r["weight_sum_ok"] == "True" for r in rows)


def test_complex_build_is_loadable(capsys, tmp_path):
    out = tmp_path / "torus.json"
    code, _ = run_cli(
        capsys, "complex", "--build", "hypercubic", "--extents", "2,2", "--periodic", "--out", str(out)
    )
    assert code == EXIT_OK
    body = json.loads(out.read_text())
    assert body["info"]["euler_characteristic"] == 0
    described = run_json(capsys, "complex", "--complex", str(out))
    assert described["closed_2chain_rank"] == 1


def test_fock(capsys):
    body = run_json(capsys, "fock", "--nc", "2", "--nb", "1", "--alpha", "0.2", "--samples", "2", "--degree", "6")
    assert len(body["checks"]) == 2
    assert all(c["relative_error"] < 1e-6 for c in body["checks"])
    assert body["singlet_dims"][:3] == [1, 0, 1]


# ── Run control ───────────────────────────────────────────────────────


def test_mc_output_is_deterministic(capsys):
    argv = ["mc", "--complex", "plaquette.json", "--nc", "2", "--nb", "2", "--alpha-b", "0.5",
            "--steps", "20", "--seed", "9"]
    first = run_cli(capsys, *argv)
    second = run_cli(capsys, *argv)
    assert first[0] == EXIT_OK
    assert first == second
    header = first[1].splitlines()[0].split(",")
    assert header[:2] == ["chain", "step"]
    assert "plaquette_0" in header


def test_global_flags_after_subcommand(capsys):
    body = run_json(capsys, "oneplaq", "--nc", "1", "--nb", "1", "--alpha-b", "0.25", "--format", "json")
    assert body["value"] == pytest.approx(0.25)
    code, out = run_cli(capsys, "--format", "csv", "oneplaq", "--nc", "1", "--nb", "1", "--alpha-b", "0.25")
    assert code == EXIT_OK
    assert out.splitlines()[0].split(",") == ["engine", "value"]


def test_toml_config_and_override(capsys, tmp_path):
    path = tmp_path / "run.toml"
    path.write_text('n_c = 1\nn_b = 2\nalpha_b = "1/2"\nengine = "residue"\n')
    body = run_json(capsys, "oneplaq", "--config", str(path))
    assert body["exact"] == "4/5"
    body = run_json(capsys, "oneplaq", "--config", str(path), "--nb", "1")
    assert body["exact"] == "1/2"


def test_output_file(capsys, tmp_path):
    out = tmp_path / "nested" / "z.json"
    code, stdout = run_cli(capsys, "zg", "--nc", "1", "--mu", "2", "--out", str(out))
    assert code == EXIT_OK
    assert stdout == ""
    assert json.loads(out.read_text())["command"] == "zg"


# ── Errors ────────────────────────────────────────────────────────────


def _error(capsys, *argv) -> dict:
    code, out = run_cli(capsys, *argv)
    assert code == EXIT_ERROR
    body = json.loads(out)
    assert set(body) == {"code", "module", "message"}
    return body


def test_validation_error(capsys):
    assert _error(capsys, "oneplaq", "--nc", "0")["code"] == "cli.validation"
    assert _error(capsys, "oneplaq", "--nc", "1", "--nb", "1", "--alpha-b", "1.5")["code"] == "cli.validation"


def test_wilson_with_species_rejected(capsys):
    assert _error(capsys, "oneplaq", "--nb", "1", "--beta", "2")["code"] == "cli.validation"


def test_usage_errors(capsys):
    assert _error(capsys, "oneplaq", "--bogus")["code"] == "cli.usage"
    assert _error(capsys)["code"] == "cli.usage"
    assert _error(capsys, "nosuchcommand")["code"] == "cli.usage"


def test_missing_config_file(capsys, tmp_path):
    body = _error(capsys, "oneplaq", "--config", str(tmp_path / "absent.toml"))
    assert body["module"] == "cli"


def test_computation_error(capsys):
    body = _error(capsys, "dual", "--complex", "torus2x2.json", "--alpha", "0.5", "--contour", "steps:0:1,4:1")
    assert body["module"] == "cellcomplex"


def test_missing_required_flag(capsys):
    assert _error(capsys, "zg", "--nc", "1")["message"] == "--mu is required"


def test_malformed_contour_is_an_input_error(capsys, tmp_path):
    body = _error(capsys, "dual", "--complex", "plaquette.json", "--alpha", "0.5", "--contour", "steps:0:1,3")
    assert body["code"] == "cellcomplex.invalid_input"
    broken = tmp_path / "broken.json"
    broken.write_text("{")
    body = _error(capsys, "dual", "--complex", str(broken), "--alpha", "0.5")
    assert body["module"] == "cellcomplex"


def test_internal_failure_exits_with_one(capsys, monkeypatch):
    def explode(config):
        raise RuntimeError("boom")

    monkeypatch.setattr(CommandRegistry, "dispatch", explode)
    code, out = run_cli(capsys, "zg", "--nc", "1", "--mu", "1")
    assert code == EXIT_INTERNAL
    body = json.loads(out)
    assert body["code"] == "cli.internal"
    assert "boom" in body["message"]
