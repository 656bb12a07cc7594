import json
import subprocess
import sys

import numpy as np
import pytest

from entdeg import cli
from entdeg.measure import PurityViolation

S3 = 1 / np.sqrt(3)


def write_state(tmp_path, name, dims, amps):
    payload = {"dims": list(dims), "amplitudes": [[z.real, z.imag] for z in amps]}
    path = tmp_path / name
    path.write_text(json.dumps(payload), encoding="utf-8")
    return str(path)


@pytest.fixture
def three_term_file(tmp_path):
    return write_state(tmp_path, "three_term.json", (2, 2), [S3, S3, 0j, S3])


@pytest.fixture
def bell_file(tmp_path):
    r = complex(np.sqrt(0.5))
    return write_state(tmp_path, "bell.json", (2, 2), [r, 0j, 0j, r])


def test_round15_idempotent():
    values = [2 / 3, 1e-300, 123456.789101112, -0.1, 1.0, 0.0, 5e-324]
    for x in values:
        once = cli.round15(x)
        assert cli.round15(once) == once


def test_analyze_json_fifteen_digits(three_term_file, capsys):
    assert cli.main(["analyze", "--input", three_term_file, "--format", "json"]) == 0
    out = capsys.readouterr().out
    assert '"p_e_det": 0.666666666666667' in out
    data = json.loads(out)
    assert data["local_dim"] == 2
    assert data["concurrence"] == pytest.approx(2 / 3)


def test_analyze_json_roundtrip_byte_identical(three_term_file, capsys):
    cli.main(["analyze", "--input", three_term_file, "--format", "json"])
    first = capsys.readouterr().out.rstrip("\n")
    assert cli.emit_json(json.loads(first)) == first


def test_analyze_bell(bell_file, capsys):
    assert cli.main(["analyze", "--input", bell_file, "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["p_e_det"] == 1.0
    assert data["p_e_schmidt"] == 1.0


def test_analyze_table_output(three_term_file, capsys):
    assert cli.main(["analyze", "--input", three_term_file]) == 0
    out = capsys.readouterr().out
    assert "p_e_det" in out
    assert "0.666666666666667" in out
    assert "constraint_residuals" in out


def test_analyze_qutrit_state(tmp_path, capsys):
    path = write_state(
        tmp_path, "qutrit.json", (3, 3), [S3, 0j, 0j, 0j, S3, 0j, 0j, 0j, S3]
    )
    assert cli.main(["analyze", "--input", path, "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["p_e_det"] == 1.0
    assert data["p_e_schmidt"] is None
    assert data["oracle_checked"] is False


def test_analyze_wrong_amplitude_count(tmp_path, capsys):
    path = write_state(tmp_path, "bad.json", (2, 2), [1 + 0j, 0j, 0j])
    assert cli.main(["analyze", "--input", path]) == 2
    assert "error:" in capsys.readouterr().err


def test_analyze_missing_field(tmp_path, capsys):
    path = tmp_path / "missing.json"
    path.write_text('{"dims": [2, 2]}', encoding="utf-8")
    assert cli.main(["analyze", "--input", str(path)]) == 2
    assert "amplitudes" in capsys.readouterr().err


def test_analyze_unparseable_file(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text("{dims: nope", encoding="utf-8")
    assert cli.main(["analyze", "--input", str(path)]) == 2


def test_analyze_nonexistent_file(tmp_path, capsys):
    assert cli.main(["analyze", "--input", str(tmp_path / "none.json")]) == 2


def test_analyze_zero_state(tmp_path, capsys):
    path = write_state(tmp_path, "zero.json", (2, 2), [0j, 0j, 0j, 0j])
    assert cli.main(["analyze", "--input", path]) == 2


def test_purity_violation_maps_to_exit_3(three_term_file, monkeypatch, capsys):
    def boom(psi):
        raise PurityViolation("determinant sign inconsistent with purity")

    monkeypatch.setattr(cli, "analyze", boom)
    assert cli.main(["analyze", "--input", three_term_file]) == 3
    assert "inconsistent with purity" in capsys.readouterr().err


def test_verify_small_run_passes(capsys):
    code = cli.main(["verify", "--samples", "200", "--dim", "2", "--seed", "42"])
    assert code == 0
    data = json.loads(capsys.readouterr().out)
    assert data["passed"] is True
    assert data["samples"] == 200
    assert set(data["worst_residuals"]) >= {"roundtrip", "oracle_det_vs_schmidt"}


def test_verify_qutrit_run(capsys):
    assert cli.main(["verify", "--samples", "50", "--dim", "3", "--seed", "1"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["local_dim"] == 3
    assert data["worst_residuals"]["roundtrip"] <= 1e-11


def test_verify_impossible_tolerance_fails(capsys):
    code = cli.main(["verify", "--samples", "20", "--seed", "3", "--tol", "1e-30"])
    assert code == 1
    assert json.loads(capsys.readouterr().out)["passed"] is False


def test_verify_rejects_dim_5():
    with pytest.raises(SystemExit) as exc:
        cli.main(["verify", "--dim", "5"])
    assert exc.value.code == 2


def test_verify_output_worker_independent(capsys):
    cli.main(["verify", "--samples", "120", "--seed", "8"])
    one = capsys.readouterr().out
    cli.main(["verify", "--samples", "120", "--seed", "8", "--workers", "3"])
    three = capsys.readouterr().out
    assert one == three


def test_examples_command(capsys):
    assert cli.main(["examples"]) == 0
    out = capsys.readouterr().out
    assert "three-term superposition" in out
    assert "Bell pair" in out
    assert "qutrit maximal superposition" in out
    assert out.count("\n") == 8  # header + six fixtures + summary line


def test_examples_deterministic(capsys):
    cli.main(["examples"])
    first = capsys.readouterr().out
    cli.main(["examples"])
    assert capsys.readouterr().out == first


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "entdeg", "examples"],
        capture_output=True,
        text=True,
        timeout=60,
    )
    assert proc.returncode == 0
    assert "worst deviation" in proc.stdout
