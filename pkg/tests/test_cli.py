"""End-to-end tests of the command-line interface."""

import pytest

from newtprofile import cli, flow
from newtprofile.bezier import QuadraticBezier
from newtprofile.quadrature import QuadratureError


def parse_summary(captured: str) -> dict:
    values = {}
    for line in captured.splitlines():
        if line.startswith("# ") and " = " in line:
            key, _, raw = line[2:].partition(" = ")
            values[key.strip()] = raw.strip()
    return values


def test_optimize_reports_reported_optimum(capsys):
    code = cli.main(["optimize", "--velocity", "0,0,0,-5", "--rho", "1", "--tol", "1e-8"])
    out = capsys.readouterr().out
    summary = parse_summary(out)
    assert code == 0
    assert summary["converged"] == "true"
    assert float(summary["apex_opt"]) == pytest.approx(0.682564, abs=5e-5)
    assert float(summary["force_opt"]) > 0.0
    assert int(summary["evaluations"]) > 101


def test_optimize_zero_velocity_flat(capsys):
    code = cli.main(["optimize", "--velocity", "0"])
    out = capsys.readouterr().out
    assert code == 2
    assert "flat" in out
    assert parse_summary(out)["converged"] == "false"


def test_optimize_boundary_minimum_exit_code(capsys):
    code = cli.main(
        ["optimize", "--velocity", "1", "--a-min", "0.5", "--a-max", "0.95"]
    )
    out = capsys.readouterr().out
    assert code == 2
    assert "boundary" in out


def test_optimize_constant_flow_centered_with_low_apex_note(capsys):
    code = cli.main(["optimize", "--velocity", "1", "--a-min", "0.05", "--a-max", "0.95"])
    out = capsys.readouterr().out
    assert code == 0
    assert float(parse_summary(out)["apex_opt"]) == pytest.approx(0.5, abs=1e-6)
    assert "apex <= 0.5" in out


def test_optimize_writes_result_csv(tmp_path, capsys):
    path = tmp_path / "result.csv"
    code = cli.main(["optimize", "--velocity", "0,0,0,-5", "--out", str(path)])
    capsys.readouterr()
    assert code == 0
    header, row = path.read_text().splitlines()
    assert header == "apex_opt,force_opt,bracket_lo,bracket_hi,evaluations,converged"
    fields = row.split(",")
    assert float(fields[0]) == pytest.approx(0.682564, abs=5e-5)
    assert fields[5] == "true"


def test_sweep_csv_structure_and_minimum_report(tmp_path, capsys):
    path = tmp_path / "sweep.csv"
    code = cli.main(
        ["sweep", "--velocity", "0,0,0,-5", "--grid", "101", "--out", str(path)]
    )
    out = capsys.readouterr().out
    assert code == 0
    lines = path.read_text().splitlines()
    assert lines[0] == "a,F"
    assert len(lines) == 102
    rows = [line.split(",") for line in lines[1:]]
    apexes = [float(a) for a, _ in rows]
    forces = [float(f) for _, f in rows]
    assert apexes[0] == 0.0 and apexes[-1] == 1.0
    best = min(range(len(forces)), key=forces.__getitem__)
    assert 0.6 < apexes[best] < 0.8
    assert "# grid minimum:" in out


def test_sweep_byte_identical_reruns(tmp_path, capsys):
    first = tmp_path / "a.csv"
    second = tmp_path / "b.csv"
    for path in (first, second):
        assert cli.main(["sweep", "--velocity", "0.2,-1.5", "--grid", "31", "--out", str(path)]) == 0
    capsys.readouterr()
    assert first.read_bytes() == second.read_bytes()


def test_sweep_stdout_mixes_rows_and_comments(capsys):
    code = cli.main(["sweep", "--velocity", "0", "--grid", "11"])
    out = capsys.readouterr().out
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "a,F"
    data = [line for line in lines[1:] if not line.startswith("#")]
    assert len(data) == 11
    assert all(line.split(",")[1] == "0.0" for line in data)


def test_sweep_constant_flow_symmetric_csv(capsys):
    code = cli.main(["sweep", "--velocity", "1", "--grid", "101"])
    out = capsys.readouterr().out
    assert code == 0
    rows = [line.split(",") for line in out.splitlines()[1:] if not line.startswith("#")]
    forces = [float(f) for _, f in rows]
    assert all(abs(forces[i] - forces[100 - i]) <= 1e-10 for i in range(101))


def test_profile_rows_symmetric_apex(capsys):
    code = cli.main(["profile", "--apex", "0.5", "--samples", "3"])
    out = capsys.readouterr().out
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "t,x,y"
    assert lines[1] == "0.0,0.0,0.0"
    assert lines[2] == "0.5,0.5,0.5"
    assert lines[3] == "1.0,1.0,0.0"


def test_profile_rows_apex_zero(capsys):
    code = cli.main(["profile", "--apex", "0", "--samples", "3"])
    out = capsys.readouterr().out
    assert code == 0
    assert out.splitlines()[2] == "0.5,0.25,0.5"


def test_profile_peak_height(capsys):
    code = cli.main(["profile", "--apex", "0.682564", "--samples", "201"])
    out = capsys.readouterr().out
    assert code == 0
    rows = [line.split(",") for line in out.splitlines()[1:] if not line.startswith("#")]
    ys = [float(y) for _, _, y in rows]
    assert max(ys) == 0.5
    assert rows[100][0] == "0.5"


def test_profile_validation_errors(capsys):
    assert cli.main(["profile", "--apex", "1.5"]) == 2
    assert "error:" in capsys.readouterr().err
    assert cli.main(["profile", "--apex", "0.5", "--samples", "1"]) == 2


def test_velocity_parse_error(capsys):
    code = cli.main(["sweep", "--velocity", "1,abc"])
    assert code == 2
    assert "velocity" in capsys.readouterr().err


def test_bad_apex_range(capsys):
    code = cli.main(["optimize", "--velocity", "1", "--a-min", "0.9", "--a-max", "0.1"])
    assert code == 2
    assert "a-min" in capsys.readouterr().err


def test_missing_subcommand(capsys):
    assert cli.main([]) == 2
    capsys.readouterr()


def test_negative_rho_rejected(capsys):
    assert cli.main(["sweep", "--velocity", "1", "--rho", "-2"]) == 2
    capsys.readouterr()


def test_gauss_method_selectable(capsys):
    code = cli.main(["optimize", "--velocity", "0,0,0,-5", "--quad", "gauss", "--nodes", "64"])
    out = capsys.readouterr().out
    assert code == 0
    assert float(parse_summary(out)["apex_opt"]) == pytest.approx(0.682564, abs=5e-5)


def test_check_passes_on_healthy_build(capsys):
    code = cli.main(["check"])
    out = capsys.readouterr().out
    assert code == 0
    assert "all checks passed" in out
    assert out.count("PASS") == 6


def test_check_detects_injected_slope_sign_error(monkeypatch, capsys):
    original = QuadraticBezier.slope

    def flipped(self, t):
        return -original(self, t)

    monkeypatch.setattr(QuadraticBezier, "slope", flipped)
    code = cli.main(["check"])
    out = capsys.readouterr().out
    assert code == 1
    assert "check slope-consistency: FAIL" in out


def test_failed_run_leaves_no_partial_file(tmp_path, monkeypatch, capsys):
    def explode(*args, **kwargs):
        raise QuadratureError("synthetic failure at apex 0.25")

    monkeypatch.setattr(flow, "total_force_parametric", explode)
    path = tmp_path / "sweep.csv"
    code = cli.main(["sweep", "--velocity", "1", "--out", str(path)])
    err = capsys.readouterr().err
    assert code == 1
    assert "apex" in err
    assert not path.exists()
