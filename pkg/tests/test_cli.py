"""Command-line behaviour: records, exit codes, files, and determinism.

All invocations go through main(argv) in-process; stdout carries machine
output only, human tables land on stderr.
"""

import json
import math

import pytest

from zetafield import figure_from_csv, record_from_csv, record_from_json
from zetafield.cli import main


def _run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_eval_emits_json_record(capsys):
    code, out, err = _run(capsys, "eval", "--rho", "3", "--t", "0")
    assert code == 0
    record = record_from_json(out)
    assert record.schema_version == "1"
    assert record.command == "eval"
    assert set(record.results) == {"real", "imag", "abs", "log_abs"}
    assert abs(record.results["real"] - 1.2020569031595943) <= 1e-12
    assert set(record.error_budget) == set(record.results)
    record.validate()


def test_eval_csv_format_round_trips(capsys):
    code, out, _ = _run(capsys, "eval", "--rho", "3", "--format", "csv")
    assert code == 0
    assert out.startswith("section,key,value\n")
    record = record_from_csv(out)
    assert abs(record.results["real"] - 1.2020569031595943) <= 1e-12


def test_eval_out_file_leaves_stdout_clean(capsys, tmp_path):
    path = tmp_path / "record.json"
    code, out, _ = _run(capsys, "eval", "--rho", "2", "--out", str(path))
    assert code == 0
    assert out == ""
    record = record_from_json(path.read_text())
    assert abs(record.results["real"] - math.pi**2 / 6.0) <= 1e-12


def test_eval_domain_error_exits_1(capsys):
    code, out, err = _run(capsys, "eval", "--rho", "-1")
    assert code == 1
    assert out == ""
    assert err.startswith("error:")


def test_eval_pole_exits_1(capsys):
    code, _, err = _run(capsys, "eval", "--rho", "1", "--t", "0")
    assert code == 1
    assert err.startswith("error:")


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["eval"])  # missing required --rho
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["solve", "--alpha", "0.25", "--grid", "0.1:0.2:0.1"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["figure", "--id", "1", "--resolution", "4"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2


def test_solve_alpha(capsys):
    code, out, _ = _run(capsys, "solve", "--alpha", "0.31606")
    assert code == 0
    record = record_from_json(out)
    assert abs(record.results["alpha_prime"] - 0.73723261566496934) <= 1e-8
    assert record.results["rho_inside"] == 0.5 + 0.31606
    assert record.error_budget["potential"] == "exact"


def test_solve_alpha_prime_direct(capsys):
    code, out, _ = _run(capsys, "solve", "--alpha-prime", "1.0")
    assert code == 0
    record = record_from_json(out)
    assert abs(record.results["alpha"] - 0.19603644907298669) <= 1e-12
    assert record.results["tail_bound"] == 0.0


def test_solve_alpha_prime_mobius(capsys):
    code, out, _ = _run(
        capsys, "solve", "--alpha-prime", "0.73723", "--method", "mobius_sum"
    )
    assert code == 0
    record = record_from_json(out)
    assert abs(record.results["alpha"] - 0.31606141039617297) <= 1e-9
    tail = record.results["tail_bound"]
    assert abs(tail - 0.0014997207480924248) <= 1e-12
    assert record.error_budget["alpha"] == tail + 1e-12


def test_solve_grid(capsys):
    code, out, _ = _run(capsys, "solve", "--grid", "0.1:0.3:0.1")
    assert code == 0
    record = record_from_json(out)
    points = [k for k in record.results if k.startswith("alpha_prime@")]
    assert len(points) == 3
    for key in record.results:
        if key.startswith("difference@"):
            assert abs(record.results[key]) <= record.error_budget[key]


def test_field_value_is_exact(capsys):
    code, out, _ = _run(capsys, "field", "--alpha", "0.25")
    assert code == 0
    record = record_from_json(out)
    assert record.results["value"] == 4.0
    assert record.error_budget["value"] == "exact"


def test_phi1_boundary_exits_1(capsys):
    code, _, err = _run(capsys, "phi1", "--alpha", "0.5")
    assert code == 1
    assert err.startswith("error:")


def test_potential_record_structure(capsys):
    code, out, _ = _run(
        capsys, "potential", "--rho", "1.5", "--t-max", "300", "--tol", "1e-6"
    )
    assert code == 0
    record = record_from_json(out)
    assert record.error_budget["closed"] == "exact"
    assert abs(record.results["residual"]) <= record.error_budget["residual"]
    assert record.results["truncation_t"] == 300.0


def test_potential_with_zeros_file(capsys, tmp_path):
    path = tmp_path / "zeros.txt"
    path.write_text("# three ordinates\n14.1347251417\n21.0220396388\n25.0108575801\n")
    code, out, _ = _run(
        capsys,
        "potential",
        "--rho", "2", "--rho0", "1",
        "--t-max", "100", "--tol", "1e-6",
        "--zeros", str(path),
    )
    assert code == 0
    record = record_from_json(out)
    assert abs(record.results["residual"]) <= record.error_budget["residual"]


def test_bad_zeros_file_exits_1(capsys, tmp_path):
    path = tmp_path / "zeros.txt"
    path.write_text("14.13\noops\n")
    code, _, err = _run(
        capsys, "potential", "--rho", "2", "--rho0", "1", "--zeros", str(path)
    )
    assert code == 1
    assert "not a number" in err


def test_experiment_command(capsys):
    code, out, err = _run(capsys, "experiment")
    assert code == 0
    record = record_from_json(out)
    assert abs(record.results["two_alpha_prime"] - 1.47446) <= 1e-5
    assert abs(record.results["integral_inside"] - 0.999995) <= 2e-5
    assert "two_alpha_prime" in err
    assert " ok" in err and "FAIL" not in err


def test_records_are_deterministic_apart_from_timestamp(capsys):
    _, out1, _ = _run(capsys, "eval", "--rho", "2", "--t", "14.5")
    _, out2, _ = _run(capsys, "eval", "--rho", "2", "--t", "14.5")
    a, b = json.loads(out1), json.loads(out2)
    a.pop("timestamp")
    b.pop("timestamp")
    assert a == b


def test_figure_stdout_mode_emits_csv(capsys):
    code, out, _ = _run(capsys, "figure", "--id", "2", "--resolution", "16")
    assert code == 0
    assert out.startswith("x,series,y\n")
    parsed = figure_from_csv(out)
    assert [s.label for s in parsed.series] == ["inside", "outside"]


def test_figure_out_writes_csv_png_and_summary(capsys, tmp_path):
    csv_path = tmp_path / "fig3.csv"
    code, out, _ = _run(
        capsys, "figure", "--id", "3", "--resolution", "16", "--out", str(csv_path)
    )
    assert code == 0
    png_path = tmp_path / "fig3.png"
    assert csv_path.exists()
    assert png_path.exists()
    assert png_path.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"
    record = record_from_json(out)
    assert record.results["csv"] == str(csv_path)
    assert record.results["png"] == str(png_path)
    assert record.results["series"] == 4
    parsed = figure_from_csv(csv_path.read_text())
    assert len(parsed.series) == 4


def test_figure_bad_id_exits_1(capsys):
    code, _, err = _run(capsys, "figure", "--id", "9")
    assert code == 1
    assert err.startswith("error:")


def test_validate_suites(capsys):
    code, out, err = _run(capsys, "validate", "--suite", "zeta")
    assert code == 0
    assert err.count("PASS") > 0 and "FAIL" not in err
    record = record_from_json(out)
    record.validate()
    for name, observed in record.results.items():
        allowed = record.error_budget[name]
        assert observed <= allowed, name

    code, _, err = _run(capsys, "validate", "--suite", "quadrature")
    assert code == 0
    assert "FAIL" not in err
