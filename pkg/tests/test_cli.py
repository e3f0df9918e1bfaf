import json
import subprocess
import sys

import pytest

from kgpert.cli import main
from kgpert.reference import TABLE2_PARTIAL_SUMS


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCorrections:
    def test_partial_sums_match_benchmark_column(self, capsys):
        code, out, _ = run_cli(
            capsys, "corrections", "-a", "1", "-b", "1", "--lambda", "0.05",
            "-n", "1", "-l", "1", "-K", "10", "--no-numerov", "--format", "json",
        )
        assert code == 0
        report = json.loads(out)
        for got, want in zip(report["partial_sums"],
                             TABLE2_PARTIAL_SUMS[("mixed", 1)]):
            assert got == pytest.approx(want, abs=5e-10)

    def test_json_schema_keys(self, capsys):
        code, out, _ = run_cli(
            capsys, "corrections", "-a", "1", "-b", "1", "--lambda", "0.05",
            "-n", "1", "-l", "1", "-K", "4", "--format", "json",
        )
        assert code == 0
        report = json.loads(out)
        for key in ("params", "corrections", "partial_sums", "reference",
                    "error_pct", "stabilized"):
            assert key in report
        assert len(report["corrections"]) == 5
        assert report["reference"] == pytest.approx(0.8424544828, abs=5e-9)

    def test_degenerate_order_zero(self, capsys):
        code, out, _ = run_cli(
            capsys, "corrections", "-a", "1", "-b", "1", "--lambda", "0.05",
            "-n", "1", "-l", "1", "-K", "0", "--no-numerov", "--format", "json",
        )
        assert code == 0
        report = json.loads(out)
        assert report["corrections"] == [0.8]
        assert "stabilized" not in report

    def test_domain_error_exit_code_and_diagnostic(self, capsys):
        code, out, err = run_cli(
            capsys, "corrections", "-a", "2", "-b", "0", "-l", "0", "--no-numerov",
        )
        assert code == 2
        assert "NegativeDiscriminant" in err
        assert out == ""

    def test_wide_valid_domain(self, capsys):
        # strongly scalar-dominant couplings are fine at l = 0
        code, out, _ = run_cli(
            capsys, "corrections", "-a", "1", "-b", "2", "--lambda", "0.05",
            "-n", "0", "-l", "0", "--no-numerov", "--format", "json",
        )
        assert code == 0

    def test_order_cap(self, capsys):
        code, _, err = run_cli(
            capsys, "corrections", "-K", "31", "--no-numerov",
        )
        assert code == 2
        assert "order" in err

    def test_determinism(self, capsys):
        args = ("corrections", "-a", "1", "-b", "0.5", "--lambda", "0.07",
                "-n", "1", "-l", "2", "-K", "6", "--no-numerov",
                "--format", "json")
        _, first, _ = run_cli(capsys, *args)
        _, second, _ = run_cli(capsys, *args)
        assert first == second

    def test_determinism_with_reference_solver(self, capsys):
        args = ("corrections", "-a", "1", "-b", "1", "--lambda", "0.05",
                "-n", "1", "-l", "1", "-K", "6", "--format", "json")
        _, first, _ = run_cli(capsys, *args)
        _, second, _ = run_cli(capsys, *args)
        assert first == second

    def test_mass_scaling_through_cli(self, capsys):
        # scaling mass and screening together scales every correction
        base = ("corrections", "-a", "0.8", "-b", "0.6", "--lambda", "0.05",
                "-n", "1", "-l", "1", "-K", "4", "--no-numerov",
                "--format", "json")
        scaled = ("corrections", "-a", "0.8", "-b", "0.6", "--lambda", "0.1",
                  "-n", "1", "-l", "1", "-K", "4", "--mass", "2",
                  "--no-numerov", "--format", "json")
        _, out1, _ = run_cli(capsys, *base)
        _, out2, _ = run_cli(capsys, *scaled)
        # reports are rounded to 10 decimals, so allow that quantization
        for e1, e2 in zip(json.loads(out1)["corrections"],
                          json.loads(out2)["corrections"]):
            assert e2 == pytest.approx(2 * e1, rel=1e-8, abs=3e-10)

    def test_csv_format(self, capsys):
        code, out, _ = run_cli(
            capsys, "corrections", "-K", "3", "--no-numerov", "--format", "csv",
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "k,correction,partial_sum"
        assert len(lines) == 5
        assert "," in lines[1] and "." in lines[1]

    def test_out_path(self, capsys, tmp_path):
        target = tmp_path / "report.json"
        code, out, _ = run_cli(
            capsys, "corrections", "-K", "2", "--no-numerov",
            "--format", "json", "--out", str(target),
        )
        assert code == 0
        assert out == ""
        report = json.loads(target.read_text())
        assert report["command"] == "corrections"


class TestTables:
    def test_table2_self_grades(self, capsys):
        code, out, _ = run_cli(capsys, "table2", "--format", "json")
        assert code == 0
        report = json.loads(out)
        assert report["max_abs_deviation"]["partial_sums"] < 5e-9
        assert report["max_abs_deviation"]["numerov"] < 5e-9
        assert len(report["columns"]) == 6
        for column in report["columns"].values():
            assert len(column["partial_sums"]) == 11

    def test_table1_self_grades(self, capsys):
        code, out, _ = run_cli(capsys, "table1", "--format", "json")
        assert code == 0
        report = json.loads(out)
        assert len(report["rows"]) == 11
        assert report["max_abs_deviation"]["energy"] < 5e-9
        assert report["max_abs_deviation"]["error_pct"] < 2e-5

    def test_table1_without_oracle(self, capsys):
        code, out, _ = run_cli(capsys, "table1", "--no-numerov", "--format", "json")
        assert code == 0
        report = json.loads(out)
        assert "eps_vector" not in report["rows"][0]
        assert "error_pct" not in report["max_abs_deviation"]

    def test_table2_csv_shape(self, capsys):
        code, out, _ = run_cli(capsys, "table2", "--no-numerov", "--format", "csv")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0].startswith("k,vector_n1")
        assert len(lines) == 12  # header + k = 0..10


class TestOtherCommands:
    def test_numerov_command(self, capsys):
        code, out, _ = run_cli(
            capsys, "numerov", "-a", "1", "-b", "1", "--lambda", "0.05",
            "-n", "1", "-l", "1", "--format", "json",
        )
        assert code == 0
        report = json.loads(out)
        assert report["energy"] == pytest.approx(0.8424544828, abs=5e-9)
        assert report["nodes"] == 1

    def test_exact_swave(self, capsys):
        code, out, _ = run_cli(
            capsys, "exact-swave", "-a", "1", "-b", "1", "--lambda", "0.05",
            "-n", "0", "--format", "json",
        )
        assert code == 0
        report = json.loads(out)
        assert report["energy"] == pytest.approx(0.0246950312, abs=1e-9)
        assert report["n_tilde"] == pytest.approx(1.0)
        assert len(report["corrections"]) == 6

    def test_exact_swave_above_critical_is_domain_error(self, capsys):
        code, _, err = run_cli(
            capsys, "exact-swave", "-a", "1", "-b", "1", "--lambda", "5.0",
            "-n", "0",
        )
        assert code == 2
        assert "AboveCritical" in err

    def test_critical_lambda(self, capsys):
        code, out, _ = run_cli(
            capsys, "critical-lambda", "-a", "1", "-b", "1", "-n", "0",
            "--format", "json",
        )
        assert code == 0
        report = json.loads(out)
        assert report["lambda_cr"] == pytest.approx(4.8284271247, abs=1e-9)

    def test_critical_lambda_csv(self, capsys):
        code, out, _ = run_cli(
            capsys, "critical-lambda", "-a", "1", "-b", "1", "-n", "0",
            "--format", "csv",
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "lambda_cr"
        assert float(lines[1]) == pytest.approx(4.8284271247, abs=1e-9)

    def test_convergence_failure_exit_code(self, capsys):
        # screening beyond the point where the level survives
        code, _, err = run_cli(
            capsys, "numerov", "-a", "1", "-b", "1", "--lambda", "4.5",
            "-n", "0", "-l", "0",
        )
        assert code == 3
        assert "BracketFailure" in err or "Convergence" in err


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "kgpert.cli", "critical-lambda", "-a", "0",
         "-b", "0", "-n", "0"],
        capture_output=True, text=True, timeout=120,
    )
    assert proc.returncode == 0
    assert "2.0000000000" in proc.stdout
