"""Command-line surface: literals, exit codes, reports, tables."""

import cmath
import json
import math
import subprocess
import sys

import pytest

try:
    import jsonschema
except ImportError:  # pragma: no cover
    jsonschema = None

from qmu.cli import REPORT_SCHEMA, format_complex, main, parse_complex


def run_cli(*args):
    return subprocess.run([sys.executable, "-m", "qmu.cli", *args],
                          capture_output=True, text=True)


class TestComplexLiteral:
    @pytest.mark.parametrize("text,value", [
        ("1.5", 1.5 + 0j),
        ("-2", -2 + 0j),
        ("0.9i", 0.9j),
        ("-0.5i", -0.5j),
        ("0.2+0.05i", 0.2 + 0.05j),
        ("-0.1-0.02i", -0.1 - 0.02j),
    ])
    def test_parse(self, text, value):
        assert parse_complex(text) == value

    def test_rejects_garbage(self):
        for bad in ("", "i+2", "1+2", "2i+1", "(1+2j)"):
            with pytest.raises(ValueError):
                parse_complex(bad)

    def test_round_trip(self):
        values = [1.5 + 0j, -0.25j, 0.2 + 0.05j, -0.1 - 0.02j,
                  3.0 + 0j, 6e-17 - 2.0276111912507675j]
        for z in values:
            assert parse_complex(format_complex(z)) == z


class TestEval:
    def test_special_value(self):
        out = run_cli("eval", "mu_alpha", "--u", "0.2+0.05i", "--v", "-0.1+0.02i",
                      "--alpha", "0", "--tau", "0.9i", "--json")
        assert out.returncode == 0
        doc = json.loads(out.stdout)
        got = complex(doc["value"]["re"], doc["value"]["im"])
        want = -1j * cmath.exp(2j * math.pi * 0.9j * (-1 / 8))
        assert abs(got - want) < 1e-10

    def test_hermite_value(self):
        out = run_cli("eval", "hermite", "--n", "1", "--w", "0.25", "--q", "0.3")
        assert out.returncode == 0
        assert f"{2 * math.cos(0.25 * math.pi):.9f}"[:8] in out.stdout

    def test_pole_exit_code(self):
        out = run_cli("eval", "mu_alpha", "--u", "0.2", "--v", "0", "--alpha",
                      "1", "--tau", "0.9i")
        assert out.returncode == 3
        assert "lattice" in out.stderr

    def test_divergent_exit_code(self):
        out = run_cli("eval", "psi", "--upper", "0.3", "--lower", "0.7",
                      "--q", "0.25", "--z", "0.5")
        assert out.returncode == 4

    def test_parse_error_exit_code(self):
        out = run_cli("eval", "theta_q", "--x", "abc", "--q", "0.3")
        assert out.returncode == 2
        out = run_cli("eval", "theta_q", "--x", "0.4")
        assert out.returncode == 2

    def test_json_stable(self):
        args = ("eval", "theta11", "--u", "0.21+0.04i", "--tau", "0.9i", "--json")
        assert run_cli(*args).stdout == run_cli(*args).stdout


class TestVerify:
    def test_suite_passes_and_reports(self, tmp_path):
        rpt = tmp_path / "r.json"
        out = run_cli("verify", "--suite", "thm1.5", "--samples", "5",
                      "--seed", "7", "--report", str(rpt))
        assert out.returncode == 0
        doc = json.loads(rpt.read_text())
        assert doc["schema"] == "qmu-report/1"
        assert doc["run"] == {"seed": 7, "samples": 5, "tol": None}
        if jsonschema is not None:
            jsonschema.validate(doc, REPORT_SCHEMA)

    def test_impossible_tolerance_exits_five(self):
        out = run_cli("verify", "--suite", "thm1.5", "--samples", "3",
                      "--seed", "7", "--tol", "1e-30")
        assert out.returncode == 5
        assert "FAIL" in out.stdout

    def test_unknown_suite(self):
        out = run_cli("verify", "--suite", "bogus-suite")
        assert out.returncode == 2

    def test_in_process_entry_point(self, tmp_path, capsys):
        code = main(["verify", "--suite", "def1.1-alpha0", "--samples", "3",
                     "--seed", "1"])
        captured = capsys.readouterr()
        assert code == 0
        assert "PASS" in captured.out


class TestTable:
    def test_hermite_rows_match_recurrence(self):
        out = run_cli("table", "hermite", "--n", "0..4", "--w", "0.25",
                      "--q", "0.3", "--format", "csv")
        assert out.returncode == 0
        lines = out.stdout.strip().splitlines()
        assert lines[0] == "param,re,im,err"
        assert len(lines) == 6
        vals = [float(line.split(",")[1]) for line in lines[1:]]
        # rebuild by the three-term recurrence
        x = math.cos(0.25 * math.pi)
        h = [1.0, 2 * x]
        for n in range(1, 4):
            h.append(2 * x * h[n] - (1 - 0.3 ** n) * h[n - 1])
        for got, want in zip(vals, h):
            assert abs(got - want) < 1e-12

    def test_mock_theta_row_count(self):
        out = run_cli("table", "mock_theta", "--which", "f0",
                      "--q", "0.05:0.30:0.05", "--format", "csv")
        assert out.returncode == 0
        assert len(out.stdout.strip().splitlines()) == 7

    def test_gauss_sum_err_column(self):
        out = run_cli("table", "gauss_sum", "--N", "1..10")
        assert out.returncode == 0
        lines = out.stdout.strip().splitlines()[1:]
        assert len(lines) == 10
        for line in lines:
            assert float(line.split(",")[3]) <= 1e-11

    def test_malformed_range(self):
        out = run_cli("table", "hermite", "--n", "4..0", "--w", "0.25",
                      "--q", "0.3")
        assert out.returncode == 2
        out = run_cli("table", "hermite", "--n", "3", "--w", "0.25", "--q", "0.3")
        assert out.returncode == 2

    def test_json_format(self):
        out = run_cli("table", "hermite", "--n", "0..2", "--w", "0.25",
                      "--q", "0.3", "--format", "json")
        doc = json.loads(out.stdout)
        assert [row["param"] for row in doc] == [0, 1, 2]
