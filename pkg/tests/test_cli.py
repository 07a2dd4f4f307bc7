"""Command line surface: formats, exit codes, determinism."""

import json
from fractions import Fraction

import pytest

from degenmath.cli import EXIT_CHECK_FAILED, EXIT_DOMAIN, EXIT_OK, EXIT_USAGE, build_parser, grid_from_args, main
from degenmath.identities import DEFAULT_GRID


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


class TestTable:
    def test_s2_csv_row(self, capsys):
        code, out = run_cli(capsys, "table", "s2", "--nmax", "3", "--lambda", "1/2", "--format", "csv")
        assert code == EXIT_OK
        lines = out.strip().splitlines()
        assert lines[0] == "n,k,value"
        assert "3,2,3/2" in lines

    def test_harmonic_plain(self, capsys):
        code, out = run_cli(capsys, "table", "harmonic", "--nmax", "3", "--lambda", "0")
        assert code == EXIT_OK
        values = [line.split("\t")[1] for line in out.strip().splitlines()]
        assert values == ["0", "1", "3/2", "11/6"]

    def test_bernoulli_plain_constant_term(self, capsys):
        code, out = run_cli(capsys, "table", "bernoulli", "--nmax", "2", "--lambda", "1/2")
        assert code == EXIT_OK
        row = [line for line in out.splitlines() if line.startswith("2:")][0]
        assert "1/8" in row  # constant term of the n = 2 polynomial at lambda = 1/2

    def test_hyperharmonic_needs_r(self, capsys):
        code, _ = run_cli(capsys, "table", "hyperharmonic", "--nmax", "3")
        assert code == EXIT_DOMAIN

    def test_r_on_other_family_is_domain_error(self, capsys):
        code, _ = run_cli(capsys, "table", "bernoulli", "--nmax", "3", "--r", "2")
        assert code == EXIT_DOMAIN

    def test_unknown_family_usage_error(self, capsys):
        assert main(["table", "nope", "--nmax", "3"]) == EXIT_USAGE

    def test_decimal_lambda_rejected(self, capsys):
        assert main(["table", "s2", "--nmax", "3", "--lambda", "0.5"]) == EXIT_USAGE

    def test_json_roundtrip_bytes(self, capsys):
        # negative rationals use the = form so argparse does not read them as flags
        code, out = run_cli(
            capsys, "table", "s1", "--nmax", "4", "--lambda=-3/7", "--format", "json"
        )
        assert code == EXIT_OK
        parsed = json.loads(out)
        assert parsed["family"] == "s1"
        assert parsed["lambda"] == "-3/7"
        redumped = json.dumps(parsed, indent=2) + "\n"
        assert redumped == out

    def test_output_file(self, capsys, tmp_path):
        target = tmp_path / "table.csv"
        code, out = run_cli(
            capsys, "table", "s2", "--nmax", "2", "--format", "csv", "--output", str(target)
        )
        assert code == EXIT_OK
        assert out == ""
        assert target.read_text().startswith("n,k,value")


class TestEval:
    def test_fubini(self, capsys):
        code, out = run_cli(capsys, "eval", "fubini", "--n", "2", "--lambda", "0", "--x", "1")
        assert code == EXIT_OK and out.strip() == "3"

    def test_bell(self, capsys):
        code, out = run_cli(capsys, "eval", "bell", "--n", "0", "--lambda", "2/3", "--x", "7")
        assert code == EXIT_OK and out.strip() == "1"

    def test_euler(self, capsys):
        code, out = run_cli(capsys, "eval", "euler", "--n", "1", "--lambda", "1/2", "--x", "1/2")
        assert code == EXIT_OK and out.strip() == "0"

    def test_missing_x_is_usage_error(self, capsys):
        assert main(["eval", "fubini", "--n", "2", "--lambda", "0"]) == EXIT_USAGE

    def test_scalar_family_is_usage_error(self, capsys):
        assert main(["eval", "harmonic", "--n", "2", "--lambda", "0", "--x", "1"]) == EXIT_USAGE


class TestSeries:
    def test_dlog(self, capsys):
        code, out = run_cli(capsys, "series", "dlog", "--lambda", "1/2", "--order", "2")
        assert code == EXIT_OK and out.strip() == "[0, 1, -1/4]"

    def test_hypergf_classical(self, capsys):
        code, out = run_cli(capsys, "series", "hypergf", "--r", "1", "--lambda", "0", "--order", "3")
        assert code == EXIT_OK and out.strip() == "[0, 1, 3/2, 11/6]"

    def test_dpolylog_classical(self, capsys):
        code, out = run_cli(
            capsys, "series", "dpolylog", "--k", "2", "--lambda", "0", "--order", "3"
        )
        assert code == EXIT_OK and out.strip() == "[0, 1, 1/4, 1/9]"

    def test_dexp_json(self, capsys):
        code, out = run_cli(
            capsys, "series", "dexp", "--lambda", "0", "--order", "3", "--format", "json"
        )
        assert code == EXIT_OK
        doc = json.loads(out)
        assert doc == {"coeffs": ["1", "1", "1/2", "1/6"], "order": 3}

    def test_invalid_selector(self, capsys):
        assert main(["series", "nope", "--order", "3"]) == EXIT_USAGE


class TestCheck:
    SMALL = ["--nmax", "3", "--rmax", "2", "--pmax", "1", "--lambdas", "0,1/2", "--order", "8"]

    def test_small_grid_all_pass(self, capsys):
        code, out = run_cli(capsys, "check", *self.SMALL)
        assert code == EXIT_OK
        assert "all identities passed" in out

    def test_single_identity(self, capsys):
        code, out = run_cli(capsys, "check", "--id", "T15", "--nmax", "2")
        assert code == EXIT_OK
        assert out.splitlines()[0].startswith("T15: pass")

    def test_unknown_id(self, capsys):
        assert main(["check", "--id", "NOPE"]) == EXIT_USAGE

    def test_json_schema_and_determinism(self, capsys):
        code, first = run_cli(capsys, "check", *self.SMALL, "--format", "json")
        assert code == EXIT_OK
        code, second = run_cli(capsys, "check", *self.SMALL, "--format", "json")
        assert first == second  # byte-identical for a fixed config
        doc = json.loads(first)
        assert doc["all_pass"] is True
        assert {r["id"] for r in doc["results"]} >= {"T1", "T15", "E67"}

    def test_csv(self, capsys):
        code, out = run_cli(capsys, "check", "--id", "C15", "--nmax", "4", "--format", "csv")
        assert code == EXIT_OK
        assert out.strip().splitlines() == ["id,pass_count,fail_count", "C15,3,0"]

    def test_default_grid_is_acceptance_grid(self):
        parser = build_parser()
        args = parser.parse_args(["check", "--all"])
        assert grid_from_args(args) == DEFAULT_GRID

    def test_grid_flags_override(self):
        parser = build_parser()
        args = parser.parse_args(["check", "--nmax", "5", "--lambdas", "0,1/3", "--tolerance", "1/100"])
        grid = grid_from_args(args)
        assert grid.nmax == 5
        assert grid.lambdas == (Fraction(0), Fraction(1, 3))
        assert grid.e67_tol == Fraction(1, 100)
        assert grid.rmax == DEFAULT_GRID.rmax


class TestList:
    def test_plain_lists_all(self, capsys):
        code, out = run_cli(capsys, "list")
        assert code == EXIT_OK
        ids = [line.split("\t")[0] for line in out.strip().splitlines()]
        assert ids[:3] == ["T1", "T2", "T3"]
        assert "E67" in ids and "C15" in ids

    def test_json_schema(self, capsys):
        code, out = run_cli(capsys, "list", "--format", "json")
        assert code == EXIT_OK
        doc = json.loads(out)
        t12 = next(entry for entry in doc if entry["id"] == "T12")
        assert t12["params"]["x"] == "symbolic"
        e67 = next(entry for entry in doc if entry["id"] == "E67")
        assert "tol" in e67["params"]
