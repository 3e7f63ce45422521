"""Integration tests for the ytc command line."""

import json

import pytest

from ytc.cli.main import EXIT_CAPACITY, EXIT_DOMAIN, EXIT_OK, build_parser, run


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestYoung:
    """Test the young and homotopy commands."""

    def test_example_json(self, capsys):
        """Test the twelve facets of the (5, 4, 2) complex as JSON."""
        code, out, _ = invoke(capsys, "young", "--lambda", "5,4,2", "-t", "3", "--json")
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload["status"] == "proper"
        assert len(payload["facets"]) == 12
        assert payload["facets"][0] == [1, 2, 6, 7, 11]

    def test_text(self, capsys):
        """Test one facet per line."""
        code, out, _ = invoke(capsys, "young", "--lambda", "2,2", "-t", "1")
        assert code == EXIT_OK
        assert out.splitlines() == ["{1,2}", "{1,3}", "{2,3}"]

    def test_bad_partition(self, capsys):
        """Test that a parse error names the offending part."""
        code, _, err = invoke(capsys, "young", "--lambda", "2,3", "-t", "1")
        assert code == EXIT_DOMAIN
        assert "part 2" in err

    def test_homotopy(self, capsys):
        """Test the homotopy type of the (3, 3, 3, 3) rectangle."""
        code, out, _ = invoke(capsys, "homotopy", "--lambda", "3,3,3,3", "-t", "2")
        assert code == EXIT_OK
        assert out.strip() == "S^2 v 3*S^1"


class TestHomology:
    """Test the homology command."""

    def test_dual_complex(self, capsys):
        """Test homology of the dual complex from -n and -k."""
        code, out, _ = invoke(capsys, "homology", "-n", "9", "-k", "3", "-t", "2")
        assert code == EXIT_OK
        assert out.strip() == "b1=3 b2=1"

    def test_gf2_json(self, capsys):
        """Test the JSON Betti vector over GF(2)."""
        code, out, _ = invoke(
            capsys, "homology", "--lambda", "2,2", "-t", "1", "--field", "gf2", "--json"
        )
        assert code == EXIT_OK
        assert json.loads(out) == {"-1": 0, "0": 0, "1": 1}

    def test_missing_input(self, capsys):
        """Test that a shape or a path ideal is required."""
        code, _, err = invoke(capsys, "homology", "-t", "2")
        assert code == EXIT_DOMAIN
        assert "--lambda" in err


class TestInvariants:
    """Test the invariant commands."""

    def test_pd(self, capsys):
        """Test a published projective dimension."""
        code, out, _ = invoke(capsys, "pd", "-n", "19", "-t", "4", "-k", "3")
        assert code == EXIT_OK
        assert out.strip() == "5"

    def test_pd_oracle(self, capsys):
        """Test that the brute-force path gives the same value."""
        code, out, _ = invoke(capsys, "pd", "-n", "9", "-t", "2", "-k", "3", "--oracle")
        assert code == EXIT_OK
        assert out.strip() == "4"

    def test_pd_zero_ideal(self, capsys):
        """Test that k above the matching number is a domain error."""
        code, _, err = invoke(capsys, "pd", "-n", "5", "-t", "2", "-k", "3")
        assert code == EXIT_DOMAIN
        assert "floor(n/t)" in err

    def test_capacity(self, capsys):
        """Test that exceeding an enumeration cap exits with 2."""
        code, out, err = invoke(capsys, "pd", "-n", "16", "-t", "1", "-k", "2", "--oracle")
        assert code == EXIT_CAPACITY
        assert out == ""
        assert "hochster_max_universe" in err

    def test_dim(self, capsys):
        """Test the Krull dimension by formula and oracle."""
        assert invoke(capsys, "dim", "-n", "9", "-t", "2", "-k", "3")[1].strip() == "7"
        assert invoke(capsys, "dim", "-n", "9", "-t", "2", "-k", "3", "--oracle")[1].strip() == "7"

    def test_leray(self, capsys):
        """Test the Leray number by formula and oracle."""
        assert invoke(capsys, "leray", "-n", "9", "-t", "2", "-k", "3")[1].strip() == "3"
        code, out, _ = invoke(capsys, "leray", "-n", "9", "-t", "2", "-k", "3", "--oracle")
        assert code == EXIT_OK
        assert out.strip() == "3"

    def test_leray_void(self, capsys):
        """Test that the void dual complex is a domain error on both paths."""
        assert invoke(capsys, "leray", "-n", "5", "-t", "2", "-k", "3")[0] == EXIT_DOMAIN
        code = invoke(capsys, "leray", "-n", "5", "-t", "2", "-k", "3", "--oracle")[0]
        assert code == EXIT_DOMAIN

    def test_helly(self, capsys):
        """Test the Helly number and the single-row convention."""
        assert invoke(capsys, "helly", "--lambda", "5,4,2", "-t", "3")[1].strip() == "5"
        assert invoke(capsys, "helly", "--lambda", "5", "-t", "2")[1].strip() == "simplex"
        out = invoke(capsys, "helly", "--lambda", "5", "-t", "2", "--oracle")[1]
        assert out.strip() == "simplex"


class TestPathIdeal:
    """Test the pathideal and dual commands."""

    def test_generators(self, capsys):
        """Test generator supports one per line."""
        code, out, _ = invoke(capsys, "pathideal", "-n", "5", "-t", "2", "-k", "2")
        assert code == EXIT_OK
        assert out.splitlines() == ["1 2 3 4", "1 2 4 5", "2 3 4 5"]

    def test_generators_json(self, capsys):
        """Test the monomial JSON schema."""
        code, out, _ = invoke(capsys, "pathideal", "-n", "9", "-t", "2", "-k", "3", "--json")
        payload = json.loads(out)
        assert (payload["n"], payload["t"], payload["k"]) == (9, 2, 3)
        assert len(payload["supports"]) == 20

    def test_dual(self, capsys):
        """Test that both dual constructions print the same complex."""
        _, formula, _ = invoke(capsys, "dual", "-n", "7", "-t", "2", "-k", "2", "--json")
        _, oracle, _ = invoke(capsys, "dual", "-n", "7", "-t", "2", "-k", "2", "--oracle", "--json")
        assert json.loads(formula) == json.loads(oracle)
        assert json.loads(formula)["universe"] == list(range(1, 8))

    def test_dual_empty(self, capsys):
        """Test the text rendering of the empty duals."""
        assert invoke(capsys, "dual", "-n", "3", "-t", "2", "-k", "2")[1].strip() == "void"
        assert invoke(capsys, "dual", "-n", "4", "-t", "2", "-k", "2")[1].strip() == "irrelevant"

    def test_invalid_spec(self, capsys):
        """Test that n = 0 is a domain error."""
        assert invoke(capsys, "pathideal", "-n", "0", "-t", "2", "-k", "1")[0] == EXIT_DOMAIN


class TestGraph:
    """Test the graph command."""

    def test_dot(self, capsys):
        """Test the GraphViz output."""
        code, out, _ = invoke(capsys, "graph", "-n", "9", "-k", "3", "-t", "2", "--dot")
        assert code == EXIT_OK
        assert out.startswith("digraph G {")
        assert '"9,3" -> "7,2" [label=0];' in out
        assert out.count("->") == 9

    def test_text(self, capsys):
        """Test edges followed by path counts."""
        code, out, _ = invoke(capsys, "graph", "-n", "9", "-k", "3", "-t", "2")
        lines = out.splitlines()
        assert lines[0] == "9,3 -> 7,2 A:0"
        assert "N(6,3,2) = 1" in lines

    def test_precondition(self, capsys):
        """Test that n - kt <= t has no graph."""
        assert invoke(capsys, "graph", "-n", "8", "-k", "3", "-t", "2")[0] == EXIT_DOMAIN

    def test_dot_and_json_exclusive(self, capsys):
        """Test that the two output formats cannot be combined."""
        code = invoke(capsys, "graph", "-n", "9", "-k", "3", "-t", "2", "--dot", "--json")[0]
        assert code == EXIT_DOMAIN


class TestDecomp:
    """Test the decomp command."""

    def test_vd(self, capsys):
        """Test a positive and a negative verdict."""
        assert invoke(capsys, "decomp", "--lambda", "3,2", "-t", "2")[1].strip() == "true"
        assert invoke(capsys, "decomp", "--lambda", "3,3", "-t", "2")[1].strip() == "false"

    def test_shelling_json(self, capsys):
        """Test a shelling certificate as JSON."""
        code, out, _ = invoke(
            capsys, "decomp", "--lambda", "2,2", "-t", "1", "--kind", "shelling", "--json"
        )
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload["kind"] == "shelling"
        assert payload["order"] == [[1, 2], [1, 3], [2, 3]]


class TestVerify:
    """Test the verify command."""

    def test_small_range(self, capsys):
        """Test a passing report and its summary line."""
        code, out, _ = invoke(
            capsys, "verify", "--max-n", "5", "--max-t", "2", "--max-k", "2", "--max-cells", "4"
        )
        assert code == EXIT_OK
        lines = out.splitlines()
        assert lines[0].startswith("PASS reference-tables")
        assert lines[-1] == "17/17 checks passed"

    def test_json_with_timings(self, capsys):
        """Test the JSON report with wall times."""
        code, out, _ = invoke(
            capsys,
            "verify",
            "--max-n",
            "4",
            "--max-t",
            "2",
            "--max-k",
            "1",
            "--max-cells",
            "3",
            "--timings",
            "--json",
        )
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload["passed"] is True
        assert all(check["seconds"] is not None for check in payload["checks"])

    def test_invalid_bounds(self, capsys):
        """Test that nonpositive bounds are rejected."""
        assert invoke(capsys, "verify", "--max-n", "0")[0] == EXIT_DOMAIN


class TestParser:
    """Test argument handling."""

    def test_usage_errors(self, capsys):
        """Test that malformed command lines exit with 1."""
        assert invoke(capsys)[0] == EXIT_DOMAIN
        assert invoke(capsys, "pd", "-n", "9")[0] == EXIT_DOMAIN
        assert invoke(capsys, "frobnicate")[0] == EXIT_DOMAIN
        assert invoke(capsys, "pd", "-n", "x", "-t", "2", "-k", "1")[0] == EXIT_DOMAIN

    def test_version(self, capsys):
        """Test the version flag."""
        code, out, _ = invoke(capsys, "--version")
        assert code == EXIT_OK
        assert out.startswith("ytc ")

    def test_log_level(self, capsys):
        """Test that diagnostics stay off stdout."""
        code, out, _ = invoke(
            capsys, "--log-level", "debug", "pd", "-n", "19", "-t", "4", "-k", "3"
        )
        assert code == EXIT_OK
        assert out.strip() == "5"
        code = invoke(capsys, "--log-level", "chatty", "pd", "-n", "9", "-t", "2", "-k", "1")[0]
        assert code == EXIT_DOMAIN

    def test_oracle_flag_scope(self):
        """Test that --oracle is only offered where a brute-force path exists."""
        parser = build_parser()
        assert parser.parse_args(["dim", "-n", "4", "-t", "2", "-k", "1", "--oracle"]).oracle
        with pytest.raises(Exception):
            parser.parse_args(["young", "--lambda", "2", "-t", "1", "--oracle"])
