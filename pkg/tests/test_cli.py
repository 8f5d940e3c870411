"""Command line interface: outputs and exit codes."""

import json

import pytest

from avchow import cli
from avchow.verify import FAIL, Check, run_checks

TOY_SPEC = {
    "name": "toy",
    "generators": [{"name": "x", "degree": 1}],
    "relations": ["x^4"],
    "normalization": {"element": "x^3", "value": "1"},
}


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestBasicCommands:
    def test_nf(self, capsys):
        code, out, _ = run(capsys, "nf", "--ring", "a2_tilde", "lambda1^2")
        assert code == 0
        assert out.strip() == "2*lambda2"

    def test_degree_table_value(self, capsys):
        code, out, _ = run(capsys, "degree", "--ring", "a3_tilde", "sigma1^6")
        assert code == 0
        assert out.strip() == "-4103/144"

    def test_degree_accepts_named_classes(self, capsys):
        code, out, _ = run(capsys, "degree", "--ring", "a3_tilde", "A111*lambda1*sigma2")
        assert code == 0
        assert out.strip() == "1/192"

    def test_hilbert(self, capsys):
        code, out, _ = run(capsys, "hilbert", "--ring", "a2_tilde")
        assert code == 0
        assert out.strip() == "1,2,2,1"

    def test_hilbert_with_max(self, capsys):
        code, out, _ = run(capsys, "hilbert", "--ring", "a1_tilde", "--max", "3")
        assert code == 0
        assert out.strip() == "1,1,0,0"

    def test_pairing_default_bases(self, capsys):
        code, out, _ = run(capsys, "pairing", "--ring", "a1_tilde", "--deg", "0")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0].startswith("rows:")
        assert lines[1].startswith("cols:")
        assert lines[2] == "1/2"

    def test_pairing_explicit(self, capsys):
        code, out, _ = run(
            capsys,
            "pairing",
            "--ring",
            "a2_tilde",
            "--deg",
            "2",
            "--rows",
            "lambda1^2",
            "lambda1*sigma1",
            "--cols",
            "lambda1",
            "sigma1",
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[2:] == ["1/2880,0", "0,-1/24"]

    def test_solve_class(self, capsys):
        code, out, _ = run(
            capsys,
            "solve-class",
            "--ring",
            "a1_tilde",
            "--deg",
            "1",
            "--values",
            "1/2",
        )
        assert code == 0
        assert out.strip() == "sigma1"

    def test_solve_class_value_count_mismatch(self, capsys):
        code, _, err = run(
            capsys,
            "solve-class",
            "--ring",
            "a3_tilde",
            "--deg",
            "3",
            "--values",
            "1,2",
        )
        assert code == 2
        assert "values" in err

    def test_push_fiber(self, capsys):
        code, out, _ = run(capsys, "push", "--map", "x2_tilde", "t^3")
        assert code == 0
        assert out.strip() == "1/4*sigma1"

    def test_push_torelli(self, capsys):
        code, out, _ = run(capsys, "push", "--map", "torelli", "xi0 + 2*xi1")
        assert code == 0
        assert out.strip() == "18*lambda1*sigma1 - 2*sigma1^2"


class TestFileRings:
    def test_ring_from_file(self, capsys, tmp_path):
        path = tmp_path / "toy.json"
        path.write_text(json.dumps(TOY_SPEC))
        code, out, _ = run(capsys, "degree", "--ring", str(path), "x^3")
        assert code == 0
        assert out.strip() == "1"

    def test_hilbert_finds_top_without_expectations(self, capsys, tmp_path):
        path = tmp_path / "toy.json"
        path.write_text(json.dumps(TOY_SPEC))
        code, out, _ = run(capsys, "hilbert", "--ring", str(path))
        assert code == 0
        assert out.strip() == "1,1,1,1"

    def test_invalid_spec_is_usage_error(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        bad = dict(TOY_SPEC, relations=["x + 1"])
        path.write_text(json.dumps(bad))
        code, _, err = run(capsys, "nf", "--ring", str(path), "x")
        assert code == 2
        assert "/relations/0" in err


class TestTables:
    def test_all_tables(self, capsys):
        code, out, _ = run(capsys, "tables")
        assert code == 0
        for tid in ("2a", "2b", "3a", "3b", "3c", "3d", "3e", "3f", "3g", "3h", "4a"):
            assert f"table {tid}" in out

    def test_single_table(self, capsys):
        code, out, _ = run(capsys, "tables", "--id", "3e")
        assert code == 0
        assert out.startswith("table 3e")
        assert "1/181440" in out
        assert "table 3f" not in out

    def test_unknown_table(self, capsys):
        code, _, err = run(capsys, "tables", "--id", "9x")
        assert code == 2
        assert "unknown table" in err

    def test_recomputed_values_match_catalog(self, capsys):
        code, out, _ = run(capsys, "tables", "--id", "3g")
        assert code == 0
        assert "-1/16" in out and "-47/16" in out and "1/1451520" in out


class TestVerify:
    def test_scope_exit_zero(self, capsys):
        code, out, _ = run(capsys, "verify", "--scope", "a1_tilde")
        assert code == 0
        assert "4 checks: 4 passed, 0 failed, 0 skipped" in out

    def test_json_schema(self, capsys):
        code, out, _ = run(capsys, "verify", "--scope", "table:3b", "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert set(data) == {"checks", "summary"}
        assert len(data["checks"]) == 25
        assert data["summary"] == {"pass": 25, "fail": 0, "skipped": 0}

    def test_unknown_scope_is_usage_error(self, capsys):
        code, _, err = run(capsys, "verify", "--scope", "nope")
        assert code == 2
        assert "unknown scope" in err

    def test_failing_check_exits_one(self, capsys, monkeypatch):
        class Fake:
            def run_verification(self, scope="all", jobs=None):
                bad = Check(
                    id="x",
                    group="g",
                    citation="c",
                    evaluate=lambda: ("1", "2", FAIL),
                )
                return run_checks([bad])

        monkeypatch.setattr(cli, "default_catalog", lambda: Fake())
        code, out, _ = run(capsys, "verify")
        assert code == 1
        assert "[FAIL]" in out

    def test_jobs_flag_output_identical(self, capsys):
        code1, out1, _ = run(capsys, "verify", "--scope", "a3_tilde")
        code2, out2, _ = run(capsys, "verify", "--scope", "a3_tilde", "--jobs", "4")
        assert (code1, out1) == (code2, out2)


class TestUsageErrors:
    def test_unknown_ring(self, capsys):
        code, _, err = run(capsys, "nf", "--ring", "nope", "x")
        assert code == 2
        assert "unknown ring" in err

    def test_parse_error(self, capsys):
        code, _, err = run(capsys, "nf", "--ring", "a1_tilde", "lambda1 + + 2")
        assert code == 2
        assert "error" in err

    def test_missing_subcommand(self, capsys):
        with pytest.raises(SystemExit) as info:
            cli.main([])
        assert info.value.code == 2

    def test_unknown_flag(self, capsys):
        with pytest.raises(SystemExit) as info:
            cli.main(["verify", "--wat"])
        assert info.value.code == 2

    def test_degree_needs_normalization(self, capsys):
        code, _, err = run(capsys, "degree", "--ring", "a2_partial", "lambda1^2")
        assert code == 2
        assert "normalization" in err
