"""End-to-end CLI tests: flags, exit codes, and stream discipline."""

from __future__ import annotations

import json

import pytest

import comdrift.cli as cli
from comdrift import PropertyViolation
from conftest import FOUR_MEMBER_SHRINK, FOUR_MEMBER_SPLIT, run_cli


class TestAnalyze:
    def test_four_member_fixture(self, four_member_csv, capsys):
        code, out, err = run_cli(["analyze", "--input", str(four_member_csv)], capsys)
        assert code == 0
        forward = out.strip().split("\n")[1].split(",")
        assert forward[forward.index("forward") + 1] == "X"
        assert format(FOUR_MEMBER_SPLIT, ".12g") in forward
        assert format(FOUR_MEMBER_SHRINK, ".12g") in forward

    def test_reads_stdin(self, four_member_csv, capsys, monkeypatch):
        import io as stdlib_io

        monkeypatch.setattr(
            "sys.stdin", stdlib_io.StringIO(four_member_csv.read_text())
        )
        code, out, _ = run_cli(["analyze"], capsys)
        assert code == 0
        assert "0.688721875541" in out

    def test_json_flag(self, four_member_csv, capsys):
        code, out, _ = run_cli(
            ["analyze", "--input", str(four_member_csv), "--json"], capsys
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["schema_version"] == 1
        assert doc["reports"][0]["forward"][0]["split"] == FOUR_MEMBER_SPLIT

    def test_output_file(self, four_member_csv, tmp_path, capsys):
        target = tmp_path / "report.csv"
        code, out, _ = run_cli(
            ["analyze", "--input", str(four_member_csv), "--output", str(target)],
            capsys,
        )
        assert code == 0
        assert out == ""  # data went to the file, not stdout
        assert "0.688721875541" in target.read_text()

    def test_identical_snapshots_zero_rows(self, tmp_path, capsys):
        source = tmp_path / "flat.csv"
        source.write_text("1,a,X\n1,b,X\n2,a,X\n2,b,X\n")
        code, out, _ = run_cli(["analyze", "--input", str(source)], capsys)
        assert code == 0
        for row in out.strip().split("\n")[1:]:
            fields = row.split(",")
            assert fields[-1] == "stable"
            assert fields[-2] == "0" and fields[-3] == "0"

    def test_single_snapshot_is_usage_error(self, tmp_path, capsys):
        source = tmp_path / "one.csv"
        source.write_text("1,a,X\n")
        code, out, err = run_cli(["analyze", "--input", str(source)], capsys)
        assert code == 2
        assert out == ""
        assert "at least two snapshots" in err

    def test_parse_error_is_usage_error(self, tmp_path, capsys):
        source = tmp_path / "bad.csv"
        source.write_text("1,a,X\nnot-a-time,b,X\n")
        code, _, err = run_cli(["analyze", "--input", str(source)], capsys)
        assert code == 2
        assert "line 2" in err

    def test_missing_file_is_io_error(self, capsys):
        code, _, err = run_cli(["analyze", "--input", "/no/such/file.csv"], capsys)
        assert code == 1
        assert "comdrift:" in err

    def test_unwritable_output_is_io_error(self, four_member_csv, capsys):
        code, _, err = run_cli(
            [
                "analyze",
                "--input",
                str(four_member_csv),
                "--output",
                "/no/such/dir/report.csv",
            ],
            capsys,
        )
        assert code == 1
        assert "comdrift:" in err

    def test_jsonl_format_flag(self, tmp_path, capsys):
        source = tmp_path / "records.jsonl"
        source.write_text(
            '{"t":1,"member":"a","community":"X"}\n{"t":2,"member":"a","community":"Y"}\n'
        )
        code, out, _ = run_cli(
            ["analyze", "--input", str(source), "--format", "jsonl"], capsys
        )
        assert code == 0
        assert out.startswith("from_time,")


class TestSimulate:
    def test_defaults_shape(self, capsys):
        code, out, _ = run_cli(["simulate"], capsys)
        assert code == 0
        lines = out.strip().split("\n")
        # one header + 3 modes * 10 m values * 21 eta points
        assert len(lines) == 1 + 3 * 10 * 21

    def test_single_mode_split_column_is_all_zero(self, capsys):
        code, out, _ = run_cli(["simulate", "--mode", "single"], capsys)
        assert code == 0
        for row in out.strip().split("\n")[1:]:
            assert row.split(",")[4] == "0"

    def test_seeded_runs_are_byte_identical(self, capsys):
        code_a, out_a, _ = run_cli(["simulate", "--seed", "7"], capsys)
        code_b, out_b, _ = run_cli(["simulate", "--seed", "7"], capsys)
        assert code_a == code_b == 0
        assert out_a == out_b

    def test_bad_m_max_is_usage_error(self, capsys):
        code, _, _ = run_cli(["simulate", "--m-max", "0"], capsys)
        assert code == 2


class TestValidate:
    def test_passes_with_summary_on_stderr(self, capsys):
        code, out, err = run_cli(["validate", "--trials", "500", "--seed", "1"], capsys)
        assert code == 0
        assert out == ""
        assert "OK" in err and "500" in err

    def test_zero_trials_is_usage_error(self, capsys):
        code, _, _ = run_cli(["validate", "--trials", "0"], capsys)
        assert code == 2

    def test_bad_gradient_step_is_usage_error(self, capsys):
        code, _, _ = run_cli(["validate", "--gradient-step", "0.5"], capsys)
        assert code == 2

    def test_violations_exit_3_with_json_dump(self, capsys, monkeypatch):
        planted = PropertyViolation(
            property="P2",
            inputs={"trial": 3, "m": 4, "eta": 0.25},
            observed=1.0,
            expected=2.0,
        )
        monkeypatch.setattr(cli, "property_suite", lambda trials, seed: [planted])
        code, out, err = run_cli(["validate", "--trials", "10"], capsys)
        assert code == 3
        dump = json.loads(out)
        assert dump[0]["property"] == "P2"
        assert dump[0]["inputs"]["m"] == 4
        assert "violation" in err


class TestUsage:
    def test_no_command_is_usage_error(self, capsys):
        code, _, _ = run_cli([], capsys)
        assert code == 2

    def test_unknown_command_is_usage_error(self, capsys):
        code, _, _ = run_cli(["frobnicate"], capsys)
        assert code == 2

    def test_log_env_var_enables_diagnostics(self, four_member_csv, capsys, monkeypatch):
        monkeypatch.setenv("COMDRIFT_LOG", "info")
        import logging

        # basicConfig is a no-op if handlers exist; capture via caplog-free check
        code, out, _ = run_cli(["analyze", "--input", str(four_member_csv)], capsys)
        assert code == 0
        for handler in logging.getLogger().handlers[:]:
            logging.getLogger().removeHandler(handler)
