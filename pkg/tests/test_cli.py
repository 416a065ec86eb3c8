"""CLI tests: goldens, exit codes, formats, file input, determinism."""

import json
import shutil
import subprocess
import sys

import pytest
from jsonschema import validate

from gramcalc import cli
from gramcalc.verify import Case, Report

from json_schemas import (
    MULTIFACTORIAL_SCHEMA,
    POLYNOMIAL_SCHEMA,
    REPORT_SCHEMA,
    SEQUENCE_SCHEMA,
)


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestDerive:
    def test_single_grammar(self, capsys):
        code, out, err = run_cli(
            capsys, "derive", "--grammar", "a->a+b; b->b", "--expr", "ab", "--n", "1"
        )
        assert (code, out, err) == (0, "2 a b + b^2\n", "")

    def test_matrix_grammar_word(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "derive",
            "--grammar",
            "[a->a+b; b->b],[a->a; b->a-b]",
            "--expr",
            "a+b",
            "--word",
            "21",
        )
        assert (code, out) == (0, "3 a - 2 b\n")

    def test_n_zero(self, capsys):
        code, out, _ = run_cli(capsys, "derive", "--grammar", "a->a", "--expr", "a", "--n", "0")
        assert (code, out) == (0, "a\n")

    def test_json_format(self, capsys):
        code, out, _ = run_cli(
            capsys, "derive", "--grammar", "a->a+b; b->b", "--expr", "ab", "--format", "json"
        )
        assert code == 0
        payload = json.loads(out)
        validate(payload, POLYNOMIAL_SCHEMA)
        assert payload == [
            {"coeff": "2", "monomial": {"a": 1, "b": 1}},
            {"coeff": "1", "monomial": {"b": 2}},
        ]

    def test_parse_error_exits_2_with_position_on_stderr(self, capsys):
        code, out, err = run_cli(capsys, "derive", "--grammar", "a->a^(", "--expr", "a")
        assert code == 2
        assert out == ""
        assert "position" in err

    def test_word_with_single_grammar_out_of_range(self, capsys):
        code, _, err = run_cli(
            capsys, "derive", "--grammar", "a->a", "--expr", "a", "--word", "2"
        )
        assert code == 2
        assert "out of range" in err

    def test_matrix_grammar_requires_word(self, capsys):
        code, _, err = run_cli(
            capsys, "derive", "--grammar", "[a->a],[a->a^2]", "--expr", "a"
        )
        assert code == 2
        assert "operator word" in err

    def test_overflow_exits_3(self, capsys):
        big = str((1 << 63) - 1)
        code, out, err = run_cli(
            capsys, "derive", "--grammar", "a->a^2", "--expr", f"a^{big}"
        )
        assert code == 3
        assert out == ""
        assert "overflow" in err

    def test_grammar_from_file(self, capsys, tmp_path):
        path = tmp_path / "g.txt"
        path.write_text("a -> a + b ;\nb -> b\n", encoding="utf-8")
        code, out, _ = run_cli(capsys, "derive", "--grammar", f"@{path}", "--expr", "ab")
        assert (code, out) == (0, "2 a b + b^2\n")

    def test_missing_grammar_file_exits_2(self, capsys, tmp_path):
        code, _, err = run_cli(
            capsys, "derive", "--grammar", f"@{tmp_path}/nope.txt", "--expr", "a"
        )
        assert code == 2
        assert "cannot read grammar file" in err

    def test_missing_required_flag_is_usage_error(self):
        with pytest.raises(SystemExit) as info:
            cli.main(["derive", "--grammar", "a->a"])
        assert info.value.code == 2

    def test_negative_n_is_usage_error(self):
        with pytest.raises(SystemExit) as info:
            cli.main(["derive", "--grammar", "a->a", "--expr", "a", "--n", "-1"])
        assert info.value.code == 2


class TestSeq:
    def test_text_lines(self, capsys):
        code, out, _ = run_cli(
            capsys, "seq", "--grammar", "a->a^2", "--expr", "a", "--n-max", "5"
        )
        assert code == 0
        assert out.splitlines() == [
            "0 1 a",
            "1 1 a^2",
            "2 2 a^3",
            "3 6 a^4",
            "4 24 a^5",
            "5 120 a^6",
        ]

    def test_json_format(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "seq",
            "--grammar",
            "a->a^3",
            "--expr",
            "a",
            "--n-max",
            "4",
            "--format",
            "json",
        )
        assert code == 0
        payload = json.loads(out)
        validate(payload, SEQUENCE_SCHEMA)
        assert [item["coeff"] for item in payload] == ["1", "1", "3", "15", "105"]

    def test_word_sequences(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "seq",
            "--grammar",
            "[a->a; b->b],[a->a^2 b; b->a b^2]",
            "--expr",
            "a",
            "--n-max",
            "2",
            "--word",
            "12",
        )
        assert code == 0
        assert out.splitlines() == ["0 1 a", "1 3 a^2 b", "2 45 a^3 b^2"]

    def test_non_monomial_exits_4(self, capsys):
        code, out, err = run_cli(
            capsys, "seq", "--grammar", "a->a+b; b->b", "--expr", "a", "--n-max", "1"
        )
        assert code == 4
        assert out == ""
        assert "not a monomial sequence at n=1" in err


class TestVerify:
    def test_passing_suite(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "binomial-sums", "n_max=40")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "suite: binomial-sums"
        assert lines[1] == "passed: 81"
        assert lines[2] == "failed: 0"
        assert lines[3] == "result: ok"

    def test_json_format_validates(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "leibniz", "n_max=3", "--format", "json"
        )
        assert code == 0
        payload = json.loads(out)
        validate(payload, REPORT_SCHEMA)
        assert payload["passed"] == 4

    def test_unknown_suite_exits_2(self, capsys):
        code, out, err = run_cli(capsys, "verify", "bogus")
        assert code == 2
        assert out == ""
        assert "unknown suite" in err

    def test_bad_parameter_exits_2(self, capsys):
        code, _, err = run_cli(capsys, "verify", "binomial-sums", "n_max=many")
        assert code == 2
        code, _, err = run_cli(capsys, "verify", "binomial-sums", "bogus=1")
        assert code == 2
        code, _, err = run_cli(capsys, "verify", "binomial-sums", "n_max")
        assert code == 2
        assert "key=value" in err

    def test_failing_report_exits_1(self, capsys, monkeypatch):
        failing = Report(
            "leibniz",
            (Case({"n": 0}, "a", "a", True), Case({"n": 1}, "a", "b", False)),
        )
        monkeypatch.setattr(cli, "run_suite", lambda name, params: failing)
        code, out, _ = run_cli(capsys, "verify", "leibniz")
        assert code == 1
        assert "failed: 1" in out
        assert 'FAIL {"n": 1}' in out
        assert "  lhs: a" in out
        assert "result: FAILED" in out

    def test_failing_report_json_exits_1(self, capsys, monkeypatch):
        failing = Report("leibniz", (Case({"n": 1}, "a", "b", False),))
        monkeypatch.setattr(cli, "run_suite", lambda name, params: failing)
        code, out, _ = run_cli(capsys, "verify", "leibniz", "--format", "json")
        assert code == 1
        assert json.loads(out)["failed"] == 1


class TestMultifactorial:
    def test_known_values(self, capsys):
        assert run_cli(capsys, "multifactorial", "17", "5")[:2] == (0, "2856\n")
        assert run_cli(capsys, "multifactorial", "0", "7")[:2] == (0, "1\n")

    def test_json_format(self, capsys):
        code, out, _ = run_cli(capsys, "multifactorial", "20", "2", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        validate(payload, MULTIFACTORIAL_SCHEMA)
        assert payload == {"n": 20, "r": 2, "value": "3715891200"}

    def test_below_base_window_exits_2(self, capsys):
        code, out, err = run_cli(capsys, "multifactorial", "--", "-3", "2")
        assert code == 2
        assert out == ""
        assert "n < 1 - r" in err


class TestStyling:
    def test_no_color_env_strips_codes(self, capsys, monkeypatch):
        monkeypatch.setenv("NO_COLOR", "1")
        monkeypatch.setattr(sys.stdout, "isatty", lambda: True, raising=False)
        assert cli._styled("ok", "32") == "ok"
        capsys.readouterr()

    def test_tty_without_no_color_styles(self, capsys, monkeypatch):
        monkeypatch.delenv("NO_COLOR", raising=False)
        monkeypatch.setattr(sys.stdout, "isatty", lambda: True, raising=False)
        assert cli._styled("ok", "32") == "\x1b[32mok\x1b[0m"
        capsys.readouterr()

    def test_pipes_are_never_styled(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "leibniz", "n_max=0")
        assert "\x1b[" not in out


class TestSubprocessInvocation:
    ARGV = [
        sys.executable,
        "-m",
        "gramcalc",
        "verify",
        "nonexistence",
        "trials=40",
        "--format",
        "json",
    ]

    def test_byte_identical_repeated_runs(self):
        first = subprocess.run(self.ARGV, capture_output=True, check=True)
        second = subprocess.run(self.ARGV, capture_output=True, check=True)
        assert first.stdout == second.stdout
        assert first.stdout.strip()

    def test_console_script_installed(self):
        exe = shutil.which("gramcalc")
        assert exe is not None
        result = subprocess.run(
            [exe, "derive", "--grammar", "a->a+b; b->b", "--expr", "ab"],
            capture_output=True,
            text=True,
        )
        assert result.returncode == 0
        assert result.stdout == "2 a b + b^2\n"

    def test_exit_codes_cross_process(self):
        base = [sys.executable, "-m", "gramcalc"]
        checks = [
            (["derive", "--grammar", "a->a", "--expr", "a"], 0),
            (["derive", "--grammar", "a->(", "--expr", "a"], 2),
            (["seq", "--grammar", "a->a+b; b->b", "--expr", "a", "--n-max", "2"], 4),
            (["verify", "nope"], 2),
            (["derive", "--grammar", "a->a^2", "--expr", f"a^{(1 << 63) - 1}"], 3),
        ]
        for argv, expected in checks:
            result = subprocess.run(base + argv, capture_output=True)
            assert result.returncode == expected, argv
