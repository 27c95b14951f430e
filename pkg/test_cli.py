"""
Tests for the command-line surface
"""

import argparse

import orjson
import pytest

from cli import main
from cli.parser import parse_complex, parse_complex_list

PASSING_T = "0.5,0.6,0.55+0.1i,0.4-0.2i,0.7"


def run_json(capsys, *argv):
    code = main([*argv, "--json", "--no-timing"])
    return code, orjson.loads(capsys.readouterr().out)


class TestParseComplex:

    @pytest.mark.parametrize("text, expected", [
        ("2", 2 + 0j),
        ("-0.5i", -0.5j),
        ("0.35+0.1i", 0.35 + 0.1j),
        ("1+2I", 1 + 2j),
        (" 0.4 - 0.2i ", 0.4 - 0.2j),
    ])
    def test_values(self, text, expected):
        assert parse_complex(text) == expected

    def test_rejects_garbage(self):
        with pytest.raises(argparse.ArgumentTypeError):
            parse_complex("abc")

    def test_list(self):
        assert parse_complex_list("0.3,0.4i,") == [0.3, 0.4j]


class TestEval:

    def test_theta_at_zero_nome(self, capsys):
        code, report = run_json(capsys, "eval", "theta", "--x", "2", "--p", "0")
        assert code == 0
        assert report["passed"] is True
        assert report["outputs"]["value"] == pytest.approx([-1.0, 0.0])
        assert report["inputs"]["x"] == [2.0, 0.0]

    def test_bernoulli_polynomial(self, capsys):
        code, report = run_json(capsys, "eval", "B22", "--u", "1", "--w1", "1", "--w2", "1")
        assert code == 0
        assert report["outputs"]["value"][0] == pytest.approx(-1 / 6)
        assert report["outputs"]["err_est"] == 0.0

    def test_gamma_pole(self, capsys):
        code, report = run_json(capsys, "eval", "ell_gamma", "--z", "1", "--p", "0.2", "--q", "0.3")
        assert code == 3
        assert report["passed"] is False
        assert report["error"]["kind"] == "PoleProximity"

    def test_missing_argument(self, capsys):
        code, report = run_json(capsys, "eval", "theta", "--x", "2")
        assert code == 2
        assert "--p" in report["error"]["detail"]

    def test_finite_qpoch(self, capsys):
        code, report = run_json(capsys, "eval", "qpoch", "--x", "0.5", "--q", "0.5", "--n", "2")
        assert code == 0
        assert report["outputs"]["value"][0] == pytest.approx(0.5 * 0.75)

    def test_unknown_function(self):
        with pytest.raises(SystemExit):
            main(["eval", "zeta", "--x", "1"])

    def test_text_output(self, capsys):
        assert main(["eval", "theta", "--x", "2", "--p", "0"]) == 0
        out = capsys.readouterr().out
        assert out.startswith("eval: PASS (exit 0)")
        assert "elapsed" in out


class TestCheckTerm:

    def test_beta_term(self, capsys):
        code, report = run_json(capsys, "check-term", "--builtin", "beta")
        assert code == 0
        assert report["outputs"]["K"] == 29
        assert report["outputs"]["diophantine"]["passed"] is True
        assert [case["name"] for case in report["cases"]] == ["diophantine"]

    def test_rho_term_skips_diophantine(self, capsys):
        code, report = run_json(capsys, "check-term", "--builtin", "rho-bc", "--n", "1", "--m", "1", "--numeric")
        assert code == 0
        assert report["outputs"]["diophantine"].startswith("skipped")
        numeric = report["cases"][0]
        assert numeric["name"] == "numeric"
        assert numeric["pass"] is True

    def test_non_elliptic_term(self, capsys):
        code, report = run_json(capsys, "check-term", "--builtin", "single-gamma")
        assert code == 1
        assert report["passed"] is False
        assert report["error"] is None

    def test_term_file(self, capsys, tmp_path):
        path = tmp_path / "pair.json"
        path.write_bytes(orjson.dumps({"n": 1, "factors": [{"m": [1], "eps": 1}, {"m": [1], "eps": -1}]}))
        code, report = run_json(capsys, "check-term", str(path), "--modular")
        assert code == 0
        assert {case["name"] for case in report["cases"]} == {"diophantine", "modular"}

    @pytest.mark.parametrize("content", [None, b'{"n": 1,', b'{"n": 1, "factors": [{"m": [1]}]}'])
    def test_unreadable_term_file(self, capsys, tmp_path, content):
        path = tmp_path / "term.json"
        if content is not None:
            path.write_bytes(content)
        code, report = run_json(capsys, "check-term", str(path))
        assert code == 2
        assert report["error"]["kind"] == "DomainViolation"

    def test_unknown_builtin(self, capsys):
        code, _ = run_json(capsys, "check-term", "--builtin", "nonexistent")
        assert code == 2


class TestVerify:

    def test_suite_report(self, capsys):
        code, report = run_json(capsys, "verify", "kernel-qdiff", "--cases", "1")
        assert code == 0
        assert report["suite"] == "kernel-qdiff"
        assert report["outputs"] == {"checks": 2, "failed": 0}
        assert all(case["pass"] for case in report["cases"])

    def test_unsupported_ranks(self, capsys):
        code, report = run_json(capsys, "verify", "trafo-bc", "--n", "3", "--m", "0")
        assert code == 2
        assert report["error"]["kind"] == "DomainViolation"


class TestIntegrate:

    def test_beta(self, capsys):
        code, report = run_json(capsys, "integrate", "beta", "--p", "0.1", "--q", "0.1", "--t", PASSING_T)
        assert code == 0
        assert report["outputs"]["value"] == pytest.approx([1.0, 0.0], abs=1e-8)
        assert "t6" in report["outputs"]

    def test_beta_near_circle(self, capsys):
        code, report = run_json(
            capsys, "integrate", "beta", "--p", "0.1", "--q", "0.1", "--t", "0.3,0.4,0.5,0.35+0.1i,0.45-0.1i"
        )
        assert code == 3
        assert report["error"]["kind"] == "PoleProximity"

    def test_unsupported_rank(self, capsys):
        code, _ = run_json(capsys, "integrate", "bc", "--n", "3", "--p", "0.1", "--q", "0.1")
        assert code == 2

    def test_wrong_parameter_count(self, capsys):
        code, report = run_json(capsys, "integrate", "beta", "--p", "0.1", "--q", "0.1", "--t", "0.5,0.6")
        assert code == 2
        assert "5 values" in report["error"]["detail"]

    def test_empty_a_integral(self, capsys):
        code, report = run_json(
            capsys, "integrate", "a", "--n", "0", "--m", "1", "--p", "0.3", "--q", "0.3",
            "--s", "0.5,0.6,0.4", "--t", "0.7,0.8",
        )
        assert code == 0
        assert report["outputs"]["N"] == 0

    def test_deterministic_json(self, capsys):
        argv = ["eval", "theta", "--x", "0.3+0.4i", "--p", "0.2", "--json", "--no-timing"]
        main(argv)
        first = capsys.readouterr().out
        main(argv)
        second = capsys.readouterr().out
        assert first == second
        assert "elapsed_ms" not in first
