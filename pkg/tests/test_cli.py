"""CLI behavior: output shapes, exit codes, environment default, and the
byte determinism of the verification command."""

import pytest

from cobcalc.cli import EXIT_DOMAIN, EXIT_OK, EXIT_USAGE, EXIT_VERIFY, main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_alpha_example(capsys):
    code, out, _ = run(capsys, "alpha", "2", "2", "--max-degree", "4")
    assert code == EXIT_OK
    assert out.strip() == "-5/2*P1^3+4*P1*P2-3/2*P3"


def test_chern_example(capsys):
    code, out, _ = run(capsys, "chern", "--class", "CP1^2", "--omega", "1,1")
    assert code == EXIT_OK
    assert out.strip() == "8"


def test_json_format(capsys):
    import json

    code, out, _ = run(capsys, "alpha", "1", "1", "--format", "json", "--max-degree", "4")
    assert code == EXIT_OK
    body = json.loads(out)
    assert body["class"] == "-P1"
    assert body["schema"] == "1"


def test_domain_error_exit_code(capsys):
    code, _, err = run(capsys, "chern", "--class", "CP0", "--omega", "1")
    assert code == EXIT_DOMAIN
    assert "indices start at 1" in err


def test_usage_error_exit_code(capsys):
    code, _, _ = run(capsys, "alpha", "2", "2", "--bogus")
    assert code == EXIT_USAGE


def test_unknown_subcommand(capsys):
    code, _, _ = run(capsys, "frobnicate")
    assert code == EXIT_USAGE


def test_bad_omega_usage(capsys):
    code, _, err = run(capsys, "chern", "--class", "CP1", "--omega", "a,b")
    assert code == EXIT_USAGE
    assert "omega" in err


def test_env_default_cap(capsys, monkeypatch):
    monkeypatch.setenv("FGL_MAX_DEGREE", "4")
    code, out, _ = run(capsys, "alpha", "2", "2")
    assert code == EXIT_OK
    assert out.strip() == "-5/2*P1^3+4*P1*P2-3/2*P3"


def test_bad_env_cap(capsys, monkeypatch):
    monkeypatch.setenv("FGL_MAX_DEGREE", "lots")
    code, _, err = run(capsys, "alpha", "1", "1")
    assert code == EXIT_DOMAIN
    assert "FGL_MAX_DEGREE" in err


def test_cap_out_of_range(capsys):
    code, _, err = run(capsys, "alpha", "1", "1", "--max-degree", "99")
    assert code == EXIT_DOMAIN


def test_krichever_check_exit_codes(capsys):
    code, out, _ = run(capsys, "krichever-check", "--law", "abel", "--max-degree", "6")
    assert code == EXIT_OK
    assert "pass" in out
    code, out, _ = run(capsys, "krichever-check", "--law", "universal", "--max-degree", "6")
    assert code == EXIT_VERIFY
    assert "fail" in out


def test_verify_single_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "hoehn", "--max-degree", "6")
    assert code == EXIT_OK
    assert "checks passed" in out
    assert "FAIL" not in out


def test_verify_unknown_suite(capsys):
    code, _, err = run(capsys, "verify", "--suite", "bogus")
    assert code == EXIT_DOMAIN
    assert "unknown suite" in err


def test_verify_deterministic_bytes(capsys):
    _, first, _ = run(capsys, "verify", "--suite", "abel", "--max-degree", "6")
    _, second, _ = run(capsys, "verify", "--suite", "abel", "--max-degree", "6")
    assert first == second


def test_generators_text_output(capsys):
    code, out, _ = run(capsys, "generators", "--kind", "z", "--degree", "3", "--max-degree", "6")
    assert code == EXIT_OK
    assert "z_k degree 3" in out
    assert "s=6" in out


def test_hoehn_negative_rational(capsys):
    code, out, _ = run(capsys, "hoehn", "--max-degree", "4", "--", "1/2", "-2/3", "5", "0")
    assert code == EXIT_OK
    assert "P1 ->" in out


def test_parse_print_round_trip_on_emitted_expressions(capsys):
    """Every class the CLI prints parses back to the same canonical text."""
    from cobcalc.exprparse import parse_poly
    from cobcalc.ring import mu_ring

    ring = mu_ring(8)
    emitted = []
    _, out, _ = run(capsys, "alpha", "2", "3")
    emitted.append(out.strip())
    _, out, _ = run(capsys, "star", "--left", "CP1", "--right", "CP1")
    emitted.append(out.strip())
    for text in emitted:
        assert parse_poly(ring, text).to_text() == text
