"""CLI behaviour: output formats, determinism, exit codes."""

import json

import pytest

from weylcodes.cli import execute


def run(capsys, *argv):
    code = execute(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_codes_table(capsys):
    code, out, _ = run(capsys, "codes")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("name")
    assert len(lines) == 5
    assert any(line.startswith("d18") for line in lines)


def test_fidelity_value(capsys):
    code, out, _ = run(capsys, "fidelity", "--code", "d18", "--p", "0.1")
    assert code == 0
    assert out.strip() == "0.958441"


def test_fidelity_asymmetric_point(capsys):
    code, out, _ = run(
        capsys, "fidelity", "--code", "five", "--p", "0.01",
        "--channel", "asymmetric", "--kappa", "2.0",
    )
    assert code == 0
    value = float(out)
    assert 0.99 < value < 1.0


def test_polynomial_json_schema(capsys):
    code, out, _ = run(capsys, "polynomial", "--code", "d18", "--channel", "correlated")
    assert code == 0
    payload = json.loads(out)
    assert payload["variables"] == ["p", "kappa", "mu"]
    # mu-term of the correlated expansion: +2 p^2 mu
    assert {"exp": [2, 0, 1], "num": 2, "den": 1} in payload["terms"]


def test_term_table_dump(capsys):
    code, out, _ = run(capsys, "polynomial", "--code", "d18", "--terms")
    assert code == 0
    payload = json.loads(out)
    assert payload["code"] == "d18" and len(payload["terms"]) == 36
    assert all({"operator", "weight"} <= set(t) for t in payload["terms"])


def test_threshold_report(capsys):
    code, out, _ = run(capsys, "threshold", "--code", "d50")
    assert code == 0
    payload = json.loads(out)
    assert payload["code"] == "d50"
    assert payload["threshold"] == pytest.approx(0.43, abs=0.01)
    assert payload["validity_bound"] == pytest.approx(0.335, abs=1e-3)


def test_compare_csv_format_and_ordering(capsys):
    code, out, _ = run(
        capsys, "compare", "--codes", "d50,d18,five,seven", "--p", "0:0.026:0.002"
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "p,d50,d18,five,seven"
    assert len(lines) == 15
    first_row = lines[1].split(",")
    assert all(float(x) == pytest.approx(1.0) for x in first_row[1:])
    for line in lines[2:]:
        p, f50, f18, f5, f7 = (float(x) for x in line.split(","))
        assert f50 > f18 > f5 > f7


def test_compare_json_format(capsys):
    code, out, _ = run(
        capsys, "compare", "--codes", "d18,five", "--p", "0:0.01:0.005",
        "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["p"] == [0.0, 0.005, 0.01]
    assert len(payload["d18"]) == 3 and payload["d18"][0] == 1.0
    assert set(payload) == {"p", "d18", "five"}


def test_compare_deterministic_output(capsys):
    _, first, _ = run(capsys, "compare", "--codes", "d18,seven", "--p", "0:0.02:0.001",
                      "--channel", "asymmetric", "--kappa", "20")
    _, second, _ = run(capsys, "compare", "--codes", "d18,seven", "--p", "0:0.02:0.001",
                       "--channel", "asymmetric", "--kappa", "20")
    assert first == second


def test_usage_errors_exit_2(capsys):
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "fidelity", "--code", "banana", "--p", "0.1")[0] == 2
    assert run(capsys, "fidelity", "--code", "d18")[0] == 2
    assert run(capsys, "polynomial", "--code", "d18", "--channel", "gaussian")[0] == 2


def test_domain_errors_exit_3(capsys):
    # kappa * p > 1
    code, _, err = run(
        capsys, "fidelity", "--code", "five", "--p", "0.3",
        "--channel", "asymmetric", "--kappa", "4",
    )
    assert code == 3 and "kappa*p" in err
    assert run(capsys, "fidelity", "--code", "d18", "--p", "0.1", "--kappa", "2")[0] == 3
    assert run(capsys, "fidelity", "--code", "d18", "--p", "0.1", "--channel",
               "correlated", "--mu", "2")[0] == 3
    assert run(capsys, "compare", "--codes", "d18", "--p", "0:0.1:-0.01")[0] == 3
    assert run(capsys, "compare", "--codes", "banana", "--p", "0:0.1:0.01")[0] == 3
    # correlated channels are qudit-only
    assert run(capsys, "polynomial", "--code", "five", "--channel", "correlated")[0] == 3


def test_fidelity_warns_outside_validity_domain(capsys):
    # d50 at p = 0.4 is past the weight-positivity bound; value still reported
    code, out, err = run(capsys, "fidelity", "--code", "d50", "--p", "0.4")
    assert code == 0
    assert float(out) > 0
    assert "weight-positivity bound" in err
    # and no warning inside the domain
    code, _, err = run(capsys, "fidelity", "--code", "d50", "--p", "0.1")
    assert code == 0 and err == ""


def test_compare_fig2_right_ordering(capsys):
    # at kappa = 20 the seven-qubit curve sits above d18 at small p
    # (the leading orders 441 p^2 vs 802 p^2 govern only up to p ~ 1.5e-3)
    code, out, _ = run(
        capsys, "compare", "--codes", "seven,d18", "--p", "0.0001:0.001:0.0001",
        "--channel", "asymmetric", "--kappa", "20",
    )
    assert code == 0
    for line in out.strip().splitlines()[1:]:
        _, f7, f18 = (float(x) for x in line.split(","))
        assert f7 > f18
