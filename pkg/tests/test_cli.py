import json
import random

import pytest

from supernilhecke.algebra import AlgebraElement, random_element
from supernilhecke.cli import main
from supernilhecke.exprparse import ParseError, evaluate_algebra, parse


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_nf_nilpotent(capsys):
    code, out = run_cli(capsys, "nf", "T1*T1", "--n", "2")
    assert code == 0
    assert json.loads(out) == {"terms": []}


def test_nf_twist(capsys):
    code, out = run_cli(capsys, "nf", "T1*x1", "--n", "2")
    assert code == 0
    terms = json.loads(out)["terms"]
    assert {"coeff": 1, "x": [0, 0], "w": [], "perm": [1, 2]} in terms
    assert {"coeff": 1, "x": [0, 1], "w": [], "perm": [2, 1]} in terms


def test_mul_and_act(capsys):
    code, out = run_cli(capsys, "mul", "T1", "x1", "--n", "2")
    assert code == 0
    code, out = run_cli(capsys, "act", "T1", "x1", "--n", "2")
    assert code == 0
    assert json.loads(out)["terms"] == [{"coeff": 1, "x": [0, 0], "w": []}]


def test_labeled_generator_at_minimal_label(capsys):
    code, out = run_cli(capsys, "nf", "w1^0", "--n", "2", "--m", "-1")
    assert code == 0
    assert json.loads(out)["terms"] == [
        {"coeff": 1, "x": [0, 0], "w": [1], "perm": [1, 2]}]


def test_schur_command(capsys):
    code, out = run_cli(capsys, "schur", "[]", "[1]", "--n", "2")
    assert code == 0
    terms = json.loads(out)["terms"]
    assert {"coeff": 1, "x": [0, 0], "w": [1]} in terms
    assert {"coeff": -1, "x": [0, 1], "w": [2]} in terms


def test_exit_codes(capsys):
    code, _ = run_cli(capsys, "verify", "relations", "--n", "2", "--m", "-1")
    assert code == 0
    code, _ = run_cli(capsys, "nf", "T5*x1", "--n", "2")
    assert code == 2
    code, _ = run_cli(capsys, "nf", "x1 +", "--n", "2")
    assert code == 2
    code, _ = run_cli(capsys, "nf", "w1^-5", "--n", "2", "--m", "-1")
    assert code == 2


def test_verify_suites(capsys):
    for suite in ("relations", "basis", "schur"):
        code, out = run_cli(capsys, "verify", suite, "--n", "2", "--m", "-1",
                            "--qcut", "6")
        assert code == 0, (suite, out)
        payload = json.loads(out)
        assert payload["suites"][suite]["passed"]


def test_verify_dg_and_ses(capsys):
    code, out = run_cli(capsys, "verify", "dg", "--n", "2", "--m", "-1",
                        "--N", "2", "--qcut", "6")
    assert code == 0
    code, out = run_cli(capsys, "verify", "ses", "--n", "2", "--m", "-1",
                        "--qcut", "8", "--seed", "7")
    assert code == 0


def test_json_determinism(capsys):
    a = run_cli(capsys, "verify", "ses", "--n", "2", "--qcut", "8", "--seed", "3")
    b = run_cli(capsys, "verify", "ses", "--n", "2", "--qcut", "8", "--seed", "3")
    assert a == b


def test_homology_command(capsys):
    code, out = run_cli(capsys, "homology", "--n", "1", "--m", "-1", "--N", "2",
                        "--qcut", "10")
    assert code == 0
    assert json.loads(out)["table"] == [{"q": 0, "h": 0, "dim": 1}]


def test_cyclotomic_command(capsys):
    code, out = run_cli(capsys, "cyclotomic", "--n", "2", "--N", "1",
                        "--qcut", "6")
    assert code == 0
    assert json.loads(out)["table"] == []


def test_shapovalov_command(capsys):
    code, out = run_cli(capsys, "shapovalov", "--n", "2", "--m", "0",
                        "--qcut", "8")
    assert code == 0
    assert json.loads(out)["sdim_match_after_unit"] is True


def test_parse_print_round_trip():
    rng = random.Random(5)
    for n, m in ((2, -1), (3, 0)):
        for _ in range(10):
            elt = random_element(n, m, rng)
            if elt.is_zero():
                continue
            printed = repr(elt)
            again = evaluate_algebra(parse(printed), n, m)
            assert again == elt, printed


def test_parser_precedence_and_unary():
    n, m = 2, -1
    E = AlgebraElement
    assert evaluate_algebra(parse("x1+x2*x1"), n, m) == \
        E.x(n, m, 1) + E.x(n, m, 2) * E.x(n, m, 1)
    assert evaluate_algebra(parse("-x1*x2"), n, m) == -(E.x(n, m, 1) * E.x(n, m, 2))
    assert evaluate_algebra(parse("T1*(x1+x2)"), n, m) == \
        E.T(n, m, 1) * (E.x(n, m, 1) + E.x(n, m, 2))
    assert evaluate_algebra(parse("x1^3"), n, m) == E.x(n, m, 1, 3)
    with pytest.raises(ParseError):
        parse("T1^2")
    with pytest.raises(ParseError):
        parse("x1^")
    with pytest.raises(ParseError):
        parse("q1")


def test_parse_error_offsets():
    with pytest.raises(ParseError) as err:
        parse("x1 + %")
    assert err.value.offset == 5


def test_verify_failure_exit_code(capsys, monkeypatch):
    import supernilhecke.cli as cli
    monkeypatch.setitem(
        cli.__dict__, "suite_relations",
        lambda n, m, qcut, seed: ["synthetic failure"])
    code, out = run_cli(capsys, "verify", "relations", "--n", "2")
    assert code == 1
    payload = json.loads(out)
    assert payload["suites"]["relations"]["failures"] == ["synthetic failure"]


def test_verify_all_with_jobs(capsys):
    code, out = run_cli(capsys, "verify", "all", "--n", "2", "--m", "-1",
                        "--N", "2", "--qcut", "6", "--jobs", "2")
    assert code == 0
    payload = json.loads(out)
    assert set(payload["suites"]) == {"relations", "basis", "schur", "dg", "ses"}
    assert all(v["passed"] for v in payload["suites"].values())
