import json

import pytest

import wdvvkit

QUAD = "1/2*(x1^2*x3 + x1*x2^2)"
VARS = ["x1", "x2", "x3"]


def test_parse_canonical():
    assert wdvvkit.parse(VARS, QUAD) == "1/2*x1^2*x3 + 1/2*x1*x2^2"
    assert wdvvkit.parse(VARS, "x1 - x1") == "0"


def test_parse_error_is_value_error():
    with pytest.raises(ValueError) as err:
        wdvvkit.parse(VARS, "x9 + 1")
    assert "byte 0" in str(err.value)


def test_diff_and_eval():
    assert wdvvkit.diff(VARS, "x1^3*x2", "x1") == "3*x1^2*x2"
    assert wdvvkit.eval_at(VARS, "x1^2 + x2/3", ["1/2", "2", "0"]) == "11/12"


def test_kontsevich_counts_are_exact_ints():
    assert wdvvkit.kontsevich(6) == [1, 1, 12, 620, 87304, 26312976]
    assert wdvvkit.kontsevich(10)[-1] == 40739017561997799680
    assert wdvvkit.kontsevich_from_pde(10) == wdvvkit.kontsevich(10)
    assert wdvvkit.pde_certified(5)


def test_check_wdvv_verdicts():
    good = wdvvkit.check_wdvv(VARS, QUAD)
    assert good["satisfied"] and good["ordinary"] and good["witnesses"] == []

    bad = wdvvkit.check_wdvv(VARS, QUAD + " + x2^4 + x3^4")
    assert not bad["satisfied"]
    assert bad["witnesses"][0]["pair"] == (2, 3)


def test_check_lenard_clauses():
    A = [["x3", "x2", "x1"], ["x2", "x1", "0"], ["x1", "0", "0"]]
    clauses = wdvvkit.check_lenard(VARS, A)
    assert len(clauses) == 8
    assert all(c["ok"] for c in clauses)
    names = [c["name"] for c in clauses]
    assert "unity" in names and "haantjes_zero" in names


def test_check_frobenius_clauses():
    clauses = wdvvkit.check_frobenius(VARS, QUAD)
    assert all(c["ok"] for c in clauses)


def test_haantjes_zero():
    assert wdvvkit.haantjes_zero(["x1", "x2"], [["x2", "0"], ["0", "x1"]])


def test_run_roundtrip():
    code, out, err = wdvvkit.run(["kontsevich", "-k", "4"])
    assert code == 0 and err == ""
    report = json.loads(out)
    assert report["status"] == "pass"
    assert report["N"] == [[1, 1], [2, 1], [3, 12], [4, 620]]

    code, out, err = wdvvkit.run(["check-wdvv", "--bogus"])
    assert code == 2 and out == "" and "Usage" in err
