import json

import pytest

import gradsk


def test_smith_normal_form():
    f = gradsk.smith_normal_form([[2, 4], [6, 8]])
    assert f["diag"] == [2, 4]
    # U*A*V = S
    import numpy  # only used by the smoke check

    u = numpy.array(f["U"])
    v = numpy.array(f["V"])
    a = numpy.array([[2, 4], [6, 8]])
    assert (u @ a @ v == numpy.array(f["S"])).all()


def test_invariant_factors():
    assert gradsk.invariant_factors(2, [[2, 4], [6, 8]]) == [2, 4]
    assert gradsk.invariant_factors(1, [[4]]) == [4]
    assert gradsk.invariant_factors(2, [[0, 2]]) == [2, 0]


def test_worked_symbol_algebra():
    assert gradsk.sk1u_toex([4, 4], 16, 7) == [2]
    assert gradsk.sk1_toex([4, 4], 16, 7) == [4]


def test_inverse_multiplier_family():
    # u = -1, m = n: both groups are Z/(n/e)
    assert gradsk.sk1u_toex([2, 4], 8, 7) == [2]
    assert gradsk.sk1_toex([2, 4], 8, 7) == [2]


def test_document_pipeline():
    doc = {"valued": {"r": [4, 4], "mu": 16, "theta": 7}}
    rep = gradsk.sk1u(doc)
    assert rep["group"]["pretty"] == "Z/2"
    assert rep["theorem"] == "ThSktotal"
    assert rep["via"] == ["InvolThm2"]
    cls = gradsk.classify(doc)
    assert cls["case"] == "TotallyRamified"
    assert cls["n"] == 16
    bridge = json.loads(gradsk.bridge_document(json.dumps(doc)))
    assert bridge["certificate"]["tameness"] == "StronglyTame"


def test_schema_errors_surface():
    with pytest.raises(gradsk.GradskError):
        gradsk.sk1u('{"valued": {"r": [1], "mu": 4, "theta": 3}}')
    with pytest.raises(gradsk.GradskError):
        gradsk.classify('{"unknown_key": 1}')


def test_verify_suite():
    reports = gradsk.verify(["snf", "toex-worked"], seed=7)
    assert all(r["pass"] for r in reports)
    assert {r["suite"] for r in reports} == {"snf", "toex-worked"}
    assert "lembe" in gradsk.suite_names()
