"""Smoke tests for the compiled circim extension."""

import json

import pytest

import circim

QUADRATIC = {"terms": [{"k": 2, "re": 1, "im": 0}, {"k": 1, "re": 3, "im": 0}, {"k": 0, "re": 1, "im": 0}]}
BALANCED = {"terms": [{"k": 1, "re": 1, "im": 0}, {"k": -1, "re": 1, "im": 0}]}
LINEAR = {"terms": [{"k": 1, "re": 1, "im": 0}]}
SHIFTED = {"terms": [{"k": 1, "re": 1, "im": 0}, {"k": 0, "re": 1, "im": 0}]}


def coeffs(h):
    return {(t["i"], t["j"]): t["c"] for t in h["terms"]}


def test_compute_h_quartic():
    h = circim.compute_h(QUADRATIC)
    assert h["vars"] == ["x", "y"]
    c = coeffs(h)
    assert c[(4, 0)] == "1"
    assert c[(2, 2)] == "2"
    assert c[(0, 2)] == "-9"
    assert len(c) == 7


def test_compute_hc_json_round_trips():
    hc = json.loads(circim.compute_hc_json(json.dumps(BALANCED)))
    assert hc["vars"] == ["w", "wbar"]


def test_classify_verdicts():
    assert circim.classify(QUADRATIC)["verdict"] == "FINITE_GAP"
    line = circim.classify(BALANCED)
    assert line["verdict"] == "LINE_INFINITE_GAP"
    assert "eta_squared" in line


def test_intersection_bound():
    assert circim.intersection_bound(0, 2, 0, 2) == 8
    with pytest.raises(ValueError):
        circim.intersection_bound(3, 2, 0, 1)


def test_bound_report():
    rep = circim.bound(LINEAR, SHIFTED)
    assert rep["bound"] == 2
    assert rep["common_factor"] is False
    assert rep["numeric_count"] == 2
    assert "numeric_count" not in circim.bound(LINEAR, SHIFTED, with_count=False)


def test_sample_curve():
    pts = circim.sample_curve(json.dumps(LINEAR), 64)
    assert len(pts) == 64
    x, y = pts[0]
    assert abs(x - 1.0) < 1e-12 and abs(y) < 1e-12


def test_verify_extra_point():
    assert circim.verify_extra_point_json(json.dumps(QUADRATIC), complex(0, 0)) is True
    assert circim.verify_extra_point_json(json.dumps(QUADRATIC), complex(5, 0)) is False


def test_construct():
    ex = json.loads(circim.construct_json([("1/2", "0")]))
    assert ex["N"] == 1
    assert ex["certified_min_modulus"] > 1


def test_input_error_is_value_error():
    with pytest.raises(ValueError):
        circim.compute_h({"terms": [{"k": 0, "re": 1, "im": 0}]})
