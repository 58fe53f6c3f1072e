import json

import pytest

import whitefox as wf


def test_version():
    assert wf.__version__ == "0.1.0"


def test_realize_verify_roundtrip():
    cert = wf.realize_unit(5, 3)
    assert cert["claim"]["class"] == 3
    assert "y^5" in cert["payload"]["presentation"]
    ok, message = wf.verify_certificate(cert)
    assert ok, message


def test_mutated_certificate_rejected():
    cert = wf.realize_unit(5, 3)
    cert["payload"]["f3"] = "2*" + cert["payload"]["f3"]
    ok, message = wf.verify_certificate(cert)
    assert not ok
    assert message


def test_factor_roundtrip():
    mat = wf.matrix(wf.zn_laurent(4), [["1", "t+2*t^2"], ["2", "1+2*t"]])
    cert = wf.factor_det_one(mat, 4)
    assert cert["kind"] == "factorization"
    ok, message = wf.verify_certificate(cert)
    assert ok, message


def test_snf_certificate():
    mat = wf.matrix(wf.fp_laurent(2), [["t+1", "1"], ["t", "t"]])
    cert = wf.snf(mat)
    assert cert["kind"] == "snf"
    ok, message = wf.verify_certificate(cert)
    assert ok, message


def test_ideals_expected_set():
    cands = wf.max_ideal_candidates(6)
    assert {(c["p"], c["omega"]) for c in cands} == {
        (2, "x+1"),
        (2, "x^2+x+1"),
        (3, "x+1"),
        (3, "x+2"),
    }


def test_fox_and_complex():
    pres = "gens: x,t; n: 5; map: x=(1,0), t=(0,1); rels: x t x^-1 t^-1, x^5"
    assert wf.fox_derivative(pres, "x t x^-1 t^-1", "x") == "-t+1"
    doc = wf.build_complex(pres)
    ok, detail = wf.verify_complex(doc)
    assert ok, detail
    doc["d2"]["entries"][1][0] = "x+1"  # tamper
    ok, detail = wf.verify_complex(doc)
    assert not ok


def test_units_and_classifier():
    assert wf.is_unit("1+2*t", 4)
    assert not wf.is_unit("1+t", 4)
    element, inverse = wf.invert_unit("1+2*t", 4)
    assert element == "2*t+1" and inverse == "2*t+1"
    assert wf.unit_multiplier(5, 2) == "x^4+x^2+1"
    assert wf.ext3_class(5, "x-1", "t-1") == 1
    assert wf.is_cocycle(5, "x-1", "t-1")
    with pytest.raises(wf.WhitefoxError):
        wf.ext3_class(5, "1", "t-1")


def test_swan_and_stable_decision():
    a = wf.matrix(wf.zn_laurent(5), [["1"]])
    module = wf.build_swan_module(5, a)
    assert module["gen_matrix"]["rows"] == 6
    ok, detail = wf.verify_swan_freeness(
        5, a, wf.matrix({"type": "norm_quotient", "n": 5}, [["1"]])
    )
    assert ok, detail

    verdict = wf.decide_scalar_stable_equiv(
        "t+4", wf.matrix(wf.zn_laurent(5), [["t+4", "0"], ["0", "1"]]), 5
    )
    assert verdict["verdict"] == "reduced"
    ok, message = wf.verify_certificate(json.dumps(verdict["certificate"]))
    assert ok, message

    obstructed = wf.decide_scalar_stable_equiv(
        "1", wf.matrix(wf.zn_laurent(5), [["t+4"]]), 5
    )
    assert obstructed["verdict"] == "obstructed"


def test_cinf_squared():
    assert wf.check_cinf_squared()
