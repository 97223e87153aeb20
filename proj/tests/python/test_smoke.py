import math

import mpmath
import pytest

import idverify


def test_listing_and_lookup():
    ids = [e["id"] for e in idverify.list_identities()]
    assert "amm-12398" in ids
    assert len(ids) == len(set(ids))
    products = idverify.list_identities("category=product")
    assert products and all(e["category"] == "product" for e in products)


def test_verify_single():
    out = idverify.verify("amm-12398")
    assert out["status"] == "pass"
    assert abs(out["computed"] - 2 / (math.e - 1)) < 1e-10


def test_unknown_id_raises():
    with pytest.raises(KeyError):
        idverify.verify("nonexistent")
    with pytest.raises(ValueError):
        idverify.list_identities("colour=red")


def test_report_round_trip():
    rep = idverify.verify_all("category=limit", profile="fast")
    assert rep["profile"] == "fast"
    assert rep["summary"]["fail"] == 0
    assert rep["summary"]["pass"] == len(rep["outcomes"])


def test_special_functions_against_mpmath():
    mpmath.mp.dps = 30
    assert abs(idverify.zeta(3) - float(mpmath.zeta(3))) < 1e-14
    assert abs(idverify.dilog(0.3) - float(mpmath.polylog(2, 0.3))) < 1e-14
    assert abs(idverify.trigamma(0.7) - float(mpmath.psi(1, 0.7))) < 1e-13
    assert abs(idverify.const_value("catalan") - float(mpmath.catalan)) < 1e-15
    assert abs(idverify.closed_form(idverify.list_identities("id=crux-4826")[0]["rhs"]) - (math.pi**2 / 12 - 0.5)) < 1e-15


def test_kernels_with_python_callables():
    v, err = idverify.integrate(lambda x: math.exp(-x * x), 0.0, math.inf)
    assert abs(v - math.sqrt(math.pi) / 2) < 1e-12
    s, _ = idverify.sum_alternating(lambda n: 1.0 / (n + 1))
    assert abs(s - math.log(2)) < 1e-13
