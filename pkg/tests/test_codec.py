import json

import pytest

from cubicstab.codec import (DocumentError, PolynomialDocument,
                             document_from_polynomial, emit_polynomial,
                             parse_polynomial)
from cubicstab.poly import PrimeField, RationalField
from cubicstab.simplex import build_simplex


def _fermat_doc():
    return {"n": 6, "d": 3,
            "terms": [{"exp": [3 if i == k else 0 for i in range(7)],
                       "coeff": 1} for k in range(7)]}


def test_parse_fermat():
    doc = parse_polynomial(json.dumps(_fermat_doc()).encode())
    assert doc.n == 6 and doc.d == 3 and len(doc.terms) == 7
    ctx = build_simplex(6, 3)
    assert len(doc.support(ctx)) == 7


def _expect_code(obj, code):
    with pytest.raises(DocumentError) as err:
        parse_polynomial(json.dumps(obj).encode())
    assert err.value.code == code


def test_distinct_error_codes():
    base = _fermat_doc()
    bad = dict(base); bad["terms"] = base["terms"] + [base["terms"][0]]
    _expect_code(bad, "duplicate-exponent")
    bad = dict(base)
    bad["terms"] = [{"exp": [2, 0, 0, 0, 0, 0, 0], "coeff": 1}]
    _expect_code(bad, "weight-mismatch")
    bad = dict(base)
    bad["terms"] = [{"exp": [3, 0, 0], "coeff": 1}]
    _expect_code(bad, "wrong-arity")
    bad = dict(base)
    bad["terms"] = [{"exp": [4, -1, 0, 0, 0, 0, 0], "coeff": 1}]
    _expect_code(bad, "negative-exponent")
    bad = dict(base)
    bad["terms"] = [{"exp": [3, 0, 0, 0, 0, 0, 0], "coeff": 0}]
    _expect_code(bad, "zero-coefficient")
    bad = dict(base)
    bad["terms"] = [{"exp": [3, 0, 0, 0, 0, 0, 0], "coeff": "one third"}]
    _expect_code(bad, "malformed-coefficient")
    bad = dict(base); bad["terms"] = []
    _expect_code(bad, "empty-polynomial")
    bad = dict(base); del bad["d"]
    _expect_code(bad, "schema-violation")
    with pytest.raises(DocumentError) as err:
        parse_polynomial(b"{not json")
    assert err.value.code == "malformed-json"


def test_roundtrip_byte_identical():
    doc = parse_polynomial(json.dumps(_fermat_doc()).encode())
    blob = emit_polynomial(doc)
    assert emit_polynomial(parse_polynomial(blob)) == blob


def test_rational_coefficients():
    obj = {"n": 2, "d": 2, "terms": [
        {"exp": [2, 0, 0], "coeff": "-3/7"},
        {"exp": [0, 1, 1], "coeff": "2"}]}
    doc = parse_polynomial(json.dumps(obj).encode())
    p = doc.polynomial(RationalField())
    assert p.terms[(2, 0, 0)] == RationalField().coerce(-3) / 7
    assert doc.polynomial(PrimeField(11)).terms[(2, 0, 0)] == \
        (-3 * pow(7, -1, 11)) % 11
    with pytest.raises(ZeroDivisionError):
        doc.polynomial(PrimeField(7))  # denominator divisible by p


def test_document_from_polynomial_roundtrip():
    doc = parse_polynomial(json.dumps(_fermat_doc()).encode())
    p = doc.polynomial(RationalField())
    again = document_from_polynomial(p, 3)
    assert {e for e, _ in again.terms} == {e for e, _ in doc.terms}
