"""Polynomial interchange documents.

A document is JSON with fields n, d, a list of terms (exponent tuple plus a
coefficient written as an integer or a rational string "p/q"), and free-form
metadata.  Parsing validates against the bundled schema and rejects each
malformed shape with a distinct error code; emission is canonical (terms in
descending lexicographic exponent order), so parse-emit round-trips are
byte-identical on canonical input.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources

import jsonschema

from .poly import Polynomial, PrimeField
from .simplex import SimplexContext, SupportSet


class DocumentError(ValueError):
    """Parse failure with a machine-readable code."""

    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


def _schema(name):
    path = resources.files("cubicstab") / "data" / "schemas" / name
    return json.loads(path.read_text())


@dataclass(frozen=True)
class PolynomialDocument:
    n: int
    d: int
    terms: tuple          # ((exponent tuple, coefficient string), ...)
    metadata: dict = field(default_factory=dict)

    def support(self, ctx: SimplexContext) -> SupportSet:
        return ctx.support(e for e, _ in self.terms)

    def polynomial(self, fld=None) -> Polynomial:
        if fld is None:
            fld = PrimeField()
        terms = {}
        for e, c in self.terms:
            terms[e] = fld.coerce(Fraction(c))
        return Polynomial(self.n + 1, fld, terms)


def _parse_coeff(raw):
    if isinstance(raw, int):
        value = Fraction(raw)
    elif isinstance(raw, str):
        try:
            value = Fraction(raw.replace(" ", ""))
        except (ValueError, ZeroDivisionError):
            raise DocumentError("malformed-coefficient",
                                "cannot read coefficient %r" % (raw,))
    else:
        raise DocumentError("malformed-coefficient",
                            "coefficient must be an integer or a string")
    if value == 0:
        raise DocumentError("zero-coefficient",
                            "zero coefficients may not be stored")
    return value


def parse_polynomial(data: bytes) -> PolynomialDocument:
    """Parse and validate a polynomial document."""
    try:
        obj = json.loads(data)
    except json.JSONDecodeError as exc:
        raise DocumentError("malformed-json", str(exc))
    try:
        jsonschema.validate(obj, _schema("polynomial_document.schema.json"))
    except jsonschema.ValidationError as exc:
        raise DocumentError("schema-violation", exc.message)
    n, d = obj["n"], obj["d"]
    seen = set()
    terms = []
    for t in obj["terms"]:
        exp = tuple(t["exp"])
        if len(exp) != n + 1:
            raise DocumentError("wrong-arity",
                                "exponent %r needs %d entries" % (exp, n + 1))
        if any(e < 0 for e in exp):
            raise DocumentError("negative-exponent",
                                "exponent %r has a negative entry" % (exp,))
        if sum(exp) != d:
            raise DocumentError("weight-mismatch",
                                "exponent %r has weight %d, document "
                                "degree is %d" % (exp, sum(exp), d))
        if exp in seen:
            raise DocumentError("duplicate-exponent",
                                "exponent %r appears twice" % (exp,))
        seen.add(exp)
        value = _parse_coeff(t["coeff"])
        terms.append((exp, _coeff_string(value)))
    if not terms:
        raise DocumentError("empty-polynomial", "document has no terms")
    return PolynomialDocument(n, d, tuple(terms),
                              dict(obj.get("metadata", {})))


def _coeff_string(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return "%d/%d" % (value.numerator, value.denominator)


def emit_polynomial(doc: PolynomialDocument) -> bytes:
    """Canonical serialization: terms sorted by descending exponent tuple."""
    terms = sorted(doc.terms, key=lambda t: t[0], reverse=True)
    obj = {"n": doc.n, "d": doc.d,
           "terms": [{"exp": list(e), "coeff": c} for e, c in terms]}
    if doc.metadata:
        obj["metadata"] = doc.metadata
    return (json.dumps(obj, indent=1, sort_keys=True) + "\n").encode()


def document_from_polynomial(p: Polynomial, d: int,
                             metadata=None) -> PolynomialDocument:
    terms = []
    for m, c in p.sorted_terms():
        if isinstance(c, int):
            terms.append((m, str(c)))
        else:
            terms.append((m, _coeff_string(Fraction(c))))
    return PolynomialDocument(p.nvars - 1, d, tuple(terms), metadata or {})
