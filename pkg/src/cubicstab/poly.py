"""Exact multivariate polynomial arithmetic over a prime field or the
rationals.

Monomials are plain exponent tuples; polynomials are monomial->coefficient
dicts wrapped in a small class.  The default coefficient field is the prime
field with p = 2147483647 (rational coefficients are exact but much slower
and exist for auditing).
"""

from __future__ import annotations

from fractions import Fraction

try:
    from gmpy2 import mpq as _mpq
except ImportError:  # pragma: no cover
    _mpq = Fraction

DEFAULT_PRIME = 2147483647


class PrimeField:
    def __init__(self, p: int = DEFAULT_PRIME):
        if p < 2:
            raise ValueError("p must be a prime >= 2")
        self.p = p
        self.zero = 0
        self.one = 1

    name = property(lambda self: "prime:%d" % self.p)

    def coerce(self, a):
        num = getattr(a, "numerator", a)
        den = getattr(a, "denominator", 1)
        if den == 1:
            return int(num) % self.p
        return int(num) * self.inv(int(den)) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of 0 in GF(%d)" % self.p)
        return pow(a, self.p - 2, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and self.p == other.p

    def __hash__(self):
        return hash(("prime", self.p))

    def __repr__(self):
        return "PrimeField(%d)" % self.p


class RationalField:
    zero = _mpq(0)
    one = _mpq(1)
    name = "rational"

    def coerce(self, a):
        if isinstance(a, Fraction):
            return _mpq(a.numerator, a.denominator)
        return _mpq(a)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return 1 / self.coerce(a)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("rational")

    def __repr__(self):
        return "RationalField()"


def field_from_name(name: str):
    if name == "rational":
        return RationalField()
    if name.startswith("prime:"):
        return PrimeField(int(name.split(":", 1)[1]))
    raise ValueError("unknown field %r (use 'rational' or 'prime:<p>')" % name)


def grevlex_key(m):
    """Sort key for degree-reverse-lexicographic order (larger key wins)."""
    return (sum(m), tuple(-e for e in reversed(m)))


class Polynomial:
    """Sparse polynomial: dict from exponent tuple to nonzero coefficient."""

    __slots__ = ("nvars", "field", "terms")

    def __init__(self, nvars, field, terms=None):
        self.nvars = nvars
        self.field = field
        self.terms = {}
        if terms:
            for m, c in (terms.items() if isinstance(terms, dict) else terms):
                m = tuple(m)
                if len(m) != nvars:
                    raise ValueError("exponent %r has wrong length" % (m,))
                c = field.coerce(c)
                if c != field.zero:
                    self.terms[m] = c

    @classmethod
    def variable(cls, k, nvars, field):
        m = tuple(1 if i == k else 0 for i in range(nvars))
        return cls(nvars, field, {m: 1})

    def _compat(self, other):
        if self.nvars != other.nvars or self.field != other.field:
            raise ValueError("polynomials over different rings")

    def is_zero(self):
        return not self.terms

    def leading_monomial(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return max(self.terms, key=grevlex_key)

    def leading_coefficient(self):
        return self.terms[self.leading_monomial()]

    def total_degree(self):
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self):
        degs = {sum(m) for m in self.terms}
        return len(degs) <= 1

    def monic(self):
        if not self.terms:
            return self
        inv = self.field.inv(self.leading_coefficient())
        mul = self.field.mul
        return Polynomial(self.nvars, self.field,
                          {m: mul(c, inv) for m, c in self.terms.items()})

    def __add__(self, other):
        self._compat(other)
        f = self.field
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = f.add(out.get(m, f.zero), c)
            if s == f.zero:
                out.pop(m, None)
            else:
                out[m] = s
        return Polynomial(self.nvars, f, out)

    def __sub__(self, other):
        return self + other.scale(self.field.neg(self.field.one))

    def scale(self, c):
        f = self.field
        c = f.coerce(c)
        if c == f.zero:
            return Polynomial(self.nvars, f)
        return Polynomial(self.nvars, f,
                          {m: f.mul(v, c) for m, v in self.terms.items()})

    def shift(self, mono):
        """Multiply by the monomial with exponent tuple mono."""
        return Polynomial(self.nvars, self.field,
                          {tuple(a + b for a, b in zip(m, mono)): c
                           for m, c in self.terms.items()})

    def __mul__(self, other):
        self._compat(other)
        f = self.field
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = f.add(out.get(m, f.zero), f.mul(c1, c2))
                if s == f.zero:
                    out.pop(m, None)
                else:
                    out[m] = s
        return Polynomial(self.nvars, f, out)

    def derivative(self, k):
        f = self.field
        out = {}
        for m, c in self.terms.items():
            e = m[k]
            if e:
                dm = tuple(v - 1 if i == k else v for i, v in enumerate(m))
                dc = f.mul(c, f.coerce(e))
                if dc != f.zero:
                    out[dm] = dc
        return Polynomial(self.nvars, f, out)

    def __eq__(self, other):
        return (isinstance(other, Polynomial)
                and self.nvars == other.nvars and self.field == other.field
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.nvars, self.field, frozenset(self.terms.items())))

    def sorted_terms(self):
        return sorted(self.terms.items(),
                      key=lambda t: grevlex_key(t[0]), reverse=True)

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for m, c in self.sorted_terms():
            mono = "*".join("x%d%s" % (k, "^%d" % e if e > 1 else "")
                            for k, e in enumerate(m) if e)
            bits.append("%s*%s" % (c, mono) if mono else str(c))
        return " + ".join(bits)


def euler_combination(f: Polynomial) -> Polynomial:
    """sum_k x_k * df/dx_k; equals deg(f) * f for homogeneous f."""
    out = Polynomial(f.nvars, f.field)
    for k in range(f.nvars):
        out = out + f.derivative(k).shift(
            tuple(1 if i == k else 0 for i in range(f.nvars)))
    return out
