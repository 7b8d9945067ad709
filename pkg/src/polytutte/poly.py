"""
Exact bivariate polynomials and total-degree-truncated power series.

Both are sparse maps from exponent pairs to Python ints; zero
coefficients are never stored, so equality is equality of term maps.
"""
from __future__ import annotations

import json
from fractions import Fraction
from math import comb
from numbers import Rational
from typing import Iterable, Literal

from .errors import CapMismatch, PolymatroidError


def _clean(terms) -> dict:
    return {k: int(c) for k, c in terms.items() if c}


def _render(items, names) -> str:
    """Join ``((i, j), c)`` pairs as ``"x^2 + 2*x*y - 1"``; order is the caller's."""
    xn, yn = names
    pieces = []
    for (i, j), c in items:
        mono = []
        if i:
            mono.append(xn if i == 1 else f"{xn}^{i}")
        if j:
            mono.append(yn if j == 1 else f"{yn}^{j}")
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = "*".join(mono)
        else:
            body = "*".join([str(mag)] + mono)
        if not pieces:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(pieces) if pieces else "0"


class BivariatePolynomial:
    """Polynomial in two variables with exact integer coefficients.

    Supports ``+``, ``-``, ``*`` (with other polynomials or ints) and
    ``**`` with a nonnegative integer exponent.  ``names`` only affects
    rendering.
    """

    __slots__ = ("terms", "names")

    def __init__(self, terms=None, names=("x", "y")):
        self.terms = _clean(dict(terms or {}))
        self.names = tuple(names)

    @classmethod
    def constant(cls, c: int, names=("x", "y")):
        return cls({(0, 0): c}, names)

    @classmethod
    def monomial(cls, i: int, j: int, c: int = 1, names=("x", "y")):
        if i < 0 or j < 0:
            raise PolymatroidError("exponents must be nonnegative")
        return cls({(i, j): c}, names)

    @classmethod
    def x(cls):
        return cls({(1, 0): 1})

    @classmethod
    def y(cls):
        return cls({(0, 1): 1})

    def _coerce(self, other):
        if isinstance(other, BivariatePolynomial):
            return other
        if isinstance(other, int):
            return BivariatePolynomial.constant(other, self.names)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return BivariatePolynomial(out, self.names)

    __radd__ = __add__

    def __neg__(self):
        return BivariatePolynomial({k: -c for k, c in self.terms.items()}, self.names)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, 0) + c1 * c2
        return BivariatePolynomial(out, self.names)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise PolymatroidError(f"power must be a nonnegative int, got {k!r}")
        result = BivariatePolynomial.constant(1, self.names)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = BivariatePolynomial.constant(other)
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"BivariatePolynomial({self.to_text()!r})"

    def __str__(self):
        return self.to_text()

    def coeff(self, i: int, j: int) -> int:
        return self.terms.get((i, j), 0)

    @property
    def total_degree(self) -> int:
        return max((i + j for i, j in self.terms), default=-1)

    def degree_in(self, var: int) -> int:
        """Degree in the first (``var=0``) or second (``var=1``) variable."""
        return max((k[var] for k in self.terms), default=-1)

    def __call__(self, x, y):
        return self.evaluate(x, y)

    def evaluate(self, x, y):
        """Exact value at rational ``(x, y)``; ints and Fractions go in, a Fraction comes out."""
        x = Fraction(x)
        y = Fraction(y)
        total = Fraction(0)
        for (i, j), c in self.terms.items():
            total += c * x**i * y**j
        return total

    def sorted_terms(self):
        """Terms by descending total degree, ties broken by descending x-exponent."""
        return sorted(self.terms.items(), key=lambda kc: (-(kc[0][0] + kc[0][1]), -kc[0][0]))

    def to_text(self) -> str:
        return _render(self.sorted_terms(), self.names)

    def to_json_obj(self) -> dict:
        xn, yn = self.names
        return {"terms": [{xn: i, yn: j, "c": c} for (i, j), c in self.sorted_terms()]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(", ", ": "))

    def substitute(self, sx: "TruncatedSeries", sy: "TruncatedSeries") -> "TruncatedSeries":
        """Plug truncated series in for both variables."""
        if sx.cap != sy.cap:
            raise CapMismatch(f"caps {sx.cap} and {sy.cap} differ")
        D = sx.cap
        one = TruncatedSeries.one(D)
        xp = [one]
        yp = [one]
        for _ in range(self.degree_in(0)):
            xp.append(xp[-1] * sx)
        for _ in range(self.degree_in(1)):
            yp.append(yp[-1] * sy)
        out = TruncatedSeries({}, D)
        for (i, j), c in self.terms.items():
            out = out + (xp[i] * yp[j]).scale(c)
        return out


def poly_eval_exact(p: BivariatePolynomial, x: Rational, y: Rational) -> Fraction:
    return p.evaluate(x, y)


X = BivariatePolynomial.x()
Y = BivariatePolynomial.y()


class TruncatedSeries:
    """Bivariate power series in ``u, v`` keeping only terms with ``p + q <= cap``."""

    __slots__ = ("terms", "cap")

    def __init__(self, terms, cap: int):
        if cap < 0:
            raise PolymatroidError(f"degree cap must be >= 0, got {cap}")
        self.cap = int(cap)
        self.terms = _clean({k: c for k, c in dict(terms).items() if k[0] + k[1] <= cap})

    @classmethod
    def one(cls, cap: int):
        return cls({(0, 0): 1}, cap)

    def _check(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        if other.cap != self.cap:
            raise CapMismatch(f"caps {self.cap} and {other.cap} differ")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return TruncatedSeries(out, self.cap)

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + other.scale(-1)

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        D = self.cap
        out = {}
        for (p1, q1), c1 in self.terms.items():
            room = D - p1 - q1
            for (p2, q2), c2 in other.terms.items():
                if p2 + q2 <= room:
                    k = (p1 + p2, q1 + q2)
                    out[k] = out.get(k, 0) + c1 * c2
        return TruncatedSeries(out, D)

    def scale(self, c: int):
        return TruncatedSeries({k: c * v for k, v in self.terms.items()}, self.cap)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.cap == other.cap and self.terms == other.terms

    def __hash__(self):
        return hash((self.cap, frozenset(self.terms.items())))

    def coeff(self, p: int, q: int) -> int:
        return self.terms.get((p, q), 0)

    def sorted_terms(self):
        """Ascending total degree, ties broken by descending u-exponent."""
        return sorted(self.terms.items(), key=lambda kc: (kc[0][0] + kc[0][1], -kc[0][0]))

    def to_text(self) -> str:
        return _render(self.sorted_terms(), ("u", "v"))

    def to_json_obj(self) -> dict:
        return {
            "degree": self.cap,
            "terms": [{"u": p, "v": q, "c": c} for (p, q), c in self.sorted_terms()],
        }

    def __repr__(self):
        return f"TruncatedSeries({self.to_text()!r}, cap={self.cap})"

    __str__ = to_text

    def difference(self, other: "TruncatedSeries") -> dict:
        """Exponent pairs where the two series disagree, mapped to ``(self, other)``."""
        keys = set(self.terms) | set(other.terms)
        return {k: (self.coeff(*k), other.coeff(*k)) for k in sorted(keys)
                if self.coeff(*k) != other.coeff(*k)}


def series_geom(m: int, var: Literal["u", "v", "uv"], cap: int) -> TruncatedSeries:
    """Truncations of ``(1-u)^{-m}``, ``(1-v)^{-m}`` or ``(1-uv)^{m}``."""
    if m < 0:
        raise PolymatroidError(f"multiplicity must be >= 0, got {m}")
    if var == "u":
        return TruncatedSeries({(k, 0): comb(k + m - 1, k) if m else int(k == 0)
                                for k in range(cap + 1)}, cap)
    if var == "v":
        return TruncatedSeries({(0, k): comb(k + m - 1, k) if m else int(k == 0)
                                for k in range(cap + 1)}, cap)
    if var == "uv":
        return TruncatedSeries({(k, k): (-1) ** k * comb(m, k) for k in range(min(m, cap // 2) + 1)}, cap)
    raise PolymatroidError(f"var must be 'u', 'v' or 'uv', got {var!r}")


def expand_transformed_tutte(records: Iterable, cap: int) -> TruncatedSeries:
    """Truncation of ``sum (1-u)^{-(oi+ie)} (1-v)^{-(oe+ie)} (1-uv)^{ie}``.

    ``records`` holds ``(oi, oe, ie)`` triples or objects exposing those
    attributes.  Each summand is the polynomial summand
    ``x^oi y^oe (x+y-1)^ie`` after ``x = 1/(1-u)``, ``y = 1/(1-v)``.
    """
    counts: dict = {}
    for r in records:
        key = r.exponents if hasattr(r, "exponents") else tuple(r)
        counts[key] = counts.get(key, 0) + 1
    out = TruncatedSeries({}, cap)
    for (oi, oe, ie), mult in sorted(counts.items()):
        term = series_geom(oi + ie, "u", cap) * series_geom(oe + ie, "v", cap) * series_geom(ie, "uv", cap)
        out = out + term.scale(mult)
    return out
