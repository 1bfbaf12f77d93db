"""Exact arithmetic over the binomial-coefficient basis plus the classical
integer kernels (Stirling, Eulerian, Bernoulli).

Everything here is exact rational arithmetic; no floats.  The memo tables
live behind ``functools.lru_cache`` and are safe for concurrent readers.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .errors import IndexOutOfRange


def binomial(x, k):
    """C(x, k) as an exact rational, for integer or rational x.

    Defined via the falling factorial, so C(q, p) = 0 for integers
    0 <= q < p, and negative or fractional upper arguments work.
    """
    k = int(k)
    if k < 0:
        return Fraction(0)
    if isinstance(x, int) and x >= 0:
        return Fraction(comb(x, k))
    x = Fraction(x)
    num = Fraction(1)
    for t in range(k):
        num *= x - t
    return num / factorial(k)


def multiset_coeff(x, k):
    """((x, k)) = C(x + k - 1, k), the multiset-choose coefficient."""
    if isinstance(x, int):
        return binomial(x + k - 1, k)
    return binomial(Fraction(x) + k - 1, k)


def _clean(coeffs):
    out = {}
    for i, v in coeffs.items():
        v = Fraction(v)
        if v:
            out[int(i)] = v
    return out


class BinomialPoly:
    """Finitely supported rational coefficients over the basis {C(x, i)}.

    The same coefficient vector can be read against the multiset basis
    {C(x+i-1, i)} by passing mode="multiset" where an eval mode is taken;
    weak order polynomials use that reading.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = _clean(coeffs or {})

    def coeff(self, i):
        return self.coeffs.get(i, Fraction(0))

    def max_index(self):
        return max(self.coeffs, default=0)

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        return isinstance(other, BinomialPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other):
        out = dict(self.coeffs)
        for i, v in other.coeffs.items():
            out[i] = out.get(i, Fraction(0)) + v
        return BinomialPoly(out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, r):
        r = Fraction(r)
        return BinomialPoly({i: v * r for i, v in self.coeffs.items()})

    def eval(self, x, mode="binomial"):
        if mode == "binomial":
            return sum((v * binomial(x, i) for i, v in self.coeffs.items()),
                       Fraction(0))
        if mode == "multiset":
            return sum((v * multiset_coeff(x, i) for i, v in self.coeffs.items()),
                       Fraction(0))
        raise ValueError(f"unknown eval mode {mode!r}")

    def to_monomial(self, mode="binomial"):
        out = MonomialPoly({})
        for i, v in self.coeffs.items():
            shift = i - 1 if mode == "multiset" else 0
            out = out + _choose_monomial(i, shift).scale(v)
        return out

    def render(self, var="x"):
        if not self.coeffs:
            return "0"
        parts = []
        for i in sorted(self.coeffs):
            v = self.coeffs[i]
            base = "1" if i == 0 else f"C({var},{i})"
            parts.append(_term(v, base, first=not parts))
        return " ".join(parts)

    def to_json_dict(self):
        return {"basis": "binomial",
                "coeffs": {str(i): str(v) for i, v in sorted(self.coeffs.items())}}


class MonomialPoly:
    """Plain polynomial with exact rational coefficients over {x^i}."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = _clean(coeffs or {})

    def coeff(self, i):
        return self.coeffs.get(i, Fraction(0))

    def degree(self):
        return max(self.coeffs, default=0)

    def __eq__(self, other):
        return isinstance(other, MonomialPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other):
        out = dict(self.coeffs)
        for i, v in other.coeffs.items():
            out[i] = out.get(i, Fraction(0)) + v
        return MonomialPoly(out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def __mul__(self, other):
        out = {}
        for i, a in self.coeffs.items():
            for j, b in other.coeffs.items():
                out[i + j] = out.get(i + j, Fraction(0)) + a * b
        return MonomialPoly(out)

    def scale(self, r):
        r = Fraction(r)
        return MonomialPoly({i: v * r for i, v in self.coeffs.items()})

    def eval(self, x):
        x = Fraction(x)
        return sum((v * x ** i for i, v in self.coeffs.items()), Fraction(0))

    def neg_x(self):
        """p(-x)."""
        return MonomialPoly({i: v if i % 2 == 0 else -v
                             for i, v in self.coeffs.items()})

    def to_binomial(self):
        """Newton forward differences: coefficient of C(x,i) is the i-th
        difference of p at 0."""
        d = self.degree()
        vals = [self.eval(j) for j in range(d + 1)]
        out = {}
        for i in range(d + 1):
            out[i] = vals[0]
            vals = [vals[t + 1] - vals[t] for t in range(len(vals) - 1)]
        return BinomialPoly(out)

    def render(self, var="x"):
        if not self.coeffs:
            return "0"
        parts = []
        for i in sorted(self.coeffs):
            base = "1" if i == 0 else (var if i == 1 else f"{var}^{i}")
            parts.append(_term(self.coeffs[i], base, first=not parts))
        return " ".join(parts)

    def to_json_dict(self):
        return {"basis": "monomial",
                "coeffs": {str(i): str(v) for i, v in sorted(self.coeffs.items())}}


def _term(v, base, first):
    sign = "-" if v < 0 else ("" if first else "+")
    mag = abs(v)
    body = base if mag == 1 and base != "1" else (
        str(mag) if base == "1" else f"{mag}*{base}")
    if first:
        return f"{sign}{body}"
    return f"{sign} {body}"


@lru_cache(maxsize=None)
def _choose_monomial(i, shift):
    """Monomial expansion of C(x + shift, i)."""
    out = MonomialPoly({0: 1})
    for t in range(i):
        out = out * MonomialPoly({1: 1, 0: shift - t})
    return out.scale(Fraction(1, factorial(i)))


def x_power(n):
    return MonomialPoly({n: 1})


def eval_binomial_poly(p, x, mode="binomial"):
    return p.eval(x, mode)


def basis_convert(p, direction):
    """to_monomial on a BinomialPoly, to_binomial on a MonomialPoly."""
    if direction == "to_monomial":
        if not isinstance(p, BinomialPoly):
            raise TypeError("to_monomial expects a BinomialPoly")
        return p.to_monomial()
    if direction == "to_binomial":
        if not isinstance(p, MonomialPoly):
            raise TypeError("to_binomial expects a MonomialPoly")
        return p.to_binomial()
    raise ValueError(f"unknown direction {direction!r}")


def poly_from_json(d):
    coeffs = {int(i): Fraction(v) for i, v in d["coeffs"].items()}
    if d["basis"] == "binomial":
        return BinomialPoly(coeffs)
    if d["basis"] == "monomial":
        return MonomialPoly(coeffs)
    raise ValueError(f"unknown basis {d['basis']!r}")


@lru_cache(maxsize=None)
def stirling2(n, k):
    """Stirling number of the second kind S(n, k)."""
    if n < 0 or k < 0:
        return 0
    if n == 0 and k == 0:
        return 1
    if n == 0 or k == 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def eulerian_number(n, i):
    """A(n, i) by the explicit alternating-sum formula.

    Requires 1 <= n and 0 <= i <= n-1; terms with i+1-r <= 0 vanish.
    """
    if n < 1 or i < 0 or i > n - 1:
        raise IndexOutOfRange(f"A({n},{i}) outside 0 <= i <= n-1")
    total = 0
    for r in range(i + 1):
        total += (-1) ** r * comb(n + 1, r) * (i + 1 - r) ** n
    return total


def eulerian_polynomial(n):
    """Coefficient list of A_n(t); A_0 = 1."""
    if n == 0:
        return [1]
    return [eulerian_number(n, i) for i in range(n)]


@lru_cache(maxsize=None)
def _bernoulli_table(m):
    # Standard recurrence sum_{k<=m} C(m+1,k) B_k = 0 with B_0 = 1;
    # this yields B_1 = -1/2, flipped to +1/2 below per our convention.
    table = [Fraction(1)]
    for j in range(1, m + 1):
        acc = sum(comb(j + 1, k) * table[k] for k in range(j))
        table.append(Fraction(-acc, j + 1))
    return tuple(table)


def bernoulli_number(m):
    """Bernoulli number B_m with the B_1 = +1/2 sign convention.

    B_0 = 1, B_1 = 1/2, B_2 = 1/6, odd values >= 3 vanish.  Only B_1
    differs between the two common conventions.
    """
    if m == 1:
        return Fraction(1, 2)
    return _bernoulli_table(m)[m]
