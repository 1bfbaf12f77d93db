"""High-precision zeta values, the binomial-to-zeta linear maps, finite-form
identity generation, exact inverse-power sums, and numeric verification.

Exactness split: every ZetaExpr is exact rational data; floating arithmetic
(mpmath, at the context's working precision) appears only in zeta_value and
in the numeric verification paths, and always together with an explicit
error bound.  zeta(s) - 1 is summed from n = 2 to avoid cancellation at
large s; plain zeta(s) adds 1 back.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from mpmath import mp, mpf, nstr

from .counting import DEFAULT_GUARD, d_vector, order_polynomial
from .errors import (ArityMismatch, DivergentParameter, MissingProvenance,
                     PrecisionUnachievable)
from .polynomials import BinomialPoly, bernoulli_number
from .poset import Poset, chain, lex_sum, max_chain_length
from .series import series_of


@dataclass(frozen=True)
class PrecisionContext:
    """Numeric policy: working digits, verification tolerance, term caps.

    The tolerance must stay looser than the guaranteed truncation and
    rounding bound of each computation; the verifiers raise
    PrecisionUnachievable when they cannot honor that.
    """

    working_digits: int = 50
    verify_tolerance: float = 1e-12
    series_term_cap: int = 4000
    zeta_sum_cap: int = 2_000_000


DEFAULT_CTX = PrecisionContext()

_EM_K = 4  # Bernoulli corrections through B_8; remainder bounded by B_10 term


def _rising(s, m):
    r = 1
    for t in range(m):
        r *= s + t
    return r


def _em_tail_coeff(s):
    # |B_(2K+2)| / (2K+2)! * (s)_(2K+1), the first omitted correction
    b = abs(bernoulli_number(2 * _EM_K + 2))
    return Fraction(b) / factorial(2 * _EM_K + 2) * _rising(s, 2 * _EM_K + 1)


def _choose_em_cutoff(s, digits, cap):
    """Smallest N (floor 50) with the omitted-term bound below 10^-(digits+2)."""
    c = _em_tail_coeff(s)
    log10c = math.log10(c.numerator) - math.log10(c.denominator)
    exponent = (digits + 2 + log10c) / (s + 2 * _EM_K + 1)
    N = max(50, int(math.ceil(10 ** exponent)) + 1)
    if N > cap:
        raise PrecisionUnachievable(
            f"Euler-Maclaurin cutoff {N} exceeds cap {cap} for zeta({s})")
    return N


def _em_bound(s, N, digits):
    c = _em_tail_coeff(s)
    log10b = (math.log10(c.numerator) - math.log10(c.denominator)
              - (s + 2 * _EM_K + 1) * math.log10(N))
    truncation = 10.0 ** max(log10b, -320.0)
    rounding = 10.0 ** (-(digits + 5))
    return truncation + rounding


def _em_zeta_minus_one(s, N, dps):
    """Euler-Maclaurin for zeta(s) - 1: sum n^-s from n = 2 through N, then
    integral, half-term, and Bernoulli corrections at N."""
    with mp.workdps(dps):
        total = mpf(0)
        for n in range(2, N + 1):
            total += mpf(n) ** (-s)
        total += mpf(N) ** (1 - s) / (s - 1)
        total -= mpf(N) ** (-s) / 2
        for j in range(1, _EM_K + 1):
            b = bernoulli_number(2 * j)
            coeff = Fraction(b, factorial(2 * j)) * _rising(s, 2 * j - 1)
            total += (mpf(coeff.numerator) / coeff.denominator
                      * mpf(N) ** (-s - 2 * j + 1))
        return +total


@lru_cache(maxsize=None)
def _zeta_minus_one_cached(s, digits, cap):
    N = _choose_em_cutoff(s, digits, cap)
    value = _em_zeta_minus_one(s, N, digits + 10)
    return value, _em_bound(s, N, digits)


def zeta_value(s, ctx=DEFAULT_CTX, minus_one=False):
    """(value, error_bound) for zeta(s) or zeta(s) - 1, s an integer >= 2."""
    if not isinstance(s, int) or s < 2:
        raise ValueError("zeta_value needs an integer s >= 2")
    value, bound = _zeta_minus_one_cached(s, ctx.working_digits, ctx.zeta_sum_cap)
    if minus_one:
        return value, bound
    with mp.workdps(ctx.working_digits + 10):
        return value + 1, bound


def _fr(x):
    """Fraction -> mpf at the current working precision."""
    x = Fraction(x)
    return mpf(x.numerator) / x.denominator


@dataclass(frozen=True)
class ZetaExpr:
    """Exact rational constant plus rational coefficients over zeta(k+1).

    coeffs is a sorted tuple of (k, coefficient) pairs, k >= 1 meaning the
    coefficient multiplies zeta(k+1).  Printable both directly and against
    the shifted terms zeta(k+1) - 1 - 2^-(k+1).
    """

    constant: Fraction = Fraction(0)
    coeffs: tuple = ()
    provenance: Poset | None = None

    @staticmethod
    def make(constant=0, coeffs=None, provenance=None):
        clean = []
        for k, v in sorted((coeffs or {}).items()):
            v = Fraction(v)
            if v:
                clean.append((int(k), v))
        return ZetaExpr(Fraction(constant), tuple(clean), provenance)

    def coeff_dict(self):
        return dict(self.coeffs)

    def coeff(self, k):
        return self.coeff_dict().get(k, Fraction(0))

    def __add__(self, other):
        out = self.coeff_dict()
        for k, v in other.coeffs:
            out[k] = out.get(k, Fraction(0)) + v
        return ZetaExpr.make(self.constant + other.constant, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, r):
        r = Fraction(r)
        return ZetaExpr.make(self.constant * r,
                             {k: v * r for k, v in self.coeffs})

    def __eq__(self, other):
        return (isinstance(other, ZetaExpr)
                and self.constant == other.constant
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.constant, self.coeffs))

    def shifted_constant(self):
        """Leftover rational when the expression is written over the shifted
        basis zeta(k+1) - 1 - 2^-(k+1) with the same coefficients."""
        extra = sum((v * (1 + Fraction(1, 2 ** (k + 1))) for k, v in self.coeffs),
                    Fraction(0))
        return self.constant + extra

    def render(self, style="plain"):
        parts = []
        if style == "plain":
            terms = [(v, f"zeta({k + 1})") for k, v in self.coeffs]
            const = self.constant
        elif style == "shifted":
            terms = [(v, f"(zeta({k + 1})-1-1/{2 ** (k + 1)})")
                     for k, v in self.coeffs]
            const = self.shifted_constant()
        else:
            raise ValueError(f"unknown render style {style!r}")
        for v, base in terms:
            sign = "-" if v < 0 else ("" if not parts else "+")
            mag = abs(v)
            body = base if mag == 1 else f"{mag}*{base}"
            parts.append(f"{sign}{body}" if not parts else f"{sign} {body}")
        if const or not parts:
            sign = "-" if const < 0 else ("" if not parts else "+")
            body = str(abs(const))
            parts.append(f"{sign}{body}" if not parts else f"{sign} {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"ZetaExpr({self.render()})"

    def eval_numeric(self, ctx=DEFAULT_CTX):
        """(mpf value, error bound)."""
        with mp.workdps(ctx.working_digits + 10):
            total = _fr(self.constant)
            bound = 0.0
            for k, v in self.coeffs:
                zv, zb = zeta_value(k + 1, ctx)
                total += _fr(v) * zv
                bound += abs(float(v)) * zb
            return total, bound + 10.0 ** (-(ctx.working_digits + 5))

    def to_json_dict(self):
        return {"constant": str(self.constant),
                "zeta_coeffs": {str(k): str(v) for k, v in self.coeffs}}


def n_tilde(p):
    """C(x,k) -> zeta(k+1) for k >= 1; the constant slot C(x,0) -> 1.

    Image of p under summing p(n)(zeta(n+1)-1) over n >= 1.
    """
    coeffs = {i: v for i, v in p.coeffs.items() if i >= 1}
    return ZetaExpr.make(p.coeff(0), coeffs)


def n_tilde2(p):
    """C(x,k) -> (-1)^(k+1)(zeta(k+1)-1-2^-(k+1)) for k >= 1, C(x,0) -> 1/2.

    Image of p under the alternating sum of p(k)(zeta(k+1)-1); the rational
    shifts are folded into the constant so the result stays exact.
    """
    constant = p.coeff(0) / 2
    coeffs = {}
    for i, v in p.coeffs.items():
        if i == 0:
            continue
        signed = (-1) ** (i + 1) * v
        coeffs[i] = signed
        constant += signed * (-1 - Fraction(1, 2 ** (i + 1)))
    return ZetaExpr.make(constant, coeffs)


def zeta_number(P, variant="tilde2", guard=DEFAULT_GUARD):
    """The zeta value attached to a poset: n_tilde(Omega) for "tilde", and
    (-1)^(|P|+1) n_tilde2(Omega) for "tilde2" (chains map to the shifted
    basis elements themselves)."""
    p = order_polynomial(P, "strict", guard)
    if variant == "tilde":
        expr = n_tilde(p)
    elif variant == "tilde2":
        expr = n_tilde2(p).scale((-1) ** (len(P) + 1))
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return replace(expr, provenance=P)


def zhat(k, guard=DEFAULT_GUARD):
    """zeta(k+1) - 1 - 2^-(k+1) with chain provenance."""
    return zeta_number(chain(k), "tilde2", guard)


def operad_eval_zeta(P, args, guard=DEFAULT_GUARD):
    """Action of P on poset-provenanced zeta numbers: compose the underlying
    posets and reapply the alternating-sign map."""
    args = list(args)
    if len(args) != len(P):
        raise ArityMismatch(f"poset has {len(P)} slots, got {len(args)} values")
    for a in args:
        if a.provenance is None:
            raise MissingProvenance(
                "operad evaluation on zeta numbers needs poset provenance")
    return zeta_number(lex_sum(P, [a.provenance for a in args]), "tilde2", guard)


@dataclass(frozen=True)
class IdentityRecord:
    """A claimed equality between a zeta-shifted series and a finite form."""

    lhs_description: str
    rhs: ZetaExpr
    poset: Poset | None = None
    lhs_poly: BinomialPoly | None = None
    alternating: bool = True
    start_index: int = 1
    lhs_numeric: object = None
    rhs_numeric: object = None
    error_bound: float | None = None
    passed: bool | None = None
    notes: tuple = ()

    def to_json_dict(self):
        return {
            "poset": self.poset.to_json_dict() if self.poset else None,
            "lhs": self.lhs_description,
            "rhs": self.rhs.to_json_dict(),
            "numeric": {
                "lhs": nstr(self.lhs_numeric, 25) if self.lhs_numeric is not None else None,
                "rhs": nstr(self.rhs_numeric, 25) if self.rhs_numeric is not None else None,
                "bound": self.error_bound,
            },
            "pass": self.passed,
            "notes": list(self.notes),
        }


def _poly_tail_bound(M, D, N):
    """Exact majorant for M * sum_{k>N} k^D 2^-k (geometric comparison);
    None when the comparison ratio is not yet below 1."""
    q = Fraction((N + 2) ** D, 2 * (N + 1) ** D)
    if q >= 1:
        return None
    return M * Fraction((N + 1) ** D, 2 ** (N + 1)) / (1 - q)


def _choose_series_cap(M, D, tol, cap):
    N = max(8, 2 * D + 2)
    while N <= cap:
        t = _poly_tail_bound(M, D, N)
        if t is not None and float(t) < tol / 2:
            return N, t
        N = N + max(4, N // 4)
    raise PrecisionUnachievable(
        f"series cap {cap} cannot push the tail below {tol / 2}")


def verify_identity(rec, ctx=DEFAULT_CTX):
    """Numerically referee an IdentityRecord built on a binomial-basis LHS.

    The LHS sum is truncated where the certified tail bound drops below
    half the tolerance; the pass flag compares against the accumulated
    bound plus the tolerance.
    """
    if rec.lhs_poly is None:
        raise ValueError("record carries no summable polynomial")
    poly = rec.lhs_poly
    D = poly.max_index()
    M = sum((abs(v) for v in poly.coeffs.values()), Fraction(0))
    if not rec.alternating and D > 0:
        raise DivergentParameter(
            "non-alternating zeta-shift series need a constant polynomial")
    N, tail = _choose_series_cap(M, D, ctx.verify_tolerance, ctx.series_term_cap)
    with mp.workdps(ctx.working_digits + 10):
        total = mpf(0)
        term_bound = 0.0
        for k in range(rec.start_index, N + 1):
            pk = poly.eval(k)
            if pk == 0:
                continue
            zv, zb = zeta_value(k + 1, ctx, minus_one=True)
            sign = (-1) ** (k + 1) if rec.alternating else 1
            total += sign * _fr(pk) * zv
            term_bound += abs(float(pk)) * zb
        rhs_val, rhs_bound = rec.rhs.eval_numeric(ctx)
        bound = float(tail) + term_bound + rhs_bound
        passed = abs(total - rhs_val) <= bound + ctx.verify_tolerance
    return replace(rec, lhs_numeric=total, rhs_numeric=rhs_val,
                   error_bound=bound, passed=passed,
                   notes=rec.notes + (f"lhs summed to k={N}",))


def finite_form_identity(P, guard=DEFAULT_GUARD):
    """Finite form of sum_(k>=r0) (-1)^(k+1) Omega_strict(P,k)(zeta(k+1)-1):
    the image of the strict order polynomial under the alternating map.

    The divided-by-r intermediate identity is checked exactly at r = 2 and
    recorded as a note.
    """
    poly = order_polynomial(P, "strict", guard)
    r0 = max(1, max_chain_length(P))
    rhs = n_tilde2(poly)
    notes = []
    if len(P):
        lhs_ffe = _ffe_lhs(poly, Fraction(2))
        rhs_ffe = _ffe_rhs(P, Fraction(2), guard)
        assert lhs_ffe == rhs_ffe
        notes.append("divided-by-r form verified exactly at r=2")
    desc = (f"sum_{{k>={r0}}} (-1)^(k+1) Omega({P.relation_string()})(k) "
            f"(zeta(k+1)-1)")
    return IdentityRecord(lhs_description=desc, rhs=rhs, poset=P,
                          lhs_poly=poly, alternating=True, start_index=r0,
                          notes=tuple(notes))


def _ffe_lhs(poly, r):
    """sum_k (-1)^(k+1) p(k) / r^(k+1) as an exact rational via the strict
    basis evaluated at -1/r."""
    x = Fraction(-1, 1) / r
    total = Fraction(0)
    for i, c in poly.coeffs.items():
        total += c * x ** i / (1 - x) ** (i + 1)
    return -total / r


def _ffe_rhs(P, r, guard):
    dv = d_vector(P, guard)
    return sum((Fraction((-1) ** (i + 1)) * v / (1 + r) ** (i + 1)
                for i, v in enumerate(dv.d, start=1)), Fraction(0))


def inverse_power_sum(P, r, mode="strict", guard=DEFAULT_GUARD):
    """Exact value of sum_n Omega(P, n) / r^n for |r| > 1, in either mode.

    Evaluates the order series basiswise at x = 1/r.
    """
    r = Fraction(r)
    if abs(r) <= 1:
        raise DivergentParameter(f"need |r| > 1, got {r}")
    S = series_of(P, mode, guard)
    x = 1 / r
    total = Fraction(0)
    for i, c in S.coeffs.items():
        if mode == "strict":
            total += c * x ** i / (1 - x) ** (i + 1)
        else:
            total += c * x / (1 - x) ** (i + 1)
    return total


def inverse_power_sum_partial(P, r, terms, mode="strict", guard=DEFAULT_GUARD):
    """Direct partial sum with an exact geometric tail majorant; returns
    (partial, tail_bound).  Used as the independent referee in tests."""
    from .counting import count_maps
    r = Fraction(r)
    if abs(r) <= 1:
        raise DivergentParameter(f"need |r| > 1, got {r}")
    total = Fraction(0)
    start = 1 if mode == "weak" else 0  # weak series sum from n = 1
    for n in range(start, terms + 1):
        total += Fraction(count_maps(P, n, mode, guard)) / r ** n
    k = len(P)
    growth = Fraction((terms + 2) ** k, (terms + 1) ** k)
    q = growth / abs(r)
    if q >= 1:
        raise DivergentParameter("not enough terms for a geometric majorant")
    first = Fraction((terms + 1) ** k) / abs(r) ** (terms + 1)
    return total, first / (1 - q)


def goldbach_record():
    """sum_{n>=2} (zeta(n)-1) = 1."""
    return IdentityRecord(
        lhs_description="sum_{n>=2} (zeta(n)-1)",
        rhs=ZetaExpr.make(1), lhs_poly=BinomialPoly({0: 1}),
        alternating=False)


def alternating_unit_record():
    """sum_{n>=1} (-1)^(n+1) (zeta(n+1)-1) = 1/2."""
    return IdentityRecord(
        lhs_description="sum_{n>=1} (-1)^(n+1) (zeta(n+1)-1)",
        rhs=ZetaExpr.make(Fraction(1, 2)), lhs_poly=BinomialPoly({0: 1}),
        alternating=True)


def binomial_shift_record(k):
    """sum_{n>=k} (-1)^(n+1) C(n,k) (zeta(n+1)-1)
    = (-1)^(k+1)(zeta(k+1)-1-2^-(k+1))."""
    poly = BinomialPoly({k: 1})
    return IdentityRecord(
        lhs_description=f"sum_{{n>={k}}} (-1)^(n+1) C(n,{k}) (zeta(n+1)-1)",
        rhs=n_tilde2(poly), lhs_poly=poly, alternating=True, start_index=k)


def _inverse_square_partial_fractions(k):
    """Exact decomposition of 1/(n^k (n+1)^k) into a_i/n^i + b_i/(n+1)^i."""
    from .polynomials import binomial as binom
    a = {i: binom(-k, k - i) for i in range(1, k + 1)}
    b = {k - m: Fraction((-1) ** k) * binom(k + m - 1, m) for m in range(k)}
    assert a[1] == -b[1], "telescoping part must cancel"
    return a, b


def entry22_oracle(k):
    """Exact finite form of sum_n 1/(n^k (n+1)^k) via partial fractions and
    telescoping; independent of the printed formula."""
    a, b = _inverse_square_partial_fractions(k)
    constant = a[1] - sum(b[i] for i in range(2, k + 1))
    coeffs = {i - 1: a[i] + b[i] for i in range(2, k + 1)}
    return ZetaExpr.make(constant, coeffs)


def entry22_formula(k):
    """The printed closed form: sum over n of (1+(-1)^(k-n)) zeta(k-n) C(-k,n),
    with n = k-1 skipped and the convention zeta(0) = -1/2."""
    from .polynomials import binomial as binom
    constant = Fraction(0)
    coeffs = {}
    for n in range(k + 1):
        if n == k - 1:
            continue
        weight = (1 + (-1) ** (k - n)) * binom(-k, n)
        if weight == 0:
            continue
        s = k - n
        if s == 0:
            constant += weight * Fraction(-1, 2)
        else:
            coeffs[s - 1] = coeffs.get(s - 1, Fraction(0)) + weight
    return ZetaExpr.make(constant, coeffs)


def entry22_check(k, ctx=DEFAULT_CTX):
    """Compare the direct sum of 1/(n^k (n+1)^k) against the printed zeta
    combination; on mismatch the telescoping-oracle value is attached."""
    if k < 2:
        raise ValueError("entry22_check needs k >= 2")
    formula = entry22_formula(k)
    oracle = entry22_oracle(k)
    tol = ctx.verify_tolerance
    # integral tail: sum_{n>M} n^-2k < M^(1-2k)/(2k-1)
    M = max(64, int(math.ceil((4 / (tol * (2 * k - 1))) ** (1 / (2 * k - 1)))))
    with mp.workdps(ctx.working_digits + 10):
        total = mpf(0)
        for n in range(1, M + 1):
            total += 1 / (mpf(n) ** k * mpf(n + 1) ** k)
        tail = float(Fraction(1, (2 * k - 1) * M ** (2 * k - 1)))
        rhs_val, rhs_bound = formula.eval_numeric(ctx)
        bound = tail + rhs_bound
        passed = abs(total - rhs_val) <= bound + tol
    notes = [f"telescoping oracle: {oracle.render()}",
             f"formula matches oracle: {formula == oracle}"]
    return IdentityRecord(
        lhs_description=f"sum_{{n>=1}} 1/(n^{k} (n+1)^{k})",
        rhs=formula, lhs_numeric=total, rhs_numeric=rhs_val,
        error_bound=bound, passed=passed, notes=tuple(notes))
