"""Order series over the inclusion-exclusion basis, with Hadamard and
ordinal products, the strict/weak involution, and the operadic action.

A strict series is a coefficient vector over Z_i = x^i/(1-x)^(i+1), a weak
series over Z+_i = x/(1-x)^(i+1); index 0 holds the units 1/(1-x) and
x/(1-x).  Vectors are never truncated: all identities here are exact in
the basis, and power-series expansion exists only for cross-checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb

from .counting import DEFAULT_GUARD, _check_guard, d_vector
from .errors import (ArityMismatch, CrossCheckMismatch, MissingProvenance,
                     ModeMismatch, UnknownIdentity)
from .polynomials import MonomialPoly
from .poset import (Poset, chain, disjoint_union, lex_sum, ordinal_sum)

STRICT = "strict"
WEAK = "weak"


class SeriesVec:
    """Finitely supported exact-rational coefficients over the strict or
    weak inclusion-exclusion basis, with optional generating poset."""

    __slots__ = ("mode", "coeffs", "provenance")

    def __init__(self, mode, coeffs=None, provenance=None):
        if mode not in (STRICT, WEAK):
            raise ValueError(f"unknown mode {mode!r}")
        self.mode = mode
        clean = {}
        for i, v in (coeffs or {}).items():
            v = Fraction(v)
            if v:
                clean[int(i)] = v
        self.coeffs = clean
        self.provenance = provenance

    def coeff(self, i):
        return self.coeffs.get(i, Fraction(0))

    def support(self):
        return sorted(self.coeffs)

    def max_index(self):
        return max(self.coeffs, default=0)

    def is_zero(self):
        return not self.coeffs

    # provenance is metadata; mathematical equality is mode + coefficients
    def __eq__(self, other):
        return (isinstance(other, SeriesVec)
                and self.mode == other.mode
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.mode, frozenset(self.coeffs.items())))

    def __add__(self, other):
        if self.mode != other.mode:
            raise ModeMismatch("cannot add strict and weak series")
        out = dict(self.coeffs)
        for i, v in other.coeffs.items():
            out[i] = out.get(i, Fraction(0)) + v
        return SeriesVec(self.mode, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, r):
        return SeriesVec(self.mode,
                         {i: v * Fraction(r) for i, v in self.coeffs.items()})

    def render(self):
        if not self.coeffs:
            return "0"
        sym = "Z" if self.mode == STRICT else "Z+"
        parts = []
        for i in sorted(self.coeffs):
            v = self.coeffs[i]
            sign = "-" if v < 0 else ("" if not parts else "+")
            mag = abs(v)
            body = f"{sym}_{i}" if mag == 1 else f"{mag} {sym}_{i}"
            parts.append(f"{sign}{body}" if not parts else f"{sign} {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"SeriesVec({self.mode}: {self.render()})"

    def to_json_dict(self):
        return {
            "mode": self.mode,
            "coeffs": {str(i): str(v) for i, v in sorted(self.coeffs.items())},
            "provenance": (self.provenance.to_json_dict()
                           if self.provenance is not None else None),
        }

    @staticmethod
    def from_json_dict(d):
        prov = d.get("provenance")
        return SeriesVec(
            d["mode"],
            {int(i): Fraction(v) for i, v in d["coeffs"].items()},
            Poset.from_json_dict(prov) if prov else None,
        )


def basis_series(i, mode=STRICT):
    """Z_i (strict) or Z+_i (weak); provenance chain(i), chain(0) = empty."""
    return SeriesVec(mode, {i: 1}, provenance=chain(i))


def series_of(P, mode=STRICT, guard=DEFAULT_GUARD):
    """Order series of P in basis coordinates: the d-vector for strict,
    the signed vector (-1)^(|P|-i) d_i for weak; empty poset gives the unit."""
    k = len(P)
    if k == 0:
        return SeriesVec(mode, {0: 1}, provenance=P)
    dv = d_vector(P, guard)
    if mode == STRICT:
        coeffs = {i + 1: v for i, v in enumerate(dv.d)}
    else:
        coeffs = {i + 1: (-1) ** (k - i - 1) * v for i, v in enumerate(dv.d)}
    return SeriesVec(mode, coeffs, provenance=P)


@dataclass(frozen=True)
class ClosedForm:
    """numerator(x) / (1-x)^den_power with exact rational numerator."""

    numerator: tuple
    den_power: int
    mode: str

    def numerator_poly(self):
        return MonomialPoly(dict(enumerate(self.numerator)))

    def h_star(self):
        """Numerator with a single leading x factor removed; for weak series
        of a poset this is the Ehrhart h* numerator of its order polytope."""
        if self.mode != WEAK:
            raise ModeMismatch("h* is read off the weak closed form")
        nums = list(self.numerator)
        if nums and nums[0] != 0:
            raise ValueError("weak closed form should have no constant term")
        return tuple(nums[1:])

    def expand(self, terms):
        """First `terms` power-series coefficients (exact)."""
        from .polynomials import binomial
        p = self.den_power
        out = []
        for t in range(terms):
            acc = Fraction(0)
            for j, c in enumerate(self.numerator):
                if j <= t:
                    acc += c * binomial(t - j + p - 1, p - 1)
            out.append(acc)
        return out

    def to_json_dict(self):
        return {"numerator": [str(c) for c in self.numerator],
                "den_power": self.den_power}


def closed_form(S):
    """Collect a SeriesVec over the common denominator (1-x)^(max+1)."""
    m = S.max_index()
    num = MonomialPoly({})
    one_minus_x = MonomialPoly({0: 1, 1: -1})
    for i, c in S.coeffs.items():
        pw = MonomialPoly({0: 1})
        for _ in range(m - i):
            pw = pw * one_minus_x
        lead = MonomialPoly({i: 1}) if S.mode == STRICT else MonomialPoly({1: 1})
        num = num + (lead * pw).scale(c)
    deg = num.degree() if num.coeffs else 0
    coeffs = tuple(num.coeff(t) for t in range(deg + 1))
    return ClosedForm(coeffs, m + 1, S.mode)


@lru_cache(maxsize=None)
def _cup_constants(n, s):
    """Hadamard structural constants: Z_n cup Z_s as {index: int}."""
    if s > n:
        n, s = s, n
    return {n + j: comb(n + j, s) * comb(s, j) for j in range(s + 1)}


def hadamard(s1, s2):
    """Hadamard product of strict series (coefficient-wise product of the
    underlying power series); realizes disjoint union on provenance."""
    if s1.mode != STRICT or s2.mode != STRICT:
        raise ModeMismatch("hadamard is defined on strict series only")
    out = {}
    for i, a in s1.coeffs.items():
        for j, b in s2.coeffs.items():
            for k, m in _cup_constants(i, j).items():
                out[k] = out.get(k, Fraction(0)) + a * b * m
    prov = None
    if s1.provenance is not None and s2.provenance is not None:
        prov = disjoint_union(s1.provenance, s2.provenance)
    return SeriesVec(STRICT, out, provenance=prov)


def ordinal_mul(s1, s2):
    """Ordinal product: bilinear extension of Z_a, Z_b -> Z_(a+b); realizes
    the ordinal sum (stacking s1 below s2) on provenance."""
    if s1.mode != STRICT or s2.mode != STRICT:
        raise ModeMismatch("ordinal product is defined on strict series only")
    out = {}
    for i, a in s1.coeffs.items():
        for j, b in s2.coeffs.items():
            out[i + j] = out.get(i + j, Fraction(0)) + a * b
    prov = None
    if s1.provenance is not None and s2.provenance is not None:
        prov = ordinal_sum(s1.provenance, s2.provenance)
    return SeriesVec(STRICT, out, provenance=prov)


def iota(S):
    """Sign-twisted substitution x -> 1/x exchanging weak and strict series.

    Needs the generating poset (the sign depends on |P|); an involution.
    """
    if S.provenance is None:
        raise MissingProvenance("iota needs the generating poset")
    k = len(S.provenance)
    flipped = {i: (-1) ** (k - i) * v for i, v in S.coeffs.items()}
    other = WEAK if S.mode == STRICT else STRICT
    return SeriesVec(other, flipped, provenance=S.provenance)


@lru_cache(maxsize=None)
def _chain_slot_series(P, lengths, guard):
    return series_of(lex_sum(P, [chain(k) for k in lengths]), STRICT, guard)


def _multilinear_eval(P, args, guard):
    supports = [sorted(a.coeffs.items()) for a in args]
    acc = SeriesVec(STRICT, {})
    for combo in product(*supports):
        coeff = Fraction(1)
        for _, c in combo:
            coeff *= c
        lengths = tuple(i for i, _ in combo)
        acc = acc + _chain_slot_series(P, lengths, guard).scale(coeff)
    return acc


def operad_eval_series(P, args, guard=DEFAULT_GUARD, crosscheck=True):
    """Action of the poset P on strict order series.

    Exact mode (all arguments carry provenance): the series of the
    lexicographic sum.  Otherwise the chain-slot action is extended
    multilinearly; that extension is conjectural for outer posets that are
    not series-parallel, so when both routes are available they are
    compared and a disagreement raises CrossCheckMismatch.
    """
    return operad_eval_series_report(P, args, guard, crosscheck).series


@dataclass(frozen=True)
class OperadEvalReport:
    series: SeriesVec
    mode_used: str           # "exact" or "multilinear"
    conjectural: bool        # multilinear extension without poset provenance
    crosschecked: bool

    def to_json_dict(self):
        return {"series": self.series.to_json_dict(),
                "mode_used": self.mode_used,
                "conjectural": self.conjectural,
                "crosschecked": self.crosschecked}


def operad_eval_series_report(P, args, guard=DEFAULT_GUARD, crosscheck=True):
    args = list(args)
    if len(args) != len(P):
        raise ArityMismatch(
            f"poset has {len(P)} slots, got {len(args)} series")
    if any(a.mode != STRICT for a in args):
        raise ModeMismatch("operad evaluation needs strict series")
    exact_available = all(a.provenance is not None for a in args)
    if exact_available:
        composite = lex_sum(P, [a.provenance for a in args])
        _check_guard(composite, guard)
        exact = series_of(composite, STRICT, guard)
        checked = False
        if crosscheck:
            multi = _multilinear_eval(P, args, guard)
            if multi != exact:
                raise CrossCheckMismatch(exact, multi)
            checked = True
        return OperadEvalReport(exact, "exact", False, checked)
    multi = _multilinear_eval(P, args, guard)
    return OperadEvalReport(multi, "multilinear", True, False)


@dataclass(frozen=True)
class SeriesIdentityReport:
    name: str
    params: tuple
    passed: bool
    lhs: str
    rhs: str
    notes: tuple = ()

    def to_json_dict(self):
        return {"name": self.name, "params": dict(self.params),
                "pass": self.passed, "lhs": self.lhs, "rhs": self.rhs,
                "notes": list(self.notes)}


def series_identity_check(name, params, guard=DEFAULT_GUARD):
    """Exact verification of a named series identity.  Supported names:

    - "differential_cup":   Z_s cup (Z_p * Z_q) expansion (params s, p, q)
    - "quaternary_reversal": the 4-slot zigzag evaluated on chains equals
      its reversed-argument evaluation, with unit-slot degenerations
      (params chains=(a, b, c, d); zeros denote the empty-poset unit)
    - "hstar_top":          top h* coefficient of a poset's weak closed
      form vanishes (params poset)
    - "antichain_strict_weak": strict and weak series of an antichain agree
      as power series (params n)
    """
    if name == "differential_cup":
        return _check_differential_cup(params["s"], params["p"], params["q"])
    if name == "quaternary_reversal":
        return _check_quaternary_reversal(tuple(params["chains"]), guard)
    if name == "hstar_top":
        return _check_hstar_top(params["poset"], guard)
    if name == "antichain_strict_weak":
        return _check_antichain_strict_weak(params["n"], guard)
    raise UnknownIdentity(name)


def _check_differential_cup(s, p, q):
    Z = basis_series
    lhs = hadamard(Z(s), ordinal_mul(Z(p), Z(q)))
    rhs = SeriesVec(STRICT, {})
    for a in range(s + 1):
        rhs = rhs + ordinal_mul(hadamard(Z(a), Z(p)), hadamard(Z(s - a), Z(q)))
    sub = SeriesVec(STRICT, {})
    for a in range(s):
        sub = sub + ordinal_mul(hadamard(Z(a), Z(p)), hadamard(Z(s - 1 - a), Z(q)))
    rhs = rhs - ordinal_mul(sub, Z(1))
    return SeriesIdentityReport(
        "differential_cup", (("s", s), ("p", p), ("q", q)),
        lhs == rhs, lhs.render(), rhs.render())


def zigzag_poset():
    """The 4-element zigzag {x<y, z<y, z<w} in slot order x, y, z, w."""
    from .poset import construct_poset
    return construct_poset(["x", "y", "z", "w"],
                           [("x", "y"), ("z", "y"), ("z", "w")])


def _check_quaternary_reversal(chains, guard):
    if len(chains) != 4:
        raise ArityMismatch("quaternary_reversal needs four chain lengths")
    N = zigzag_poset()
    args = [basis_series(k) for k in chains]
    fwd = operad_eval_series(N, args, guard)
    rev = operad_eval_series(N, [basis_series(k) for k in reversed(chains)],
                             guard)
    passed = fwd == rev
    notes = []
    a, b, c, d = chains
    Z = basis_series
    if a == 0:
        expect = ordinal_mul(Z(c), hadamard(Z(b), Z(d)))
        passed &= fwd == expect
        notes.append("unit in slot 1 degenerates to Z_c * (Z_b cup Z_d)")
    if b == 0:
        expect = hadamard(Z(a), ordinal_mul(Z(c), Z(d)))
        passed &= fwd == expect
        notes.append("unit in slot 2 degenerates to Z_a cup Z_(c+d)")
    if c == 0:
        expect = hadamard(ordinal_mul(Z(a), Z(b)), Z(d))
        passed &= fwd == expect
        notes.append("unit in slot 3 degenerates to Z_(a+b) cup Z_d")
    if d == 0:
        expect = ordinal_mul(hadamard(Z(a), Z(c)), Z(b))
        passed &= fwd == expect
        notes.append("unit in slot 4 degenerates to (Z_a cup Z_c) * Z_b")
    return SeriesIdentityReport(
        "quaternary_reversal", (("chains", chains),),
        passed, fwd.render(), rev.render(), tuple(notes))


def _check_hstar_top(P, guard):
    cf = closed_form(series_of(P, WEAK, guard))
    h = cf.h_star()
    passed = len(h) <= len(P)  # degree of h* stays below |P|
    return SeriesIdentityReport(
        "hstar_top", (("poset", P.relation_string()),),
        passed, f"h* coefficients {[str(c) for c in h]}",
        f"degree < {len(P)}")


def _check_antichain_strict_weak(n, guard):
    from .poset import antichain
    P = antichain(n)
    s = closed_form(series_of(P, STRICT, guard))
    w = closed_form(series_of(P, WEAK, guard))
    one_minus_x = MonomialPoly({0: 1, 1: -1})

    def pad(poly, k):
        out = poly
        for _ in range(k):
            out = out * one_minus_x
        return out

    m = max(s.den_power, w.den_power)
    lhs = pad(s.numerator_poly(), m - s.den_power)
    rhs = pad(w.numerator_poly(), m - w.den_power)
    return SeriesIdentityReport(
        "antichain_strict_weak", (("n", n),),
        lhs == rhs, s.to_json_dict().__repr__(), w.to_json_dict().__repr__())
