"""Counting order-preserving maps, inclusion-exclusion d-vectors, and
reciprocity checking.

The production counter walks the lattice of downsets: a strict map into the
n-chain is a chain of downsets whose successive differences are antichains,
a weak map is an arbitrary multichain of downsets.  That keeps counting
polynomial in the number of downsets instead of in the number of maps.  The
literal backtracking counter (assign values along a linear extension with
lower bounds from predecessors) is kept as an independent route and is
cross-checked against the naive full-enumeration referee in the tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .errors import EnumerationGuard
from .polynomials import BinomialPoly
from .poset import Poset, _bits, max_chain_length

DEFAULT_GUARD = 12
TARGET_CAP = 64


def _check_guard(P, guard):
    if len(P) > guard:
        raise EnumerationGuard(f"|P| = {len(P)} exceeds enumeration guard {guard}")


def _check_target(n, cap=TARGET_CAP):
    if n > cap:
        raise EnumerationGuard(f"target chain length {n} exceeds cap {cap}")


@lru_cache(maxsize=None)
def _downsets(P: Poset):
    """All downset bitmasks of P, ascending by popcount."""
    n = len(P)
    masks = [m for m in range(1 << n)
             if all(P.below_mask(i) & ~m == 0 for i in _bits(m))]
    masks.sort(key=lambda m: (m.bit_count(), m))
    return tuple(masks)


@lru_cache(maxsize=None)
def _strict_transitions(P: Poset):
    """For each downset D: positions of the downsets D \\ S with S any subset
    of the maximal elements of D (each such S is an antichain)."""
    masks = _downsets(P)
    pos = {m: t for t, m in enumerate(masks)}
    trans = []
    for m in masks:
        mx = 0
        for i in _bits(m):
            if P.above_mask(i) & m == 0:
                mx |= 1 << i
        preds = []
        s = mx
        while True:
            preds.append(pos[m ^ s])
            if s == 0:
                break
            s = (s - 1) & mx
        trans.append(tuple(preds))
    return trans


@lru_cache(maxsize=None)
def _strict_counts_upto(P: Poset, n: int):
    """(Omega_strict(P, 0), ..., Omega_strict(P, n)) via the downset DP."""
    masks = _downsets(P)
    trans = _strict_transitions(P)
    full = len(masks) - 1
    vec = [0] * len(masks)
    vec[0] = 1  # empty downset after zero value levels
    counts = [vec[full]]
    for _ in range(n):
        vec = [sum(vec[t] for t in preds) for preds in trans]
        counts.append(vec[full])
    return tuple(counts)


@lru_cache(maxsize=None)
def _weak_count(P: Poset, n: int):
    """Weak maps = multichains of n downsets ending at P, via repeated
    subset-sum transforms over the downset lattice."""
    k = len(P)
    downsets = set(_downsets(P))
    size = 1 << k
    vec = [0] * size
    vec[0] = 1
    for _ in range(n):
        arr = [vec[m] if m in downsets else 0 for m in range(size)]
        for b in range(k):
            bit = 1 << b
            for m in range(size):
                if m & bit:
                    arr[m] += arr[m ^ bit]
        vec = arr
    return vec[size - 1]


def count_maps(P, n, mode="strict", guard=DEFAULT_GUARD):
    """Number of maps P -> chain(n) preserving order strictly or weakly."""
    _check_guard(P, guard)
    _check_target(n)
    if n < 0:
        raise ValueError("n must be nonnegative")
    if mode == "strict":
        return _strict_counts_upto(P, n)[n]
    if mode == "weak":
        return _weak_count(P, n)
    raise ValueError(f"unknown mode {mode!r}")


def count_maps_backtracking(P, n, mode="strict", guard=DEFAULT_GUARD):
    """Backtracking counter: assign values along a linear extension, each
    element bounded below by its predecessors.  Cost grows with the count
    itself; intended for small instances and cross-checks."""
    _check_guard(P, guard)
    _check_target(n)
    if mode not in ("strict", "weak"):
        raise ValueError(f"unknown mode {mode!r}")
    k = len(P)
    order = sorted(range(k), key=lambda i: P.below_mask(i).bit_count())
    place = {elem: t for t, elem in enumerate(order)}
    preds = [[place[j] for j in _bits(P.below_mask(elem))] for elem in order]
    strict = mode == "strict"
    vals = [0] * k

    def rec(t):
        if t == k:
            return 1
        lo = 1
        for s in preds[t]:
            lo = max(lo, vals[s] + 1 if strict else vals[s])
        total = 0
        for v in range(lo, n + 1):
            vals[t] = v
            total += rec(t + 1)
        return total

    return rec(0)


def count_strict_surjections(P, m, guard=DEFAULT_GUARD):
    """Strict order-preserving maps from P onto chain(m) (direct search)."""
    _check_guard(P, guard)
    _check_target(m)
    k = len(P)
    if k == 0:
        return 1 if m == 0 else 0
    order = sorted(range(k), key=lambda i: P.below_mask(i).bit_count())
    place = {elem: t for t, elem in enumerate(order)}
    preds = [[place[j] for j in _bits(P.below_mask(elem))] for elem in order]
    vals = [0] * k
    full = (1 << m) - 1

    def rec(t, used):
        if t == k:
            return 1 if used == full else 0
        missing = m - used.bit_count()
        if missing > k - t:
            return 0
        lo = 1
        for s in preds[t]:
            lo = max(lo, vals[s] + 1)
        total = 0
        for v in range(lo, m + 1):
            vals[t] = v
            total += rec(t + 1, used | (1 << (v - 1)))
        return total

    return rec(0, 0)


@dataclass(frozen=True)
class DVector:
    """Inclusion-exclusion vector d_1..d_|P| of a poset.

    d_i counts the strict surjections onto chain(i), equivalently the
    i-simplices in the canonical triangulation of the order polytope.
    """

    poset: Poset
    d: tuple

    def __post_init__(self):
        r0 = max_chain_length(self.poset)
        assert all(isinstance(v, int) and v >= 0 for v in self.d)
        assert all(self.d[i - 1] == 0 for i in range(1, r0))
        if len(self.poset):
            assert self.d[-1] >= 1

    def triangulation_profile(self):
        """dimension -> simplex count, highest dimension first."""
        return {i + 1: v for i, v in sorted(enumerate(self.d), reverse=True) if v}

    def to_json_dict(self):
        return {"poset": self.poset.to_json_dict(), "d": list(self.d)}


@lru_cache(maxsize=None)
def d_vector(P, guard=DEFAULT_GUARD):
    """d_i = sum_{j<=i} (-1)^(i-j) C(i,j) Omega_strict(P, j)."""
    _check_guard(P, guard)
    k = len(P)
    counts = _strict_counts_upto(P, k)
    d = tuple(sum((-1) ** (i - j) * comb(i, j) * counts[j]
                  for j in range(i + 1))
              for i in range(1, k + 1))
    return DVector(P, d)


def order_polynomial(P, mode="strict", guard=DEFAULT_GUARD):
    """Strict: sum_i d_i C(x,i).  Weak: the signed vector
    (-1)^(|P|-i) d_i read against the multiset basis (eval mode
    "multiset").  The empty poset gives the constant 1 in both modes."""
    dv = d_vector(P, guard)
    k = len(P)
    if k == 0:
        return BinomialPoly({0: 1})
    if mode == "strict":
        return BinomialPoly({i + 1: v for i, v in enumerate(dv.d)})
    if mode == "weak":
        return BinomialPoly({i + 1: (-1) ** (k - i - 1) * v
                             for i, v in enumerate(dv.d)})
    raise ValueError(f"unknown mode {mode!r}")


@dataclass(frozen=True)
class ReciprocityReport:
    poset: Poset
    strict_poly: BinomialPoly
    weak_poly: BinomialPoly
    passed: bool

    def to_json_dict(self):
        return {"poset": self.poset.to_json_dict(),
                "strict_poly": self.strict_poly.to_json_dict(),
                "weak_poly": self.weak_poly.to_json_dict(),
                "pass": self.passed}


def reciprocity_check(P, guard=DEFAULT_GUARD):
    """Verify (-1)^|P| Omega_strict(P, -x) = Omega_weak(P, x) exactly."""
    strict_poly = order_polynomial(P, "strict", guard)
    weak_poly = order_polynomial(P, "weak", guard)
    lhs = strict_poly.to_monomial("binomial").neg_x().scale((-1) ** len(P))
    rhs = weak_poly.to_monomial("multiset")
    return ReciprocityReport(P, strict_poly, weak_poly, lhs == rhs)


@dataclass(frozen=True)
class NestedSumReport:
    n: int
    k: int
    q: int
    binomial_value: int
    nested_value: int
    weak_map_count: int
    passed: bool

    def to_json_dict(self):
        return {"n": self.n, "k": self.k, "q": self.q,
                "binomial": self.binomial_value,
                "nested_sum": self.nested_value,
                "weak_maps": self.weak_map_count,
                "pass": self.passed}


def nested_sum_identity_check(n, k, q):
    """C(n+k-q, k) vs the k-fold nested sum with all indices >= q, vs the
    weak map count chain(k) -> chain(n-q+1)."""
    if not (1 <= q <= n and k >= 1):
        raise ValueError("need 1 <= q <= n and k >= 1")

    def nested(depth, hi):
        if depth == 0:
            return 1
        return sum(nested(depth - 1, i) for i in range(q, hi + 1))

    from .poset import chain  # local import to keep module top light

    b = comb(n + k - q, k)
    s = nested(k, n)
    w = count_maps(chain(k), n - q + 1, "weak")
    return NestedSumReport(n, k, q, b, s, w, b == s == w)


def enumeration_report(P, guard=DEFAULT_GUARD, discrepancies=()):
    """JSON-ready report bundling the d-vector and both order polynomials."""
    return {
        "poset": P.to_json_dict(),
        "d": list(d_vector(P, guard).d),
        "strict_poly": order_polynomial(P, "strict", guard).to_json_dict(),
        "weak_poly": order_polynomial(P, "weak", guard).to_json_dict(),
        "discrepancies": list(discrepancies),
    }
