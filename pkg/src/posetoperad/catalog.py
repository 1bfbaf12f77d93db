"""Poset corpora: labeled enumeration, isomorphism classes, and the
series-parallel test.

Labeled posets on k+1 elements are generated by extending each labeled
poset on k elements with a new element whose strict down-set D and up-set U
range over all compatible (downset, upset) pairs.  Isomorphism classes are
deduplicated through a canonical form (lexicographically minimal relation
under invariant-respecting relabelings).
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations, product

from .poset import Poset, _bits


def _downclosed(masks_below, m):
    return all(masks_below[i] & ~m == 0 for i in _bits(m))


def _extensions(down):
    """All ways to add one element to a poset given as below-mask tuple."""
    k = len(down)
    up = [0] * k
    for i in range(k):
        for j in _bits(down[i]):
            up[j] |= 1 << i
    downsets = [m for m in range(1 << k) if _downclosed(down, m)]
    upsets = [m for m in range(1 << k) if _downclosed(up, m)]
    for D in downsets:
        for U in upsets:
            if D & U:
                continue
            # d < new < u forces d < u already present
            if any(D & ~down[u] for u in _bits(U)):
                continue
            new = [down[i] | (1 << k) if U >> i & 1 else down[i]
                   for i in range(k)]
            new.append(D)
            yield tuple(new)


def labeled_masks(n):
    """Yield every labeled poset on elements 0..n-1 as a tuple of
    strict-below bitmasks (transitively closed)."""
    if n == 0:
        yield ()
        return
    for down in labeled_masks(n - 1):
        yield from _extensions(down)


def poset_from_masks(down):
    labels = [str(i + 1) for i in range(len(down))]
    rel = {(labels[j], labels[i])
           for i in range(len(down)) for j in _bits(down[i])}
    return Poset(labels, rel)


def labeled_posets(n):
    for down in labeled_masks(n):
        yield poset_from_masks(down)


def _refined_colors(n, pairs):
    below = [set() for _ in range(n)]
    above = [set() for _ in range(n)]
    for a, b in pairs:
        below[b].add(a)
        above[a].add(b)
    colors = [(len(below[i]), len(above[i])) for i in range(n)]
    for _ in range(n):
        keys = [(colors[i],
                 tuple(sorted(colors[j] for j in below[i])),
                 tuple(sorted(colors[j] for j in above[i])))
                for i in range(n)]
        ranks = {k: r for r, k in enumerate(sorted(set(keys)))}
        new = [ranks[k] for k in keys]
        if new == colors:
            break
        colors = new
    return colors


def canonical_key(P):
    """Relabeling-invariant key: the minimal sorted relation tuple over all
    permutations that respect the color refinement classes."""
    n = len(P)
    pairs = sorted(P.index_pairs())
    colors = _refined_colors(n, pairs)
    classes = {}
    for i, c in enumerate(colors):
        classes.setdefault(c, []).append(i)
    ordered = [classes[c] for c in sorted(classes)]
    offsets = []
    pos = 0
    for cl in ordered:
        offsets.append(pos)
        pos += len(cl)
    best = None
    for perm_parts in product(*(permutations(cl) for cl in ordered)):
        sigma = {}
        for part, off in zip(perm_parts, offsets):
            for t, old in enumerate(part):
                sigma[old] = off + t
        key = tuple(sorted((sigma[a], sigma[b]) for a, b in pairs))
        if best is None or key < best:
            best = key
    return (n, best)


@lru_cache(maxsize=None)
def iso_classes(n):
    """One canonical representative per isomorphism class of n-element
    posets, generated by extending the (n-1)-element representatives."""
    if n == 0:
        return (Poset((), frozenset()),)
    reps = {}
    for smaller in iso_classes(n - 1):
        down = tuple(smaller.below_mask(i) for i in range(n - 1))
        for extended in _extensions(down):
            Q = poset_from_masks(extended)
            key = canonical_key(Q)
            if key not in reps:
                reps[key] = Q
    return tuple(reps[k] for k in sorted(reps))


def iso_classes_upto(n):
    return {k: iso_classes(k) for k in range(n + 1)}


def _components(P):
    n = len(P)
    seen = [False] * n
    comps = []
    for start in range(n):
        if seen[start]:
            continue
        mask = 0
        stack = [start]
        seen[start] = True
        while stack:
            i = stack.pop()
            mask |= 1 << i
            for j in _bits(P.below_mask(i) | P.above_mask(i)):
                if not seen[j]:
                    seen[j] = True
                    stack.append(j)
        comps.append(mask)
    return comps


def _ordinal_split(P, low, high):
    """True when every element of `high` lies above all of `low`."""
    return all(P.below_mask(i) & low == low for i in _bits(high))


@lru_cache(maxsize=None)
def is_series_parallel(P):
    """True iff P is generated from points by disjoint union and ordinal sum."""
    n = len(P)
    if n <= 1:
        return True
    comps = _components(P)
    if len(comps) > 1:
        return all(is_series_parallel(P.induced(m)) for m in comps)
    full = (1 << n) - 1
    for low in range(1, full):
        if _ordinal_split(P, low, full & ~low):
            return (is_series_parallel(P.induced(low))
                    and is_series_parallel(P.induced(full & ~low)))
    return False
