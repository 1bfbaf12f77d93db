"""Finite posets, canonical families, and the lexicographic-sum composition.

Elements are string labels.  The element list order is the canonical slot
order: when a poset acts as an operation, ``lex_sum`` binds its i-th
argument to the i-th declared element.  Relations are stored transitively
closed; values are immutable after construction and safe to share.
"""

from __future__ import annotations

from .errors import ArityMismatch, CycleDetected, DuplicateLabel, UnknownLabel


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _close_masks(below):
    """Transitive closure of down-masks by iterated relational squaring."""
    below = list(below)
    changed = True
    while changed:
        changed = False
        for i in range(len(below)):
            new = below[i]
            for j in _bits(below[i]):
                new |= below[j]
            if new != below[i]:
                below[i] = new
                changed = True
    return below


class Poset:
    """Immutable strict partial order; the relation is transitively closed.

    Use :func:`construct_poset` to build from cover pairs with validation;
    the raw constructor trusts its input.
    """

    __slots__ = ("elements", "relation", "_index", "_below", "_above",
                 "_hash", "_covers")

    def __init__(self, elements, relation):
        self.elements = tuple(elements)
        self.relation = frozenset(relation)
        idx = {a: i for i, a in enumerate(self.elements)}
        self._index = idx
        below = [0] * len(self.elements)
        above = [0] * len(self.elements)
        for a, b in self.relation:
            below[idx[b]] |= 1 << idx[a]
            above[idx[a]] |= 1 << idx[b]
        self._below = tuple(below)
        self._above = tuple(above)
        self._hash = hash((self.elements, self.relation))
        self._covers = None

    def __len__(self):
        return len(self.elements)

    def __eq__(self, other):
        return (isinstance(other, Poset)
                and self.elements == other.elements
                and self.relation == other.relation)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Poset({self.relation_string()})"

    def less(self, a, b):
        return (a, b) in self.relation

    def index_of(self, label):
        return self._index[label]

    def below_mask(self, i):
        """Bitmask of indices strictly below element i."""
        return self._below[i]

    def above_mask(self, i):
        return self._above[i]

    def index_pairs(self):
        idx = self._index
        return frozenset((idx[a], idx[b]) for a, b in self.relation)

    def covers(self):
        """Cover pairs (transitive reduction), sorted by element indices."""
        if self._covers is None:
            out = []
            for a, b in self.relation:
                ia, ib = self._index[a], self._index[b]
                # a < b is a cover unless something sits strictly between
                if not (self._below[ib] & self._above[ia]):
                    out.append((a, b))
            out.sort(key=lambda p: (self._index[p[0]], self._index[p[1]]))
            self._covers = tuple(out)
        return self._covers

    def relation_string(self):
        """Compact brace rendering: cover pairs plus isolated elements."""
        covers = self.covers()
        items = [f"{a}<{b}" for a, b in covers]
        used = {e for pair in covers for e in pair}
        items += [e for e in self.elements if e not in used]
        return "{" + ", ".join(items) + "}"

    def induced(self, mask):
        """Subposet on the elements whose index bit is set in ``mask``."""
        keep = [e for i, e in enumerate(self.elements) if mask >> i & 1]
        kept = set(keep)
        rel = {(a, b) for a, b in self.relation if a in kept and b in kept}
        return Poset(keep, rel)

    def to_json_dict(self):
        return {"elements": list(self.elements),
                "covers": [[a, b] for a, b in self.covers()]}

    @staticmethod
    def from_json_dict(d):
        return construct_poset(d["elements"], [tuple(c) for c in d["covers"]])


def construct_poset(labels, covers):
    """Build a poset from labels and cover pairs.

    The relation is the transitive closure of the covers.  Raises
    DuplicateLabel / UnknownLabel / CycleDetected.
    """
    labels = [str(l) for l in labels]
    seen = set()
    for l in labels:
        if l in seen:
            raise DuplicateLabel(l)
        seen.add(l)
    idx = {l: i for i, l in enumerate(labels)}
    below = [0] * len(labels)
    for a, b in covers:
        if a not in idx:
            raise UnknownLabel(a)
        if b not in idx:
            raise UnknownLabel(b)
        below[idx[b]] |= 1 << idx[a]
    below = _close_masks(below)
    for i, m in enumerate(below):
        if m >> i & 1:
            raise CycleDetected(labels[i])
    rel = {(labels[j], labels[i])
           for i in range(len(labels)) for j in _bits(below[i])}
    return Poset(labels, rel)


def chain(n):
    """The chain 1 < 2 < ... < n; n = 0 gives the empty poset."""
    labels = [str(i + 1) for i in range(n)]
    return construct_poset(labels, [(labels[i], labels[i + 1])
                                    for i in range(n - 1)])


def antichain(n):
    return construct_poset([str(i + 1) for i in range(n)], [])


def canonical_poset(kind, n):
    if kind == "chain":
        return chain(n)
    if kind == "antichain":
        return antichain(n)
    raise ValueError(f"unknown canonical poset kind {kind!r}")


def lex_sum(outer, inner):
    """Lexicographic sum: substitute inner[i] for the i-th element of outer.

    Composite labels are namespaced "slotLabel.innerLabel"; two composite
    elements are related iff they lie in one block and are related there,
    or their blocks sit on related outer slots.
    """
    inner = list(inner)
    if len(inner) != len(outer):
        raise ArityMismatch(
            f"outer poset has {len(outer)} slots, got {len(inner)} arguments")
    labels = []
    blocks = []
    rel = set()
    for slot, block_poset in zip(outer.elements, inner):
        block = [f"{slot}.{e}" for e in block_poset.elements]
        blocks.append(block)
        labels.extend(block)
        rel.update((f"{slot}.{a}", f"{slot}.{b}")
                   for a, b in block_poset.relation)
    if len(set(labels)) != len(labels):
        raise DuplicateLabel("label collision after namespacing")
    for a, b in outer.relation:
        ia, ib = outer.index_of(a), outer.index_of(b)
        rel.update((x, y) for x in blocks[ia] for y in blocks[ib])
    # union of closed blocks plus full cross pairs is already closed
    return Poset(labels, rel)


def disjoint_union(*posets):
    return lex_sum(antichain(len(posets)), list(posets))


def ordinal_sum(*posets):
    return lex_sum(chain(len(posets)), list(posets))


def _topo_indices(P):
    # popcount of the below-mask is a valid height key on a closed relation
    return sorted(range(len(P)), key=lambda i: P.below_mask(i).bit_count())


def max_chain_length(P):
    """Size of the longest totally ordered subset; 0 for the empty poset."""
    best = [0] * len(P)
    for i in _topo_indices(P):
        best[i] = 1 + max((best[j] for j in _bits(P.below_mask(i))), default=0)
    return max(best, default=0)


def tropical_eval(P, lengths):
    """max over chains of P of the sum of the chain's slot lengths.

    Equals max_chain_length(lex_sum(P, [chain(l) for l in lengths])).
    """
    lengths = list(lengths)
    if len(lengths) != len(P):
        raise ArityMismatch(
            f"poset has {len(P)} slots, got {len(lengths)} lengths")
    best = [0] * len(P)
    for i in _topo_indices(P):
        best[i] = lengths[i] + max(
            (best[j] for j in _bits(P.below_mask(i))), default=0)
    return max(best, default=0)
