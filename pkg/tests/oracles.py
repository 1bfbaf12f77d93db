"""Independent brute-force referees used by the tests.

Everything here enumerates exhaustively and stays deliberately naive; the
production code must agree with these on small instances.
"""

from itertools import permutations, product


def naive_count_maps(P, n, mode):
    """Full enumeration over all |P|-tuples of values in [n]."""
    rel = [(P.index_of(a), P.index_of(b)) for a, b in P.relation]
    count = 0
    for f in product(range(n), repeat=len(P)):
        if mode == "strict":
            if all(f[i] < f[j] for i, j in rel):
                count += 1
        else:
            if all(f[i] <= f[j] for i, j in rel):
                count += 1
    return count


def naive_strict_surjections(P, m):
    rel = [(P.index_of(a), P.index_of(b)) for a, b in P.relation]
    full = set(range(m))
    count = 0
    for f in product(range(m), repeat=len(P)):
        if set(f) == full and all(f[i] < f[j] for i, j in rel):
            count += 1
    return count


def naive_linear_extensions(P):
    """Order-preserving bijections onto the chain of size |P|."""
    k = len(P)
    rel = [(P.index_of(a), P.index_of(b)) for a, b in P.relation]
    count = 0
    for perm in permutations(range(k)):
        if all(perm[i] < perm[j] for i, j in rel):
            count += 1
    return count


def naive_max_chain(P):
    k = len(P)
    best = 0
    idx_rel = {(P.index_of(a), P.index_of(b)) for a, b in P.relation}
    for mask in range(1 << k):
        members = [i for i in range(k) if mask >> i & 1]
        if all((a, b) in idx_rel or (b, a) in idx_rel
               for t, a in enumerate(members) for b in members[t + 1:]):
            best = max(best, len(members))
    return best


def descent_eulerian(n, i):
    """Permutations of [n] with exactly i descents."""
    count = 0
    for perm in permutations(range(n)):
        descents = sum(1 for t in range(n - 1) if perm[t] > perm[t + 1])
        if descents == i:
            count += 1
    return count


def partition_stirling2(n, k):
    """Set partitions of [n] into exactly k blocks, by direct enumeration."""
    if n == 0:
        return 1 if k == 0 else 0

    def rec(elem, blocks):
        if elem == n:
            return 1 if len(blocks) == k else 0
        total = 0
        for b in blocks:
            b.append(elem)
            total += rec(elem + 1, blocks)
            b.pop()
        if len(blocks) < k:
            blocks.append([elem])
            total += rec(elem + 1, blocks)
            blocks.pop()
        return total

    return rec(0, [])


def has_induced_zigzag(P):
    """True when some 4 elements induce the one non-series-parallel shape
    a<b, c<b, c<d (and no other comparabilities among them)."""
    k = len(P)
    idx_rel = {(P.index_of(x), P.index_of(y)) for x, y in P.relation}

    def rel(a, b):
        return (a, b) in idx_rel

    for quad in permutations(range(k), 4):
        a, b, c, d = quad
        wanted = {(a, b), (c, b), (c, d)}
        others = {(x, y) for x in quad for y in quad if x != y} - wanted
        if all(rel(x, y) for x, y in wanted) and not any(rel(x, y) for x, y in others):
            return True
    return False
