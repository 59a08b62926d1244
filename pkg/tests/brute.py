"""Independent brute-force oracles shared by the test modules."""

from functools import lru_cache
from itertools import combinations, combinations_with_replacement

import numpy as np


@lru_cache(maxsize=None)
def degree_sequences_on(k: int) -> frozenset:
    """Positive-part degree sequences of every labelled simple graph on k vertices."""
    pairs = list(combinations(range(k), 2))
    masks = np.arange(1 << len(pairs), dtype=np.int64)
    deg = np.zeros((len(masks), k), dtype=np.int8)
    for bit, (u, v) in enumerate(pairs):
        on = ((masks >> bit) & 1).astype(np.int8)
        deg[:, u] += on
        deg[:, v] += on
    deg = -np.sort(-deg, axis=1)
    rows = np.unique(deg, axis=0)
    return frozenset(tuple(int(d) for d in row if d > 0) for row in rows)


def line_graph_edges_brute(edges) -> int:
    edges = list(edges)
    return sum(1 for a, b in combinations(edges, 2) if set(a) & set(b))


def has_induced_brute(g, degrees_of_pattern) -> bool:
    """Compare each 4-subset's induced degree multiset with the pattern's.

    For 4-vertex graphs the claw (3,1,1,1) and the paw (3,2,2,1) are the
    only graphs with those degree multisets.
    """
    target = tuple(sorted(degrees_of_pattern))
    for quad in combinations(range(g.vertex_count), 4):
        deg = {v: 0 for v in quad}
        for u, v in combinations(quad, 2):
            if g.has_edge(u, v):
                deg[u] += 1
                deg[v] += 1
        if tuple(sorted(deg.values())) == target:
            return True
    return False


def tri(a):
    return a * (a + 1) // 2


def least_triangular_triple(p):
    best = None
    a = 0
    while tri(a) <= p:
        a += 1
    for x, y, z in combinations_with_replacement(range(a), 3):
        if tri(x) + tri(y) + tri(z) == p:
            if best is None or (x, y, z) < best:
                best = (x, y, z)
    return best


def splits_into_trees(seq) -> bool:
    """Exhaustive search: can the multiset be partitioned into tree sequences?"""
    seq = tuple(sorted(seq, reverse=True))

    @lru_cache(maxsize=None)
    def go(rest):
        if not rest:
            return True
        first, others = rest[0], rest[1:]
        idx = range(len(others))
        for size in range(1, len(others) + 1):
            for pick in combinations(idx, size):
                group = (first,) + tuple(others[i] for i in pick)
                if sum(group) == 2 * (len(group) - 1):
                    left = tuple(others[i] for i in idx if i not in pick)
                    if go(left):
                        return True
        return False

    return go(seq)


def partitions(total, cap=None):
    cap = total if cap is None else cap
    if total == 0:
        yield ()
        return
    for d in range(min(total, cap), 0, -1):
        for rest in partitions(total - d, d):
            yield (d,) + rest
