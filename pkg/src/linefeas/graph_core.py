"""Simple graphs, the line-graph operator and degree-sequence predicates.

Vertices are dense integer indices ``0..vertex_count-1``; edges are stored
as canonical ``(u, v)`` pairs with ``u < v``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Iterable, Sequence


class NonGraphical(ValueError):
    """Raised when a degree sequence has no simple-graph realization."""


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be non-negative")
        canon = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError(f"edge ({u}, {v}) out of range for {self.vertex_count} vertices")
            canon.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "edges", frozenset(canon))

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int]], vertex_count: int | None = None) -> "Graph":
        edges = list(edges)
        if vertex_count is None:
            vertex_count = 1 + max((max(e) for e in edges), default=-1)
        return cls(vertex_count, frozenset(edges))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self.vertex_count
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return tuple(deg)

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        """Neighbourhoods as integer bitmasks, one per vertex."""
        adj = [0] * self.vertex_count
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return tuple(adj)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    def degree_sequence(self) -> "DegreeSequence":
        return DegreeSequence(self.degrees)

    def isolated_vertices(self) -> list[int]:
        return [v for v, d in enumerate(self.degrees) if d == 0]

    def to_edge_list(self) -> str:
        lines = [f"{self.vertex_count} {self.edge_count}"]
        lines += [f"{u} {v}" for u, v in self.sorted_edges()]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_edge_list(cls, text: str) -> "Graph":
        rows = [line.split() for line in text.splitlines() if line.strip()]
        if not rows:
            raise ValueError("empty edge-list text")
        n, m = map(int, rows[0])
        edges = [(int(a), int(b)) for a, b in rows[1:]]
        if len(edges) != m:
            raise ValueError(f"header declares {m} edges, found {len(edges)}")
        g = cls(n, frozenset(edges))
        if g.edge_count != m:
            raise ValueError("duplicate edges in edge list")
        return g

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        lines += [f"  {v};" for v in range(self.vertex_count)]
        lines += [f"  {u} -- {v};" for u, v in self.sorted_edges()]
        lines.append("}")
        return "\n".join(lines) + "\n"


def disjoint_union(*graphs: Graph) -> Graph:
    offset = 0
    edges = []
    for g in graphs:
        edges += [(u + offset, v + offset) for u, v in g.edges]
        offset += g.vertex_count
    return Graph(offset, frozenset(edges))


def complete_graph(n: int) -> Graph:
    return Graph(n, frozenset(combinations(range(n), 2)))


def star(k: int) -> Graph:
    """K_{1,k} with centre 0."""
    return Graph(k + 1, frozenset((0, i) for i in range(1, k + 1)))


def path(k: int) -> Graph:
    """Path with ``k`` edges (k + 1 vertices)."""
    return Graph(k + 1, frozenset((i, i + 1) for i in range(k)))


def matching(k: int) -> Graph:
    """k disjoint copies of K_2."""
    return Graph(2 * k, frozenset((2 * i, 2 * i + 1) for i in range(k)))


class DegreeSequence(tuple):
    """Non-increasing tuple of positive degrees; zero entries are dropped."""

    def __new__(cls, degrees: Iterable[int] = ()):
        degrees = [int(d) for d in degrees]
        if any(d < 0 for d in degrees):
            raise ValueError("degrees must be non-negative")
        return super().__new__(cls, sorted((d for d in degrees if d > 0), reverse=True))

    @property
    def total(self) -> int:
        return sum(self)

    @property
    def max_degree(self) -> int:
        return self[0] if self else 0

    def __repr__(self):
        return f"DegreeSequence({list(self)})"


def _as_sequence(seq) -> DegreeSequence:
    return seq if isinstance(seq, DegreeSequence) else DegreeSequence(seq)


def line_graph(g: Graph) -> Graph:
    edges = g.sorted_edges()
    index = {e: i for i, e in enumerate(edges)}
    incident: list[list[int]] = [[] for _ in range(g.vertex_count)]
    for u, v in edges:
        incident[u].append(index[(u, v)])
        incident[v].append(index[(u, v)])
    line_edges = set()
    for inc in incident:
        line_edges.update(combinations(inc, 2))
    return Graph(len(edges), frozenset(line_edges))


def line_graph_edge_count(seq: Iterable[int]) -> int:
    """Edges of L(G) from the degree sequence of G: sum of C(d, 2)."""
    return sum(comb(d, 2) for d in seq)


def is_graphical(seq: Iterable[int]) -> bool:
    """Erdos-Gallai test on the positive part of ``seq``."""
    d = _as_sequence(seq)
    return _erdos_gallai(d)


def _erdos_gallai(d: Sequence[int]) -> bool:
    # d must be non-increasing with positive entries.
    n = len(d)
    total = sum(d)
    if total % 2:
        return False
    if n and d[0] >= n:
        return False
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] + d[i]
    lhs = 0
    c = n  # number of entries >= k; non-increasing in k
    for k in range(1, n + 1):
        lhs += d[k - 1]
        while c > 0 and d[c - 1] < k:
            c -= 1
        p = max(k, c)
        if lhs > k * (k - 1) + k * (p - k) + suffix[p]:
            return False
    return True


def realize_sequence(seq: Iterable[int]) -> Graph:
    """Havel-Hakimi realization; vertex i gets the i-th largest degree."""
    d = _as_sequence(seq)
    if not is_graphical(d):
        raise NonGraphical(f"{list(d)} is not graphical")
    residual = list(d)
    edges = []
    while True:
        order = sorted((v for v in range(len(residual)) if residual[v] > 0),
                       key=lambda v: (-residual[v], v))
        if not order:
            break
        v, rest = order[0], order[1:]
        k = residual[v]
        if k > len(rest):
            raise NonGraphical(f"{list(d)} is not graphical")
        residual[v] = 0
        for w in rest[:k]:
            residual[w] -= 1
            edges.append((v, w))
    return Graph(len(d), frozenset(edges))


def is_tree_sequence(seq: Iterable[int]) -> bool:
    d = _as_sequence(seq)
    k = len(d)
    return k >= 2 and d.total == 2 * (k - 1)


def is_forest_sequence(seq: Iterable[int]) -> bool:
    """Even sum and sum <= 2(k - 1) over the k positive entries.

    The empty sequence is the edgeless forest.
    """
    d = _as_sequence(seq)
    k = len(d)
    if k == 0:
        return True
    return d.total % 2 == 0 and d.total <= 2 * (k - 1)


def split_into_trees(seq: Iterable[int]) -> list[DegreeSequence] | None:
    """Greedily split a sequence into tree sequences, or return None.

    All entries >= 2 go into a single tree together with the leaves it
    needs; the remaining 1s are paired off as K_2 components.
    """
    d = _as_sequence(seq)
    inner = [x for x in d if x >= 2]
    ones = len(d) - len(inner)
    trees = []
    if inner:
        leaves = sum(x - 2 for x in inner) + 2
        if leaves > ones:
            return None
        trees.append(DegreeSequence(inner + [1] * leaves))
        ones -= leaves
    if ones % 2:
        return None
    trees += [DegreeSequence([1, 1])] * (ones // 2)
    return trees


def realize_tree(seq: Iterable[int]) -> Graph:
    """Build a tree with the given degree sequence (caterpillar layout)."""
    d = _as_sequence(seq)
    if not is_tree_sequence(d):
        raise NonGraphical(f"{list(d)} is not a tree sequence")
    inner = [x for x in d if x >= 2]
    n = len(d)
    edges = [(i, i + 1) for i in range(len(inner) - 1)]
    nxt = len(inner)
    for i, x in enumerate(inner):
        spine = (i > 0) + (i < len(inner) - 1)
        for _ in range(x - spine):
            edges.append((i, nxt))
            nxt += 1
    if not inner:
        edges = [(0, 1)]
        nxt = 2
    assert nxt == n
    return Graph(n, frozenset(edges))


def realize_forest(seq: Iterable[int]) -> Graph:
    trees = split_into_trees(seq)
    if trees is None:
        raise NonGraphical(f"{list(_as_sequence(seq))} is not a forest sequence")
    return disjoint_union(*(realize_tree(t) for t in trees))


def is_acyclic(g: Graph) -> bool:
    parent = list(range(g.vertex_count))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


class Pattern(enum.Enum):
    CLAW = "claw"  # K_{1,3}
    PAW = "paw"    # triangle with a pendant leaf

    def graph(self) -> Graph:
        if self is Pattern.CLAW:
            return star(3)
        return Graph(4, frozenset({(0, 1), (0, 2), (1, 2), (0, 3)}))


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def has_induced(g: Graph, p: Pattern) -> bool:
    """True iff some four vertices of ``g`` induce a copy of ``p``."""
    adj = g.adjacency
    if p is Pattern.CLAW:
        # A centre with three pairwise non-adjacent neighbours.
        for c in range(g.vertex_count):
            nbrs = adj[c]
            for a in _bits(nbrs):
                rest = nbrs & ~adj[a] & ~((1 << (a + 1)) - 1)
                for b in _bits(rest):
                    if rest & ~adj[b] & ~((1 << (b + 1)) - 1):
                        return True
        return False
    if p is Pattern.PAW:
        # Triangle {a, b, c} plus d adjacent to a only.
        for a in range(g.vertex_count):
            for b in _bits(adj[a]):
                for c in _bits(adj[a] & adj[b] & ~((1 << (b + 1)) - 1)):
                    if adj[a] & ~adj[b] & ~adj[c] & ~(1 << b) & ~(1 << c):
                        return True
        return False
    raise ValueError(f"unknown pattern {p!r}")
