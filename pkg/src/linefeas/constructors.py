"""Explicit witness graphs for feasible (N, M) pairs.

Every :class:`Witness` is certified when it is built: the graph's edge
count and the edge count of its actual line graph are recomputed and
compared against the recorded values.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from functools import lru_cache
from math import comb, isqrt

import numpy as np

from .closed_form import DomainError, is_feasible_closed, min_nonfeasible
from .graph_core import (
    Graph,
    complete_graph,
    disjoint_union,
    line_graph,
    line_graph_edge_count,
    matching,
    path,
    star,
)


class NotFeasible(ValueError):
    """(N, M) is a non-feasible pair; no line graph exists."""


class Unrepresentable(ValueError):
    """M has no decomposition of the form the star-forest construction needs."""


class Recipe(enum.Enum):
    LOW_DELTA = "LOW_DELTA"
    HIGH_DELTA = "HIGH_DELTA"
    Q_GRAPH = "Q_GRAPH"
    Q_STAR = "Q_STAR"
    STAR_FOREST = "STAR_FOREST"
    DOUBLE_STAR = "DOUBLE_STAR"
    UEP = "UEP"
    PAW_FREE = "PAW_FREE"


_LINE_GRAPH_RECIPES = {
    Recipe.LOW_DELTA, Recipe.HIGH_DELTA, Recipe.Q_GRAPH, Recipe.Q_STAR,
    Recipe.STAR_FOREST, Recipe.DOUBLE_STAR,
}


@dataclass(frozen=True)
class Witness:
    graph: Graph
    n_line: int
    m_line: int
    recipe: Recipe

    def __post_init__(self):
        if self.graph.edge_count != self.n_line:
            raise AssertionError(f"{self.recipe.value}: e(G)={self.graph.edge_count}, expected {self.n_line}")
        if line_graph_edge_count(self.graph.degrees) != self.m_line:
            raise AssertionError(f"{self.recipe.value}: degree formula disagrees with m_line={self.m_line}")
        if not self.certify():
            raise AssertionError(f"{self.recipe.value}: line graph is not ({self.n_line}, {self.m_line})")
        if self.recipe in _LINE_GRAPH_RECIPES and self.graph.isolated_vertices():
            raise AssertionError(f"{self.recipe.value}: witness has isolated vertices")

    def certify(self) -> bool:
        """Recompute e(L(G)) from the explicit line graph."""
        lg = line_graph(self.graph)
        return lg.vertex_count == self.n_line and lg.edge_count == self.m_line

    def certificate(self) -> dict:
        return {
            "recipe": self.recipe.value,
            "n_line": self.n_line,
            "m_line": self.m_line,
            "degrees": sorted(self.graph.degrees, reverse=True),
        }

    def certificate_json(self) -> str:
        return json.dumps(self.certificate(), separators=(",", ":"))


def _make(graph: Graph, recipe: Recipe) -> Witness:
    return Witness(graph, graph.edge_count, line_graph_edge_count(graph.degrees), recipe)


# -- triangular numbers ------------------------------------------------------

def triangular(a: int) -> int:
    return a * (a + 1) // 2


def triangular_root(v: int) -> int | None:
    """a with T(a) = v, or None if v is not triangular."""
    if v < 0:
        return None
    s = isqrt(8 * v + 1)
    if s * s != 8 * v + 1:
        return None
    return (s - 1) // 2


@dataclass(frozen=True)
class TriangularTriple:
    x: int
    y: int
    z: int

    def __post_init__(self):
        if not 0 <= self.x <= self.y <= self.z:
            raise ValueError("need 0 <= x <= y <= z")

    @property
    def value(self) -> int:
        return triangular(self.x) + triangular(self.y) + triangular(self.z)

    def __iter__(self):
        return iter((self.x, self.y, self.z))


_TABLE_CAP = 1 << 24


@lru_cache(maxsize=8)
def _pair_table(size: int) -> np.ndarray:
    """least[v] = least a with v = T(a) + T(b), a <= b; -1 if none (v < size)."""
    least = np.full(size, -1, dtype=np.int32)
    tri = np.array([triangular(a) for a in range(isqrt(2 * size) + 2)], dtype=np.int64)
    tri = tri[tri < size]
    for a in range(len(tri) - 1, -1, -1):
        sums = tri[a] + tri[a:]
        least[sums[sums < size]] = a
    return least


def _least_pair(v: int, table: np.ndarray | None) -> int | None:
    if table is not None:
        a = int(table[v])
        return a if a >= 0 else None
    a = 0
    while 2 * triangular(a) <= v:
        if triangular_root(v - triangular(a)) is not None:
            return a
        a += 1
    return None


def triangular_decompose(p: int) -> TriangularTriple:
    """Lexicographically least x <= y <= z with T(x) + T(y) + T(z) = p."""
    if p < 0:
        raise DomainError("p must be non-negative")
    table = None
    if p < _TABLE_CAP:
        size = 1 << max(10, p.bit_length())
        table = _pair_table(size)
    x = 0
    while 3 * triangular(x) <= p:
        rest = p - triangular(x)
        # Minimising x first means any pair for ``rest`` already has y >= x.
        y = _least_pair(rest, table)
        if y is not None:
            z = triangular_root(rest - triangular(y))
            return TriangularTriple(x, y, z)
        x += 1
    raise AssertionError(f"no three-triangular representation of {p}")


# -- line-graph witnesses ----------------------------------------------------

def witness_low(n: int, delta: int, k: int) -> Witness:
    """K_{1,delta} + P_k + (n - delta - k) K_2."""
    if not (1 <= delta <= n // 2 and 0 <= k <= delta and k <= n - delta):
        raise DomainError(f"witness_low: bad arguments N={n}, delta={delta}, k={k}")
    parts = [star(delta)]
    if k:
        parts.append(path(k))
    parts.append(matching(n - delta - k))
    return _make(disjoint_union(*parts), Recipe.LOW_DELTA)


def _high_graph(n: int, t: int, k: int, j: int) -> Graph:
    # 0 = u (degree n - t), 1 = v, 2..n-t = u_1..u_{n-t-1}
    edges = [(0, w) for w in range(1, n - t + 1)]
    nxt = n - t + 1
    for i in range(j):
        edges.append((1, 2 + i))
    for _ in range(k - j):
        edges.append((1, nxt))
        nxt += 1
    for _ in range(t - k):
        edges.append((nxt, nxt + 1))
        nxt += 2
    return Graph(nxt, frozenset(edges))


def witness_high(n: int, t: int, k: int, j: int) -> Witness:
    """Step ``k`` of the high-degree covering, after ``j`` leaf identifications.

    Centre u has degree n - t with neighbours v, u_1, ..., u_{n-t-1}; v gets
    k further neighbours, the first j of them being u_1..u_j; the remaining
    t - k edges are disjoint K_2 components.  t = 0 gives the star K_{1,n}.
    """
    if not (0 <= t and 2 * t < n and 0 <= k <= t and 0 <= j <= k):
        raise DomainError(f"witness_high: bad arguments N={n}, t={t}, k={k}, j={j}")
    recipe = Recipe.Q_GRAPH if t >= 1 and k == j == t else Recipe.HIGH_DELTA
    w = _make(_high_graph(n, t, k, j), recipe)
    assert w.m_line == comb(n - t, 2) + comb(k + 1, 2) + j
    return w


def q_graph(n: int, t: int) -> Witness:
    """Extremal Q(N, t): the last step of the high-degree covering."""
    return witness_high(n, t, t, t)


def q_star_graph(n: int) -> Witness:
    """Centre of degree n - 3 with a triangle packed into its neighbourhood."""
    if n < 7:
        raise DomainError("q_star_graph needs N >= 7")
    edges = [(0, w) for w in range(1, n - 2)] + [(1, 2), (1, 3), (2, 3)]
    return _make(Graph(n - 2, frozenset(edges)), Recipe.Q_STAR)


def double_star(n: int, t: int) -> Witness:
    """S_{t, n-t-1}: adjacent centres u, v with n - t - 1 and t leaves."""
    if not 1 <= t <= n - 2:
        raise DomainError("double_star needs 1 <= t <= N - 2")
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(n - t - 1)]
    edges += [(1, n + 1 - t + i) for i in range(t)]
    return _make(Graph(n + 1, frozenset(edges)), Recipe.DOUBLE_STAR)


def _star_sizes(p: int, budget: int) -> tuple[int, int, int] | None:
    """Three star sizes with C(a,2)+C(b,2)+C(c,2) = p using at most ``budget`` edges."""
    x, y, z = triangular_decompose(p)
    sizes = tuple(a + 1 if a else 0 for a in (x, y, z))
    if sum(sizes) <= budget:
        return sizes
    # The Gauss triple overshot; look for the cheapest triple instead.
    best = None
    c = 0
    while comb(c, 2) <= p:
        c += 1
    for c in range(c - 1, -1, -1):
        for b in range(c, -1, -1):
            rest = p - comb(c, 2) - comb(b, 2)
            if rest < 0:
                continue
            root = triangular_root(rest)
            if root is None:
                continue
            a = root + 1 if root else 0
            if a > b:
                continue
            if best is None or a + b + c < sum(best):
                best = (a, b, c)
    if best is not None and sum(best) <= budget:
        return best
    return None


def star_forest_witness(n: int, m: int) -> Witness:
    """Star forest K_{1,n-t} + K_{1,x} + K_{1,y} + K_{1,z} + q K_2 with n edges.

    n - t is the largest star size whose C(., 2) fits under m.
    """
    if n < 1 or not 0 <= m <= comb(n, 2):
        raise DomainError(f"need N >= 1 and 0 <= M <= C(N, 2) (got N={n}, M={m})")
    top = 1
    while top < n and comb(top + 1, 2) <= m:
        top += 1
    t = n - top
    sizes = _star_sizes(m - comb(top, 2), t)
    if sizes is None:
        raise Unrepresentable(f"M={m} has no star-forest decomposition with N={n}")
    parts = [star(top)] + [star(s) for s in sizes if s]
    parts.append(matching(t - sum(sizes)))
    w = _make(disjoint_union(*parts), Recipe.STAR_FOREST)
    assert w.m_line == m
    return w


def witness(n: int, m: int) -> Witness:
    """A graph G with n edges whose line graph has exactly m edges."""
    if n < 1 or not 0 <= m <= comb(n, 2):
        raise DomainError(f"need N >= 1 and 0 <= M <= C(N, 2) (got N={n}, M={m})")
    if not is_feasible_closed(n, m):
        raise NotFeasible(f"({n}, {m}) is non-feasible; smallest non-feasible M is {min_nonfeasible(n)}")
    if m < comb(n // 2 + 1, 2):
        delta = 1
        while comb(delta + 1, 2) <= m:
            delta += 1
        extra = m - comb(delta, 2)
        w = witness_low(n, delta, extra + 1 if extra else 0)
    else:
        delta = n
        while comb(delta, 2) > m:
            delta -= 1
        t = n - delta
        rem = m - comb(delta, 2)
        k = 0
        while comb(k + 2, 2) <= rem:
            k += 1
        j = rem - comb(k + 1, 2)
        w = witness_high(n, t, k, j)
    if w.m_line != m or w.n_line != n:
        raise AssertionError(f"witness({n}, {m}) produced ({w.n_line}, {w.m_line})")
    return w


# -- other families -----------------------------------------------------------

def uep_parameters(n: int, m: int) -> tuple[int, int, int]:
    """(p, q, r) with C(p, 2) - q = m, 0 <= q <= p - 2 (q = 0 when p < 2), p + r = n."""
    if n < 1 or not 0 <= m <= comb(n, 2):
        raise DomainError(f"need n >= 1 and 0 <= m <= C(n, 2) (got n={n}, m={m})")
    p = 1
    while comb(p, 2) < m:
        p += 1
    return p, comb(p, 2) - m, n - p


def uep_graph(n: int, m: int) -> Witness:
    """Snapshot of the elimination procedure on K_n with m edges left.

    Vertices are cleared in index order; each vertex loses its edge to the
    highest-indexed remaining neighbour first.  The result is
    H(p, q, r) = (K_p minus a q-edge star) plus r isolated vertices.
    """
    p, q, r = uep_parameters(n, m)
    edges = set(_pairs_from(r, n))
    for w in range(n - 1, n - 1 - q, -1):
        edges.discard((r, w))
    return _make(Graph(n, frozenset(edges)), Recipe.UEP)


def _pairs_from(first: int, n: int):
    return ((u, v) for u in range(first, n) for v in range(u + 1, n))


def paw_free_edges(n: int, m: int) -> set[tuple[int, int]]:
    if m <= comb(n - 1, 2):
        # Vertex n - 1 stays isolated.
        return paw_free_edges(n - 1, m) if n > 1 else set()
    deleted = comb(n, 2) - m
    q, p = divmod(deleted, 3)
    assert 3 * q + 2 * p <= n, (n, m)
    removed = set()
    for i in range(q):
        a = 3 * i
        removed |= {(a, a + 1), (a, a + 2), (a + 1, a + 2)}
    base = 3 * q
    for i in range(p):
        removed.add((base + 2 * i, base + 2 * i + 1))
    return set(complete_graph(n).edges) - removed


def paw_free_witness(n: int, m: int) -> Witness:
    """Paw-free graph on n vertices with m edges.

    Above C(n-1, 2) edges, delete q disjoint triangles and p <= 2 disjoint
    edges from K_n where C(n, 2) - m = 3q + p; the deleted edges form a
    disjoint union of cliques, so no induced paw can appear.  Below that
    threshold, recurse on n - 1 vertices and keep the last one isolated.
    """
    if n < 1 or not 0 <= m <= comb(n, 2):
        raise DomainError(f"need n >= 1 and 0 <= m <= C(n, 2) (got n={n}, m={m})")
    return _make(Graph(n, frozenset(paw_free_edges(n, m))), Recipe.PAW_FREE)
