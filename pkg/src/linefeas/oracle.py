"""Brute-force ground truth over integer partitions of 2N.

By the degree-sum identity a pair (N, M) is feasible exactly when some
graphical partition of 2N has sum of C(d, 2) equal to M, so no graph is
ever built here.  The partition space is split by largest part; each piece
is scanned independently into a bitset of reached M values and the pieces
are merged with bitwise OR.
"""

from __future__ import annotations

import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb

from .graph_core import _erdos_gallai, is_forest_sequence

DEFAULT_LIMIT = 35
DEFAULT_ACYCLIC_LIMIT = 22

sys.setrecursionlimit(max(sys.getrecursionlimit(), 10_000))


class LimitExceeded(ValueError):
    """N is above the configured enumeration cap."""


class NoSuchGraph(ValueError):
    """No graph with the requested edge count and maximum degree exists."""


@dataclass(frozen=True)
class FeasibilityReport:
    n: int
    bits: int  # bit m set iff (n, m) is feasible
    elapsed: float = 0.0
    sequences_examined: int = 0
    acyclic: bool = False

    @property
    def feasible_m(self) -> list[int]:
        return [m for m in range(comb(self.n, 2) + 1) if (self.bits >> m) & 1]

    @property
    def nonfeasible_m(self) -> list[int]:
        return [m for m in range(comb(self.n, 2) + 1) if not (self.bits >> m) & 1]

    def is_feasible(self, m: int) -> bool:
        return bool((self.bits >> m) & 1)

    def min_nonfeasible(self) -> int | None:
        missing = self.nonfeasible_m
        return missing[0] if missing else None

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "nonfeasible": self.nonfeasible_m,
            "count_feasible": bin(self.bits).count("1"),
            "sequences_examined": self.sequences_examined,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))


def _walk(parts: list[int], rest: int, cap: int, m: int, min_parts: int, leaf) -> None:
    """Extend ``parts`` by every non-increasing completion summing to ``rest``.

    ``min_parts`` prunes branches that cannot reach that many parts.
    """
    if rest == 0:
        leaf(parts, m)
        return
    if len(parts) + rest < min_parts:
        return
    if cap == 1:
        parts.extend([1] * rest)
        leaf(parts, m)
        del parts[-rest:]
        return
    for d in range(min(rest, cap), 0, -1):
        parts.append(d)
        _walk(parts, rest - d, d, m + d * (d - 1) // 2, min_parts, leaf)
        parts.pop()


def _scan_largest(args: tuple[int, int, bool]) -> tuple[int, int]:
    """Bitset of M values over partitions of 2n with first part ``largest``."""
    n, largest, acyclic = args
    bits = 0
    count = 0
    # A graphical sequence with top degree D has at least D + 1 entries; a
    # forest with n edges has at least n + 1 vertices.
    min_parts = n + 1 if acyclic else largest + 1

    def leaf(parts, m):
        nonlocal bits, count
        count += 1
        if (bits >> m) & 1:
            return
        ok = is_forest_sequence(parts) if acyclic else _erdos_gallai(parts)
        if ok:
            bits |= 1 << m

    _walk([largest], 2 * n - largest, largest, comb(largest, 2), min_parts, leaf)
    return bits, count


def _sweep(n: int, acyclic: bool, workers: int | None) -> tuple[int, int]:
    tasks = [(n, d, acyclic) for d in range(n, 0, -1)]
    workers = workers or os.cpu_count() or 1
    if workers <= 1 or n < 12:
        results = map(_scan_largest, tasks)
        return _merge(results)
    with ProcessPoolExecutor(max_workers=min(workers, len(tasks))) as pool:
        return _merge(pool.map(_scan_largest, tasks))


def _merge(results) -> tuple[int, int]:
    bits = 0
    count = 0
    for b, c in results:
        bits |= b
        count += c
    return bits, count


def feasible_set(n: int, limit: int = DEFAULT_LIMIT, workers: int | None = 1) -> FeasibilityReport:
    """All M with (n, M) realizable by a line graph, by exhaustive enumeration."""
    if n < 1:
        raise ValueError("N must be >= 1")
    if n > limit:
        raise LimitExceeded(f"N={n} exceeds oracle limit {limit}")
    start = time.perf_counter()
    bits, count = _sweep(n, False, workers)
    return FeasibilityReport(n, bits, time.perf_counter() - start, count)


def feasible_set_acyclic(n: int, limit: int = DEFAULT_ACYCLIC_LIMIT,
                         workers: int | None = 1) -> FeasibilityReport:
    """All M realizable as e(L(F)) for a forest F with n edges."""
    if n < 1:
        raise ValueError("N must be >= 1")
    if n > limit:
        raise LimitExceeded(f"N={n} exceeds acyclic oracle limit {limit}")
    start = time.perf_counter()
    bits, count = _sweep(n, True, workers)
    return FeasibilityReport(n, bits, time.perf_counter() - start, count, acyclic=True)


def _max_by_top_degree(n: int, acyclic: bool) -> dict[int, int]:
    best: dict[int, int] = {}
    for largest in range(1, n + 1):
        top = -1
        min_parts = n + 1 if acyclic else largest + 1

        def leaf(parts, m):
            nonlocal top
            if m <= top:
                return
            ok = is_forest_sequence(parts) if acyclic else _erdos_gallai(parts)
            if ok:
                top = m

        _walk([largest], 2 * n - largest, largest, comb(largest, 2), min_parts, leaf)
        if top >= 0:
            best[largest] = top
    return best


@lru_cache(maxsize=None)
def f_table(n: int) -> dict[int, int]:
    """Map max degree -> f(n, max degree) for every achievable max degree."""
    return _max_by_top_degree(n, acyclic=False)


@lru_cache(maxsize=None)
def g_table(n: int) -> dict[int, int]:
    return _max_by_top_degree(n, acyclic=True)


def f_exact(n: int, delta: int, limit: int = DEFAULT_LIMIT) -> int:
    """max e(L(G)) over graphs with n edges, maximum degree delta, no isolated vertices."""
    if not 1 <= delta <= n:
        raise ValueError(f"need 1 <= delta <= N (got N={n}, delta={delta})")
    if n > limit:
        raise LimitExceeded(f"N={n} exceeds oracle limit {limit}")
    table = f_table(n)
    if delta not in table:
        raise NoSuchGraph(f"no graph with {n} edges and maximum degree {delta}")
    return table[delta]


def g_exact(n: int, delta: int, limit: int = DEFAULT_ACYCLIC_LIMIT) -> int:
    """Forest analogue of :func:`f_exact`."""
    if not 1 <= delta <= n:
        raise ValueError(f"need 1 <= delta <= N (got N={n}, delta={delta})")
    if n > limit:
        raise LimitExceeded(f"N={n} exceeds acyclic oracle limit {limit}")
    table = g_table(n)
    if delta not in table:
        raise NoSuchGraph(f"no forest with {n} edges and maximum degree {delta}")
    return table[delta]
