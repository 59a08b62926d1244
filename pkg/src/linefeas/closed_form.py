"""Closed-form feasibility intervals and the extremal functions behind them.

Every square-root boundary is decided with :func:`math.isqrt`; nothing in
this module touches floating point.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb, isqrt
from typing import Iterator


class DomainError(ValueError):
    """Arguments fall outside the range where a formula is defined."""


class OutOfRange(ValueError):
    """M is outside ``[0, C(N, 2)]``."""


@dataclass(frozen=True)
class IntervalSet:
    """Ordered, disjoint closed integer intervals of non-feasible M for one N."""

    n: int
    intervals: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        prev_hi = -1
        for lo, hi in self.intervals:
            if lo > hi or lo <= prev_hi:
                raise ValueError(f"intervals not disjoint/increasing: {self.intervals}")
            prev_hi = hi

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.intervals)

    def __len__(self) -> int:
        return len(self.intervals)

    def __contains__(self, m: int) -> bool:
        return self.find(m) is not None

    def find(self, m: int) -> tuple[int, int] | None:
        for lo, hi in self.intervals:
            if lo <= m <= hi:
                return (lo, hi)
        return None

    def as_set(self) -> set[int]:
        return {m for lo, hi in self.intervals for m in range(lo, hi + 1)}

    def to_dict(self) -> dict:
        return {"n": self.n, "nonfeasible": [[lo, hi] for lo, hi in self.intervals]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "IntervalSet":
        data = json.loads(text)
        return cls(data["n"], tuple((lo, hi) for lo, hi in data["nonfeasible"]))


@dataclass(frozen=True)
class TCutoff:
    n: int
    t_max: int
    boundary_exact: bool


def _exact_half(numerator_shift: int, radicand: int) -> tuple[int, bool]:
    """floor((shift + sqrt(radicand)) / 2) and whether the value is an integer."""
    s = isqrt(radicand)
    exact = s * s == radicand and (s + numerator_shift) % 2 == 0
    return (s + numerator_shift) // 2, exact


def t_cutoff(n: int) -> TCutoff:
    """Largest t with 1 <= t < (-5 + sqrt(8n + 17)) / 2 (0 if none)."""
    if n < 2:
        raise DomainError("t_cutoff needs N >= 2")
    t, exact = _exact_half(-5, 8 * n + 17)
    if exact:
        t -= 1
    return TCutoff(n, max(t, 0), exact)


def nonfeasible_intervals(n: int) -> IntervalSet:
    if n < 1:
        raise DomainError("N must be >= 1")
    if n <= 4:
        return IntervalSet(n)
    t_max = t_cutoff(n).t_max
    found = []
    for t in range(t_max, 0, -1):
        lo = comb(n - t, 2) + comb(t + 2, 2)
        hi = comb(n - t + 1, 2) - 1
        if lo <= hi:
            found.append((lo, hi))
    return IntervalSet(n, tuple(found))


def min_nonfeasible(n: int) -> int | None:
    if n < 1:
        raise DomainError("N must be >= 1")
    if n <= 4:
        return None
    t = t_cutoff(n).t_max
    return comb(n - t, 2) + comb(t + 2, 2)


def is_feasible_closed(n: int, m: int) -> bool:
    if n < 1:
        raise DomainError("N must be >= 1")
    if not 0 <= m <= comb(n, 2):
        raise OutOfRange(f"M={m} outside [0, {comb(n, 2)}] for N={n}")
    return m not in nonfeasible_intervals(n)


def f_high(n: int, t: int) -> int:
    """Maximum e(L(G)) over e(G) = n, max degree n - t, for n >= 2t + 1."""
    if t < 0 or n < 2 * t + 1:
        raise DomainError(f"f_high needs N >= 2t + 1 and t >= 0 (got N={n}, t={t})")
    return comb(n - t, 2) + comb(t + 2, 2) - 1


def f_half(n: int) -> int:
    """f(N, N/2) for even N >= 6."""
    if n % 2 or n < 6:
        raise DomainError("f_half needs even N >= 6")
    return n * n // 4 + 3


def f_upper_bound_low_delta(n: int, delta: int) -> int:
    """Upper bound min(N(delta - 1), floor(N^2 / 3)) on f(N, delta), delta <= N/2."""
    if n < 12 or not 1 <= delta <= n // 2:
        raise DomainError("needs N >= 12 and 1 <= delta <= N/2")
    return min(n * (delta - 1), n * n // 3)


def g_closed(n: int, delta: int) -> int:
    """Maximum e(L(F)) over forests F with n edges and maximum degree delta."""
    if delta < 1 or delta > n:
        raise DomainError(f"g_closed needs 1 <= delta <= N (got N={n}, delta={delta})")
    if delta == 1:
        return 0
    k = (n - 1) % (delta - 1)
    return (n - k - 1) // (delta - 1) * comb(delta, 2) + comb(k + 1, 2)


def star_forest_cover_cutoff(n: int) -> int:
    """ceil((-15 + sqrt(153 + 72 N)) / 2)."""
    if n < 1:
        raise DomainError("N must be >= 1")
    radicand = 153 + 72 * n
    s = isqrt(radicand)
    if s * s == radicand:
        return -((15 - s) // 2)
    # sqrt is irrational: the value lies strictly between (s-15)/2 and (s-14)/2.
    return (s - 15) // 2 + 1


def acyclic_gap_t(n: int) -> int:
    """floor((-3 + sqrt(8N + 1)) / 2), minus one when that value is integral."""
    if n < 2:
        raise DomainError("N must be >= 2")
    t, exact = _exact_half(-3, 8 * n + 1)
    return t - 1 if exact else t
