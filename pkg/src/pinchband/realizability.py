"""Realizable (normal Euler number, first Betti number) pairs for T(2,n).

A pair (e, h) is realizable for T(2,n) when some smooth, possibly
non-orientable surface in the 4-ball with boundary T(2,n) has e(F) = e and
b1(F) = h. ``status_allen`` gives the classification known before the
Mobius bands for T(2,5) and T(2,9); ``status_post`` adds everything those
two bands generate under stabilization.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable

from .errors import InvalidN

__all__ = [
    "Verdict",
    "PairQuery",
    "PairStatus",
    "MinimalPointReport",
    "SEEDS",
    "status_allen",
    "status_post",
    "stabilize_closure",
    "minimal_points",
    "grid",
    "grid_csv",
]


class Verdict(str, Enum):
    REALIZABLE = "Realizable"
    UNKNOWN = "Unknown"
    NOT_REALIZABLE = "NotRealizable"

    def __str__(self):
        return self.value


SET_NEG = "(-2n-2m, 1+m+2l)"
SET_POS = "(-2n+2m, 1+m+2l)"
SET_BAND_SUM = "(2+2m, n+m)"
UNKNOWN_1 = "(4-2n+2m, 1+m), m < n-1"
UNKNOWN_3 = "(8-2n+2m, 3+m), m < n-3"
NO_DISK = "h = 0: T(2,n) is not slice"
OTHER = "all other pairs"

# Mobius bands with negative definite double branched cover
SEEDS = frozenset({(5, -6, 1), (9, -14, 1)})


@dataclass(frozen=True)
class PairQuery:
    n: int
    e: int
    h: int

    def __post_init__(self):
        _check_n(self.n)
        if self.h < 0:
            raise ValueError(f"h must be non-negative, got {self.h}")


@dataclass(frozen=True)
class PairStatus:
    verdict: Verdict
    clause: str
    witness: dict = field(default_factory=dict, compare=False)

    @property
    def realizable(self) -> bool:
        return self.verdict is Verdict.REALIZABLE

    def as_dict(self) -> dict:
        return {"verdict": self.verdict.value, "clause": self.clause, "witness": dict(self.witness)}


@dataclass(frozen=True)
class MinimalPointReport:
    n: int
    post: bool
    gamma4: int
    minimal_points: tuple[int, ...]
    g4_orientable: int

    @property
    def unique(self) -> bool:
        return len(self.minimal_points) == 1

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "post": self.post,
            "gamma4": self.gamma4,
            "minimal_points": list(self.minimal_points),
            "g4_orientable": self.g4_orientable,
            "unique": self.unique,
        }


def _check_n(n: int):
    if n < 3 or n % 2 == 0:
        raise InvalidN(f"n must be odd and at least 3, got {n}")


def _query(q, e=None, h=None) -> PairQuery:
    if isinstance(q, PairQuery):
        return q
    return PairQuery(q, e, h)


def status_allen(q: PairQuery | int, e: int | None = None, h: int | None = None) -> PairStatus:
    """Classification before the two Mobius bands, checked in verdict order.

    A pair that matches a realizable and an unknown expression is
    Realizable. Accepts a :class:`PairQuery` or ``(n, e, h)``.
    """
    q = _query(q, e, h)
    n, e, h = q.n, q.e, q.h
    if h == 0:
        return PairStatus(Verdict.NOT_REALIZABLE, NO_DISK)
    if e % 2 == 0:
        m2 = e + 2 * n
        m = abs(m2) // 2
        rest = h - 1 - m
        if rest >= 0 and rest % 2 == 0:
            clause = SET_NEG if m2 < 0 else SET_POS
            return PairStatus(Verdict.REALIZABLE, clause, {"m": m, "l": rest // 2})
        m = (e - 2) // 2
        if m >= 0 and h == n + m:
            return PairStatus(Verdict.REALIZABLE, SET_BAND_SUM, {"m": m})
        m = h - 1 if n % 4 == 1 else h - 3
        base = 4 - 2 * n if n % 4 == 1 else 8 - 2 * n
        bound = n - 1 if n % 4 == 1 else n - 3
        if 0 <= m < bound and e == base + 2 * m:
            return PairStatus(
                Verdict.UNKNOWN, UNKNOWN_1 if n % 4 == 1 else UNKNOWN_3, {"m": m}
            )
    return PairStatus(Verdict.NOT_REALIZABLE, OTHER)


def _post_lower_bound(n: int) -> int:
    k = (n - 9) // 4 if n % 4 == 1 else (n - 11) // 4
    return max(0, 4 * k)


def status_post(q: PairQuery | int, e: int | None = None, h: int | None = None) -> PairStatus:
    """Upgrade unknown pairs generated by the bands for T(2,5) and T(2,9).

    With n = 4k+9 (or 4k+11), unknown pairs with m >= 4k become
    Realizable; for n = 5, 7, 9, 11 that is every unknown pair.
    """
    q = _query(q, e, h)
    base = status_allen(q)
    if base.verdict is not Verdict.UNKNOWN:
        return base
    m = base.witness["m"]
    low = _post_lower_bound(q.n)
    if m >= low:
        core = "(4-2n+2m, 1+m)" if q.n % 4 == 1 else "(8-2n+2m, 3+m)"
        return PairStatus(
            Verdict.REALIZABLE,
            f"stabilized Mobius band {core}, m >= {low}",
            {"m": m, "from": _origin(q.n)},
        )
    return base


def _origin(n):
    # n = 5 and n = 7 come from the T(2,5) band, everything else from T(2,9)
    return [5, -6, 1] if n in (5, 7) else [9, -14, 1]


def stabilize_closure(
    seeds: Iterable[tuple[int, int, int]], n_max: int, h_max: int
) -> list[tuple[int, int, int]]:
    """Least set containing ``seeds`` closed under the two stabilizations.

    (n, e, h) -> (n, e+2, h+1) adds a standard Mobius band;
    (n, e, h) -> (n+2, e, h+2) glues the genus one cobordism
    T(2,n) -> T(2,n+2). Output is sorted.
    """
    out = set()
    stack = [tuple(s) for s in seeds if s[0] <= n_max and s[2] <= h_max]
    while stack:
        p = stack.pop()
        if p in out:
            continue
        out.add(p)
        n, e, h = p
        for nxt in ((n, e + 2, h + 1), (n + 2, e, h + 2)):
            if nxt[0] <= n_max and nxt[2] <= h_max and nxt not in out:
                stack.append(nxt)
    return sorted(out)


def minimal_points(n: int, post: bool = False) -> MinimalPointReport:
    """Realizable pairs with the least h, scanning e in [-2n-2, 2n+2].

    Every set expression is at e >= -2n - 2m with h >= 1 + m, so the
    least h is at most 1 (the pair (-2n, 1)) and that window holds every
    pair with h <= 3.
    """
    _check_n(n)
    status = status_post if post else status_allen
    window = range(-2 * n - 2, 2 * n + 3)
    h = 0
    while True:
        pts = tuple(e for e in window if status(n, e, h).realizable)
        if pts:
            return MinimalPointReport(n, post, h, pts, (n - 1) // 2)
        h += 1


def grid(
    n: int,
    e_range: tuple[int, int],
    h_range: tuple[int, int],
    post: bool = False,
) -> list[tuple[int, int, int, PairStatus]]:
    """One status per lattice point, inclusive ranges, sorted by (h, e)."""
    _check_n(n)
    (e0, e1), (h0, h1) = e_range, h_range
    if e0 > e1 or h0 > h1 or h0 < 0:
        raise ValueError(f"bad grid ranges e={e_range} h={h_range}")
    status = status_post if post else status_allen
    return [
        (n, e, h, status(n, e, h))
        for h in range(h0, h1 + 1)
        for e in range(e0, e1 + 1)
    ]


def grid_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "e", "h", "status", "clause"])
    for n, e, h, st in rows:
        w.writerow([n, e, h, st.verdict.value, st.clause])
    return buf.getvalue()
