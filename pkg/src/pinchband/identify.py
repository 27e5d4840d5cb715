"""Knot identification: Kauffman bracket, fingerprints, R1/R2 simplification
and exact table lookup."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .diagram import Diagram, UNKNOT, _dart_faces, _normalize, _occurrences, orient
from .errors import Ambiguous, DiagramError, TooManyCrossings, UnknownKnot
from .goeritz import knot_signature
from .laurent import LaurentPoly

__all__ = [
    "KnotFingerprint",
    "KnotId",
    "MAX_BRACKET_CROSSINGS",
    "kauffman_bracket",
    "fingerprint",
    "simplify",
    "identify",
    "table_ids",
]

MAX_BRACKET_CROSSINGS = 16


@dataclass(frozen=True)
class KnotFingerprint:
    determinant: int
    signature: int
    # (-A^3)^(-w) <D>
    bracket: LaurentPoly

    def as_dict(self) -> dict:
        return {
            "determinant": self.determinant,
            "signature": self.signature,
            "bracket": str(self.bracket),
        }


@dataclass(frozen=True)
class KnotId:
    name: str
    slice: bool
    fingerprint: KnotFingerprint

    @property
    def signature(self) -> int:
        return self.fingerprint.signature

    def __str__(self):
        return self.name


def _join(mate, x, y):
    """Join the ends ``x`` and ``y`` by a smoothing arc; return closed loops."""
    if x == y:
        return 1
    x_open, y_open = x in mate, y in mate
    if x_open and mate[x] == y:
        del mate[x], mate[y]
        return 1
    fx = mate.pop(x) if x_open else x
    fy = mate.pop(y) if y_open else y
    mate[fx] = fy
    mate[fy] = fx
    return 0


def kauffman_bracket(diagram: Diagram) -> LaurentPoly:
    """Bracket state sum, normalized so the 0-crossing unknot gives 1.

    The A-smoothing of ``X(a,b,c,d)`` joins ``a-b`` and ``c-d``; each loop
    beyond the first contributes ``-A^2 - A^-2``. States are contracted one
    crossing at a time, keyed by how the open ends are paired.
    """
    xs = diagram.crossings
    if len(xs) > MAX_BRACKET_CROSSINGS:
        raise TooManyCrossings(
            f"{len(xs)} crossings exceeds the bracket budget of {MAX_BRACKET_CROSSINGS}"
        )
    if not xs:
        return LaurentPoly({0: 1})
    # state key -> {(A exponent, loops): coefficient}
    states: dict[tuple, dict[tuple[int, int], int]] = {(): {(0, 0): 1}}
    for a, b, c, d in xs:
        nxt: dict[tuple, dict[tuple[int, int], int]] = {}
        for key, poly in states.items():
            for weight, pairs in ((1, ((a, b), (c, d))), (-1, ((a, d), (b, c)))):
                mate = dict(key)
                mate.update((v, u) for u, v in key)
                loops = sum(_join(mate, u, v) for u, v in pairs)
                new_key = tuple(sorted((u, v) for u, v in mate.items() if u < v))
                bucket = nxt.setdefault(new_key, {})
                for (e, l), coeff in poly.items():
                    k2 = (e + weight, l + loops)
                    bucket[k2] = bucket.get(k2, 0) + coeff
        states = nxt
    loop = LaurentPoly({2: -1, -2: -1})
    total = LaurentPoly()
    for (e, l), coeff in states[()].items():
        total = total + (loop ** (l - 1)).shift(e) * coeff
    return total


def fingerprint(diagram: Diagram) -> KnotFingerprint:
    rep = knot_signature(diagram)
    w = orient(diagram).writhe
    norm = LaurentPoly({-3 * w: (-1) ** (w % 2)})
    return KnotFingerprint(rep.determinant, rep.sigma, kauffman_bracket(diagram) * norm)


# ---------------------------------------------------------------- simplification


class _UF:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        p = self.parent.setdefault(x, x)
        if p != x:
            p = self.parent[x] = self.find(p)
        return p

    def union(self, x, y):
        self.parent[self.find(x)] = self.find(y)


def _rebuild(xs, drop, uf):
    kept = [tuple(uf.find(l) for l in x) for i, x in enumerate(xs) if i not in drop]
    if not kept:
        return UNKNOT
    return _normalize(kept)


def _reduce_r1(xs):
    for i, x in enumerate(xs):
        for s in range(4):
            if x[s] == x[(s + 1) % 4]:
                p, q = x[(s + 2) % 4], x[(s + 3) % 4]
                if p == q:
                    return UNKNOT if len(xs) == 1 else None
                uf = _UF()
                uf.union(q, p)
                return _rebuild(xs, {i}, uf)
    return None


def _reduce_r2(xs):
    occ = _occurrences(xs)
    orbits, _ = _dart_faces(xs, occ)
    for orbit in orbits:
        if len(orbit) != 2:
            continue
        (cx, s1), (cy, s2) = orbit
        if cx == cy:
            continue
        e, f = xs[cx][s1], xs[cy][s2]
        (_, t1) = next(o for o in occ[e] if o != (cx, s1))
        (_, t2) = next(o for o in occ[f] if o != (cy, s2))
        if s1 % 2 != t1 % 2:
            continue  # alternating bigon
        uf = _UF()
        uf.union(xs[cx][(s1 + 2) % 4], xs[cy][(t1 + 2) % 4])
        uf.union(xs[cy][(s2 + 2) % 4], xs[cx][(t2 + 2) % 4])
        try:
            return _rebuild(xs, {cx, cy}, uf)
        except DiagramError:
            continue
    return None


def simplify(diagram: Diagram) -> Diagram:
    """Greedy removal of R1 kinks and R2 bigons until none remain."""
    current = diagram
    while current.crossings:
        xs = [tuple(x) for x in current.crossings]
        nxt = _reduce_r1(xs)
        if nxt is None:
            nxt = _reduce_r2(xs)
        if nxt is None:
            break
        current = nxt
    if current is diagram:
        return diagram
    return Diagram(current.crossings, label=diagram.label)


# ---------------------------------------------------------------- lookup


@lru_cache(maxsize=None)
def table_ids() -> tuple[KnotId, ...]:
    from .diagram import parse_pd
    from .table import TABLE

    return tuple(
        KnotId(e.name, e.slice, fingerprint(parse_pd(e.pd))) for e in TABLE
    )


def identify(diagram: Diagram) -> KnotId:
    """Simplify, fingerprint and match against the builtin table.

    Raises :class:`UnknownKnot` when nothing matches and :class:`Ambiguous`
    when several entries share the fingerprint.
    """
    fp = fingerprint(simplify(diagram))
    hits = [k for k in table_ids() if k.fingerprint == fp]
    if not hits:
        raise UnknownKnot(f"no table knot with det={fp.determinant}, sigma={fp.signature}")
    if len(hits) > 1:
        raise Ambiguous("several table knots share this fingerprint", hits)
    return hits[0]
