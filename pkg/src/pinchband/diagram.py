"""Knot diagrams as planar-diagram (PD) codes.

A crossing ``X(a,b,c,d)`` lists its four incident edges counterclockwise,
starting from the incoming under-strand. Slots 0 and 2 carry the under
strand, slots 1 and 3 the over strand.

Orientation is recovered by walking the strands, so inputs whose under
strand runs ``c -> a`` are still accepted; :func:`canonical` rotates every
crossing back to the convention.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

from .errors import (
    EdgeLabelError,
    EvenParameter,
    MultiComponentError,
    PDSyntaxError,
    PlanarityError,
)

__all__ = [
    "Crossing",
    "Diagram",
    "OrientedDiagram",
    "parse_pd",
    "emit_pd",
    "orient",
    "writhe",
    "mirror",
    "faces",
    "canonical",
    "torus_2n_diagram",
    "table_diagram",
    "braid_closure",
    "add_curl",
    "random_diagram",
    "UNKNOT",
]

# unit vectors pointing from the crossing towards slot k (slot 0 south, ccw)
_SLOT_VEC = ((0, -1), (1, 0), (0, 1), (-1, 0))


class Crossing(NamedTuple):
    a: int
    b: int
    c: int
    d: int

    def rotated(self, k: int) -> "Crossing":
        k %= 4
        return Crossing(*(self[k:] + self[:k]))


@dataclass(frozen=True)
class Diagram:
    """A validated single-component knot diagram."""

    crossings: tuple[Crossing, ...]
    label: str | None = field(default=None, compare=False)

    def __post_init__(self):
        xs = tuple(Crossing(*map(int, x)) for x in self.crossings)
        object.__setattr__(self, "crossings", xs)
        _validate(xs)

    @property
    def edge_count(self) -> int:
        return 2 * len(self.crossings)

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    def __len__(self):
        return len(self.crossings)

    def __str__(self):
        return emit_pd(self)


@dataclass(frozen=True)
class OrientedDiagram:
    diagram: Diagram
    signs: tuple[int, ...]
    # per crossing: (incoming under slot, incoming over slot)
    incoming: tuple[tuple[int, int], ...]
    # per edge label: (tail occurrence, head occurrence) as (crossing, slot)
    ends: dict = field(compare=False, repr=False)
    traversal: tuple[int, ...] = field(compare=False, repr=False)

    @property
    def writhe(self) -> int:
        return sum(self.signs)


# ---------------------------------------------------------------- internals


def _occurrences(xs: Sequence[Sequence[int]]) -> dict[int, list[tuple[int, int]]]:
    occ: dict[int, list[tuple[int, int]]] = {}
    for ci, x in enumerate(xs):
        for s, lab in enumerate(x):
            occ.setdefault(lab, []).append((ci, s))
    return occ


def _check_labels(xs, contiguous=True):
    occ = _occurrences(xs)
    bad = sorted(lab for lab, o in occ.items() if len(o) != 2)
    if bad:
        raise EdgeLabelError(f"edge labels not used exactly twice: {bad}")
    if contiguous and set(occ) != set(range(1, 2 * len(xs) + 1)):
        raise EdgeLabelError(f"edge labels must be exactly 1..{2 * len(xs)}")
    return occ


def _other(occ, lab, here):
    o1, o2 = occ[lab]
    return o2 if o1 == here else o1


def _walk(xs, occ, start_tail):
    """Follow the strand leaving ``start_tail``; return the edge ends in order.

    Each step yields (label, tail occurrence, head occurrence).
    """
    steps = []
    tail = start_tail
    while True:
        ci, s = tail
        lab = xs[ci][s]
        head = _other(occ, lab, tail)
        steps.append((lab, tail, head))
        hc, hs = head
        tail = (hc, (hs + 2) % 4)
        if tail == start_tail:
            return steps
        if len(steps) > len(occ):
            raise MultiComponentError("strand walk did not close up")


def _start_tail(xs, occ):
    """Deterministic orientation: lowest label, direction from the PD convention."""
    lab = min(occ)
    o1, o2 = occ[lab]
    for o, other in ((o1, o2), (o2, o1)):
        if o[1] == 0:
            return other  # incoming under slot is the head
        if o[1] == 2:
            return o
    for o, other in ((o1, o2), (o2, o1)):
        hc, hs = other
        if xs[hc][(hs + 2) % 4] == lab + 1:
            return o
    return o1


def _orientation(xs, occ=None, reverse=False):
    if occ is None:
        occ = _occurrences(xs)
    start = _start_tail(xs, occ)
    if reverse:
        lab = xs[start[0]][start[1]]
        start = _other(occ, lab, start)
    steps = _walk(xs, occ, start)
    if len(steps) != len(occ):
        raise MultiComponentError(
            f"traversal covers {len(steps)} of {len(occ)} edges; diagram is not a knot"
        )
    return steps


def _dart_faces(xs, occ):
    """Faces as orbits of darts (crossing, slot), each dart leaving through a slot.

    Following a dart to the far end and turning to the clockwise-next slot
    keeps the face on the left of travel.
    """
    face_of: dict[tuple[int, int], int] = {}
    orbits = []
    for ci in range(len(xs)):
        for s in range(4):
            if (ci, s) in face_of:
                continue
            fid = len(orbits)
            orbit = []
            d = (ci, s)
            while d not in face_of:
                face_of[d] = fid
                orbit.append(d)
                far = _other(occ, xs[d[0]][d[1]], d)
                d = (far[0], (far[1] - 1) % 4)
            orbits.append(orbit)
    return orbits, face_of


def _validate(xs):
    if not xs:
        return
    occ = _check_labels(xs)
    _orientation(xs, occ)
    orbits, _ = _dart_faces(xs, occ)
    v = len(xs)
    if v - 2 * v + len(orbits) != 2:
        raise PlanarityError(
            f"Euler check failed: V={v}, E={2 * v}, F={len(orbits)}"
        )


def _signs_from_incoming(incoming):
    signs = []
    for ku, ko in incoming:
        ux, uy = (-c for c in _SLOT_VEC[ku])
        ox, oy = (-c for c in _SLOT_VEC[ko])
        cross = ox * uy - oy * ux
        signs.append(1 if cross > 0 else -1)
    return tuple(signs)


def _normalize(xs, label=None) -> Diagram:
    """Relabel arbitrary (twice-used) labels along the traversal, rotate each
    crossing to start at its incoming under-strand, sort by that label."""
    xs = [tuple(x) for x in xs]
    if not xs:
        return Diagram((), label=label)
    occ = _check_labels(xs, contiguous=False)
    steps = _orientation(xs, occ)
    new = {}
    incoming_slot = {}
    for i, (lab, _tail, head) in enumerate(steps, start=1):
        new[lab] = i
        if head[1] % 2 == 0:
            incoming_slot[head[0]] = head[1]
    out = []
    for ci, x in enumerate(xs):
        k = incoming_slot[ci]
        out.append(Crossing(*(new[l] for l in x)).rotated(k))
    out.sort()
    return Diagram(tuple(out), label=label)


# ---------------------------------------------------------------- codec

_ITEM = r"X\(\s*[1-9]\d*\s*(?:,\s*[1-9]\d*\s*){3}\)"
_PD_RE = re.compile(rf"\s*PD\s*\[\s*(?:{_ITEM}\s*(?:,\s*{_ITEM}\s*)*)?\]\s*")
_ITEM_RE = re.compile(r"X\(([^)]*)\)")


def parse_pd(text: str, label: str | None = None) -> Diagram:
    """Parse ``PD[X(a,b,c,d), ...]`` into a validated :class:`Diagram`."""
    if not isinstance(text, str) or not _PD_RE.fullmatch(text):
        raise PDSyntaxError(f"not a PD code: {text!r}")
    xs = [
        Crossing(*(int(t) for t in m.group(1).split(",")))
        for m in _ITEM_RE.finditer(text)
    ]
    return Diagram(tuple(xs), label=label)


def emit_pd(diagram: Diagram) -> str:
    items = ",".join("X({},{},{},{})".format(*x) for x in diagram.crossings)
    return f"PD[{items}]"


# ---------------------------------------------------------------- orientation


def orient(diagram: Diagram, reverse: bool = False) -> OrientedDiagram:
    """Orient by walking from the lowest edge label and assign crossing signs.

    ``reverse=True`` walks the opposite way; signs are unchanged for knots.
    """
    xs = diagram.crossings
    if not xs:
        return OrientedDiagram(diagram, (), (), {}, ())
    occ = _occurrences(xs)
    steps = _orientation(xs, occ, reverse=reverse)
    under_in = {}
    over_in = {}
    ends = {}
    for lab, tail, head in steps:
        ends[lab] = (tail, head)
        ci, s = head
        (under_in if s % 2 == 0 else over_in)[ci] = s
    incoming = tuple((under_in[i], over_in[i]) for i in range(len(xs)))
    return OrientedDiagram(
        diagram,
        _signs_from_incoming(incoming),
        incoming,
        ends,
        tuple(lab for lab, _, _ in steps),
    )


def writhe(od: OrientedDiagram | Diagram) -> int:
    if isinstance(od, Diagram):
        od = orient(od)
    return od.writhe


def canonical(diagram: Diagram) -> Diagram:
    return _normalize(diagram.crossings, label=diagram.label)


def mirror(diagram: Diagram) -> Diagram:
    """Change every crossing; the new under strand enters at the old over-in slot."""
    if not diagram.crossings:
        return diagram
    od = orient(diagram)
    xs = tuple(x.rotated(ko) for x, (_, ko) in zip(diagram.crossings, od.incoming))
    label = None if diagram.label is None else f"mirror({diagram.label})"
    return Diagram(xs, label=label)


def faces(diagram: Diagram) -> list[tuple[tuple[int, str], ...]]:
    """Faces as cyclic sequences of edge-sides ``(label, 'L'|'R')``.

    Sides are relative to the orientation from :func:`orient`; the face on
    side ``L`` of an edge lies to its left.
    """
    xs = diagram.crossings
    if not xs:
        return [((1, "L"),), ((1, "R"),)]
    occ = _occurrences(xs)
    orbits, _ = _dart_faces(xs, occ)
    od = orient(diagram)
    tails = {tail: lab for lab, (tail, _head) in od.ends.items()}
    out = []
    for orbit in orbits:
        out.append(
            tuple(
                (xs[c][s], "L" if (c, s) in tails else "R") for c, s in orbit
            )
        )
    if len(out) - len(xs) != 2:
        raise PlanarityError("face count does not satisfy Euler's formula")
    return out


def edge_side_faces(diagram: Diagram) -> dict[tuple[int, str], int]:
    """Map each edge-side to the index of its face in :func:`faces`."""
    out = {}
    for fid, face in enumerate(faces(diagram)):
        for es in face:
            out[es] = fid
    return out


# ---------------------------------------------------------------- generators

UNKNOT = Diagram((), label="unknot")


def _wrap(x, m):
    return (x - 1) % m + 1


def torus_2n_diagram(n: int) -> Diagram:
    """Closed positive 2-braid with ``n`` crossings (writhe ``+n``)."""
    if n < 1 or n % 2 == 0:
        raise EvenParameter(f"T(2,n) needs odd n >= 1, got {n}")
    m = 2 * n
    xs = [
        Crossing(2 * i - 1, _wrap(2 * i + n, m), 2 * i, _wrap(2 * i + n - 1, m))
        for i in range(1, n + 1)
    ]
    return _normalize(xs, label=f"T(2,{n})")


def table_diagram(name: str) -> Diagram:
    from .table import lookup

    entry = lookup(name)
    return parse_pd(entry.pd, label=entry.name)


def braid_closure(word: Iterable[int], strands: int | None = None) -> Diagram:
    """Closure of a braid word; generator ``+i``/``-i`` crosses strands i, i+1.

    Strands run upward; for ``+i`` the over strand goes from bottom-left to
    top-right, which is a positive crossing.
    """
    word = [int(g) for g in word]
    if strands is None:
        strands = max((abs(g) for g in word), default=0) + 1
    if any(g == 0 or abs(g) >= strands for g in word):
        raise ValueError(f"braid generator out of range for {strands} strands")
    fresh = iter(range(1, 10**9))
    start = [next(fresh) for _ in range(strands)]
    pos = list(start)
    xs = []
    for g in word:
        i = abs(g) - 1
        a, b = pos[i], pos[i + 1]
        left, right = next(fresh), next(fresh)
        if g > 0:
            xs.append((b, right, left, a))
        else:
            xs.append((a, b, right, left))
        pos[i], pos[i + 1] = left, right
    # close up: identify the top label of each position with its bottom label
    alias = dict(zip(pos, start))
    xs = [tuple(alias.get(l, l) for l in x) for x in xs]
    if not xs:
        if strands != 1:
            raise MultiComponentError("trivial braid on several strands")
        return UNKNOT
    return _normalize(xs)


def add_curl(diagram: Diagram, label: int = 1, sign: int = 1, side: str = "R") -> Diagram:
    """Insert a Reidemeister I curl of the given sign on edge ``label``.

    ``side`` is the side of the strand (relative to its orientation) the
    loop sits on.
    """
    if sign not in (1, -1) or side not in ("L", "R"):
        raise ValueError("sign must be +-1 and side 'L' or 'R'")
    xs = [list(x) for x in diagram.crossings]
    if xs:
        od = orient(diagram)
        if label not in od.ends:
            raise ValueError(f"no edge {label}")
        _, (hc, hs) = od.ends[label]
        top = 2 * len(xs)
        e_in, loop, e_out = label, top + 1, top + 2
        xs[hc][hs] = e_out
    else:
        e_in = e_out = 1
        loop = 2
    # counterclockwise tuples worked out for a strand heading north
    pattern = {
        (-1, "R"): (e_in, loop, loop, e_out),
        (1, "R"): (loop, loop, e_out, e_in),
        (1, "L"): (e_in, e_out, loop, loop),
        (-1, "L"): (loop, e_in, e_out, loop),
    }[(sign, side)]
    xs.append(list(pattern))
    return _normalize(xs, label=diagram.label)


def random_diagram(rng, max_crossings: int = 10, max_strands: int = 4) -> Diagram:
    """Random knot diagram as the closure of a random braid word.

    ``rng`` is a :class:`random.Random`. Words are resampled until the
    closure is a knot.
    """
    while True:
        k = rng.randint(2, max(2, max_strands))
        length = rng.randint(k - 1, max_crossings)
        word = [rng.choice((1, -1)) * rng.randint(1, k - 1) for _ in range(length)]
        perm = list(range(k))
        for g in word:
            i = abs(g) - 1
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
        seen, j = set(), 0
        while j not in seen:
            seen.add(j)
            j = perm[j]
        if len(seen) == k:
            return braid_closure(word, k)
