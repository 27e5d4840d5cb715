"""Flat band surgery on knot diagrams.

The diagram is unpacked into a planar map of *stubs* (half-edges). Crossing
stubs come four to a crossing in counterclockwise order; every other stub
belongs to a degree-2 point on an edge and is paired with its partner by
``join``. ``twin`` pairs the two stubs of a map edge.

A band is attached at two points on the boundary of one face. Its core may
cross other edges (the routing word); each crossing of the core with an
edge becomes two crossings, one per long side of the band. Surgery cuts the
knot at the two attachment points and splices in the long sides.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import count

from .diagram import Diagram, UNKNOT, _normalize, edge_side_faces, orient
from .errors import InvalidSite, NonKnotResult

__all__ = ["Attachment", "H2MoveSite", "band_surgery"]

SIDES = ("L", "R")
PASSES = ("over", "under")


@dataclass(frozen=True, order=True)
class Attachment:
    edge: int
    side: str
    order: int = 0

    def as_list(self):
        return [self.edge, self.side, self.order]


@dataclass(frozen=True, order=True)
class H2MoveSite:
    """Where a band is attached and how its core runs.

    ``routing`` lists the edges the band core crosses, in order from the
    first attachment, each with ``'over'`` or ``'under'``. ``clasp_sign``
    names one of the two mirror-image drawings of the flat local move; the
    band itself is untwisted, so both give the same diagram.
    """

    attach: tuple[Attachment, Attachment]
    routing: tuple[tuple[int, str], ...] = ()
    clasp_sign: int = 1

    def __post_init__(self):
        object.__setattr__(
            self, "attach", tuple(Attachment(*a) if not isinstance(a, Attachment) else a
                                  for a in self.attach)
        )
        object.__setattr__(self, "routing", tuple((int(e), str(p)) for e, p in self.routing))

    @property
    def extended_model(self) -> bool:
        return bool(self.routing)

    def as_dict(self) -> dict:
        return {
            "attach": [a.as_list() for a in self.attach],
            "routing": [[e, p] for e, p in self.routing],
            "clasp_sign": self.clasp_sign,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "H2MoveSite":
        return cls(
            tuple(Attachment(int(e), str(s), int(o)) for e, s, o in data["attach"]),
            tuple((int(e), str(p)) for e, p in data.get("routing", ())),
            int(data.get("clasp_sign", 1)),
        )


def _check_site(diagram: Diagram, site: H2MoveSite):
    if len(site.attach) != 2:
        raise InvalidSite("a band has exactly two attachments")
    if site.clasp_sign not in (1, -1):
        raise InvalidSite(f"clasp sign must be +1 or -1, got {site.clasp_sign}")
    n_edges = max(1, diagram.edge_count)
    for a in site.attach:
        if not 1 <= a.edge <= n_edges:
            raise InvalidSite(f"no edge {a.edge}")
        if a.side not in SIDES:
            raise InvalidSite(f"side must be 'L' or 'R', got {a.side!r}")
        if a.order < 0:
            raise InvalidSite("attachment order must be non-negative")
    a, b = site.attach
    if a.edge == b.edge and a.order == b.order:
        raise InvalidSite("two attachments on one edge need distinct orders")
    for e, p in site.routing:
        if not 1 <= e <= n_edges:
            raise InvalidSite(f"routing crosses nonexistent edge {e}")
        if p not in PASSES:
            raise InvalidSite(f"routing pass must be 'over' or 'under', got {p!r}")

    # the core must run face to face, visiting each face once
    face = edge_side_faces(diagram)
    cur = face[(a.edge, a.side)]
    visited = {cur}
    crossing_sides = []
    for e, _ in site.routing:
        fl, fr = face[(e, "L")], face[(e, "R")]
        if fl == fr:
            raise InvalidSite(f"edge {e} has the same face on both sides")
        if cur == fl:
            crossing_sides.append("L")
            cur = fr
        elif cur == fr:
            crossing_sides.append("R")
            cur = fl
        else:
            raise InvalidSite(f"edge {e} does not bound the current face")
        if cur in visited:
            raise InvalidSite("band core revisits a face")
        visited.add(cur)
    if face[(b.edge, b.side)] != cur:
        raise InvalidSite("second attachment is not on the face the core reaches")
    return crossing_sides


@dataclass
class _Map:
    twin: dict = field(default_factory=dict)
    join: dict = field(default_factory=dict)
    crossings: list = field(default_factory=list)  # [stubs ccw, under_pair]
    owner: dict = field(default_factory=dict)  # crossing stub -> (crossing, position)
    ids: count = field(default_factory=count)

    def new(self, k=1):
        return [next(self.ids) for _ in range(k)]

    def link(self, x, y):
        self.twin[x] = y
        self.twin[y] = x

    def pair(self, x, y):
        self.join[x] = y
        self.join[y] = x

    def add_crossing(self, under_pair):
        stubs = self.new(4)
        ci = len(self.crossings)
        self.crossings.append((stubs, under_pair))
        for pos, s in enumerate(stubs):
            self.owner[s] = (ci, pos)
        return stubs


def band_surgery(diagram: Diagram, site: H2MoveSite) -> tuple[Diagram, H2MoveSite]:
    """Perform the band move; return the new diagram and the dual site.

    The dual site attaches a short band across the cut near the first
    attachment; applying it undoes the move up to isotopy.
    """
    crossing_sides = _check_site(diagram, site)
    a_att, b_att = site.attach
    m = _Map()

    # unpack the diagram: tail and head stub of every edge label
    xs = diagram.crossings
    ends = {}
    if xs:
        for ci, x in enumerate(xs):
            stubs = m.add_crossing(0)
            assert stubs == list(range(4 * ci, 4 * ci + 4))
        od = orient(diagram)
        for lab, ((tc, ts), (hc, hs)) in od.ends.items():
            ends[lab] = (4 * tc + ts, 4 * hc + hs)
    else:
        fwd, back = m.new(2)
        m.pair(fwd, back)
        ends[1] = (fwd, back)

    # points along each edge: attachments by order, then routing points
    points: dict[int, list] = {}
    for key, att in (("A", a_att), ("B", b_att)):
        points.setdefault(att.edge, []).append(((0, att.order), key))
    for i, (e, _) in enumerate(site.routing):
        points.setdefault(e, []).append(((1, i), ("R", i)))
    stubs_of = {}
    for lab, (tail, head) in ends.items():
        prev = tail
        for _, key in sorted(points.get(lab, []), key=lambda t: t[0]):
            back, fwd = m.new(2)
            m.link(prev, back)
            m.pair(back, fwd)
            stubs_of[key] = (back, fwd)
            prev = fwd
        m.link(prev, head)

    def corner(key, side):
        back, fwd = stubs_of[key]
        # the left sector of a point runs counterclockwise from fwd to back
        return (fwd, back) if side == "L" else (back, fwd)

    a_i, a_ip1 = corner("A", a_att.side)
    b_j, b_jp1 = corner("B", b_att.side)

    # right long side starts at a_i, left at a_ip1; markers sit near A
    r_start, l_start = m.new(2)
    m.pair(r_start, a_i)
    m.pair(l_start, a_ip1)
    markers = {}
    ends_prev = []
    for name, start in (("R", r_start), ("L", l_start)):
        m1, m2 = m.new(2)
        m.link(start, m1)
        m.pair(m1, m2)
        markers[m1] = (name, True)
        markers[m2] = (name, False)
        ends_prev.append(m2)
    right_prev, left_prev = ends_prev

    for i, ((_, passing), side) in enumerate(zip(site.routing, crossing_sides)):
        back, fwd = stubs_of[("R", i)]
        tb, tf = m.twin.pop(back), m.twin.pop(fwd)
        for s in (back, fwd):
            m.join.pop(s)
        far_right, far_left = (tb, tf) if side == "L" else (tf, tb)
        under_pair = 0 if passing == "over" else 1
        xr = m.add_crossing(under_pair)  # east, north, west, south
        xl = m.add_crossing(under_pair)
        m.link(xr[0], far_right)
        m.link(xr[2], xl[0])
        m.link(xl[2], far_left)
        m.link(xr[3], right_prev)
        m.link(xl[3], left_prev)
        right_prev, left_prev = xr[1], xl[1]

    r_end, l_end = m.new(2)
    m.pair(r_end, b_jp1)
    m.pair(l_end, b_j)
    m.link(right_prev, r_end)
    m.link(left_prev, l_end)

    result, marks = _to_diagram(m, markers)
    (er, ir, fr), (el, il, fl) = marks["R"], marks["L"]
    dual = H2MoveSite(
        (
            Attachment(er, "L" if fr else "R", ir),
            Attachment(el, "R" if fl else "L", il),
        ),
        (),
        site.clasp_sign,
    )
    return result, dual


def _to_diagram(m: _Map, markers):
    """Read the map back as a PD code; report marker positions.

    Returns the diagram and, per marker, (edge label, order along the edge,
    whether the orientation runs from the first attachment towards the
    second there).
    """
    n_loose = len(m.join)
    if not m.crossings:
        # count closed loops made only of points
        seen = set()
        loops = 0
        for s in m.join:
            if s in seen:
                continue
            loops += 1
            t = s
            while t not in seen:
                seen.add(t)
                u = m.join[t]
                seen.add(u)
                t = m.twin[u]
        if loops != 1:
            raise NonKnotResult(f"band move produced {loops} components")
        marks = {}
        # a single crossingless edge: walk it once from any marker
        start = next(s for s, (_, first) in markers.items() if first)
        t, idx = start, 0
        visited = set()
        while t not in visited:
            visited.add(t)
            if t in markers:
                name, first = markers[t]
                if name not in marks:
                    marks[name] = (1, idx, first)
                    idx += 1
            u = m.join[t]
            visited.add(u)
            t = m.twin[u]
        return UNKNOT, marks

    label = {}
    marks = {}
    incoming_under = {}
    seen_loose = set()
    start = m.crossings[0][0][0]
    s = start
    lab = 0
    while True:
        lab += 1
        label[s] = lab
        t = m.twin[s]
        idx = 0
        while t not in m.owner:
            seen_loose.add(t)
            if t in markers:
                name, first = markers[t]
                marks[name] = (lab, idx, first)
                idx += 1
            u = m.join[t]
            seen_loose.add(u)
            t = m.twin[u]
        label[t] = lab
        ci, pos = m.owner[t]
        stubs, under_pair = m.crossings[ci]
        if pos % 2 == under_pair:
            incoming_under[ci] = pos
        s = stubs[(pos + 2) % 4]
        if s == start:
            break
        if lab > 4 * len(m.crossings):
            raise NonKnotResult("strand walk did not close")
    if lab != 2 * len(m.crossings) or len(seen_loose) != n_loose:
        raise NonKnotResult("band move produced a link")
    xs = []
    for ci, (stubs, _) in enumerate(m.crossings):
        k = incoming_under[ci]
        labs = [label[st] for st in stubs]
        xs.append(tuple(labs[k:] + labs[:k]))
    return _normalize(xs), marks
