"""Builtin knot table.

PD codes are fixed constants. Torus knots are stored positive (writhe +n,
signature -(n-1)); their mirrors are added as separate entries, as are the
mirrors of the other chiral knots. 4_1 and 6_3 are amphichiral.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import UnknownName

__all__ = ["TableEntry", "TABLE", "lookup", "names"]


@dataclass(frozen=True)
class TableEntry:
    name: str
    pd: str
    aliases: tuple[str, ...] = ()
    slice: bool = False
    mirror_of: str | None = None


_BASE = [
    TableEntry("unknot", "PD[]", ("0_1",), slice=True),
    TableEntry("T(2,3)", "PD[X(4,2,5,1),X(6,4,1,3),X(2,6,3,5)]", ("3_1",)),
    TableEntry(
        "4_1", "PD[X(4,2,5,1),X(8,6,1,5),X(6,3,7,4),X(2,7,3,8)]"
    ),
    TableEntry(
        "T(2,5)",
        "PD[X(6,2,7,1),X(8,4,9,3),X(10,6,1,5),X(2,8,3,7),X(4,10,5,9)]",
        ("5_1",),
    ),
    TableEntry(
        "5_2", "PD[X(1,4,2,5),X(3,8,4,9),X(5,10,6,1),X(9,6,10,7),X(7,2,8,3)]"
    ),
    TableEntry(
        "6_1",
        "PD[X(1,4,2,5),X(7,10,8,11),X(3,9,4,8),X(9,3,10,2),X(5,12,6,1),X(11,6,12,7)]",
        slice=True,
    ),
    TableEntry(
        "6_2",
        "PD[X(1,4,2,5),X(5,10,6,11),X(3,9,4,8),X(9,3,10,2),X(7,12,8,1),X(11,6,12,7)]",
    ),
    TableEntry(
        "6_3",
        "PD[X(4,2,5,1),X(8,4,9,3),X(12,9,1,10),X(10,5,11,6),X(6,11,7,12),X(2,8,3,7)]",
    ),
    TableEntry(
        "T(2,7)",
        "PD[X(8,2,9,1),X(10,4,11,3),X(12,6,13,5),X(14,8,1,7),X(2,10,3,9),"
        "X(4,12,5,11),X(6,14,7,13)]",
        ("7_1",),
    ),
    TableEntry(
        "T(2,9)",
        "PD[X(10,2,11,1),X(12,4,13,3),X(14,6,15,5),X(16,8,17,7),X(18,10,1,9),"
        "X(2,12,3,11),X(4,14,5,13),X(6,16,7,15),X(8,18,9,17)]",
        ("9_1",),
    ),
    TableEntry(
        "T(2,11)",
        "PD[X(12,2,13,1),X(14,4,15,3),X(16,6,17,5),X(18,8,19,7),X(20,10,21,9),"
        "X(22,12,1,11),X(2,14,3,13),X(4,16,5,15),X(6,18,7,17),X(8,20,9,19),"
        "X(10,22,11,21)]",
        ("11a367",),
    ),
]

_AMPHICHIRAL = {"unknot", "4_1", "6_3"}


def _mirror_name(name: str) -> str:
    if name.startswith("T(2,"):
        return f"T(2,-{name[4:-1]})"
    return f"m{name}"


def _with_mirrors():
    from .diagram import emit_pd, mirror, parse_pd

    out = list(_BASE)
    for e in _BASE:
        if e.name in _AMPHICHIRAL:
            continue
        out.append(
            TableEntry(
                _mirror_name(e.name),
                emit_pd(mirror(parse_pd(e.pd))),
                tuple("m" + a for a in e.aliases),
                slice=e.slice,
                mirror_of=e.name,
            )
        )
    return tuple(out)


TABLE: tuple[TableEntry, ...] = _with_mirrors()
_INDEX = {}
for _e in TABLE:
    for _n in (_e.name, *_e.aliases):
        _INDEX[_n] = _e


def lookup(name: str) -> TableEntry:
    try:
        return _INDEX[name]
    except KeyError:
        raise UnknownName(f"no builtin knot named {name!r}") from None


def names() -> list[str]:
    return [e.name for e in TABLE]
