"""Deterministic search for H(2)-moves with prescribed endpoints."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from typing import Iterable, Iterator

from .band import Attachment, H2MoveSite, band_surgery
from .cobordism import (
    PinchCertificate,
    base_ledger,
    glue_pinch,
    reverse_certificate,
    verify_certificate,
    _certify,
)
from .diagram import Diagram, add_curl, braid_closure, faces, table_diagram, torus_2n_diagram
from .errors import (
    IdentificationError,
    InvalidSite,
    NonIntegralSigma,
    NonKnotResult,
    TooManyCrossings,
)

__all__ = [
    "SearchOptions",
    "SearchStats",
    "SearchResult",
    "enumerate_sites",
    "pinch_search",
    "default_battery",
    "find_paper_certificates",
]


@dataclass(frozen=True)
class SearchOptions:
    max_routing_length: int = 0
    target_knot: str | None = None
    target_sigma_cover: int | None = None
    max_result_crossings: int = 24
    site_limit: int = 100_000

    def __post_init__(self):
        if self.max_routing_length < 0:
            raise ValueError("max_routing_length must be non-negative")
        if self.max_result_crossings <= 0:
            raise ValueError("max_result_crossings must be positive")
        if self.site_limit < 0:
            raise ValueError("site_limit must be non-negative")


@dataclass
class SearchStats:
    enumerated: int = 0
    emitted: int = 0
    skipped_unidentifiable: int = 0
    skipped_filter: int = 0
    non_knot: int = 0
    invalid_site: int = 0
    non_integral: int = 0

    @property
    def errors(self) -> int:
        return self.non_knot + self.invalid_site + self.non_integral

    def conserved(self) -> bool:
        return self.enumerated == (
            self.emitted + self.skipped_unidentifiable + self.skipped_filter + self.errors
        )

    def as_dict(self) -> dict:
        return asdict(self)


@dataclass
class SearchResult:
    certificates: list[PinchCertificate]
    stats: SearchStats
    options: SearchOptions

    def __iter__(self):
        return iter(self.certificates)

    def __len__(self):
        return len(self.certificates)

    def as_dict(self) -> dict:
        return {
            "options": asdict(self.options),
            "stats": self.stats.as_dict(),
            "certificates": [c.as_dict() for c in self.certificates],
        }


def _routes(face_of, cur, length, visited):
    """Face-to-face routing words of exactly ``length`` crossings from ``cur``."""
    if length == 0:
        yield (), cur
        return
    edges = sorted({e for (e, _s) in face_of})
    for e in edges:
        fl, fr = face_of[(e, "L")], face_of[(e, "R")]
        if fl == fr or cur not in (fl, fr):
            continue
        nxt = fr if cur == fl else fl
        if nxt in visited:
            continue
        for passing in ("over", "under"):
            for rest, end in _routes(face_of, nxt, length - 1, visited | {nxt}):
                yield ((e, passing),) + rest, end


def _reversed(site: H2MoveSite) -> H2MoveSite:
    a, b = site.attach
    return H2MoveSite((b, a), tuple(reversed(site.routing)), site.clasp_sign)


def _key(site: H2MoveSite):
    return (len(site.routing), site.attach, site.routing, -site.clasp_sign)


def _pairs_on(sides_a, sides_b):
    """Attachment pairs for edge-sides on the start and end faces."""
    for es1 in sides_a:
        for es2 in sides_b:
            (e1, s1), (e2, s2) = es1, es2
            if e1 != e2:
                yield Attachment(e1, s1, 0), Attachment(e2, s2, 0)
            elif s1 == s2:
                yield Attachment(e1, s1, 0), Attachment(e2, s2, 1)
            else:
                yield Attachment(e1, s1, 0), Attachment(e2, s2, 1)
                yield Attachment(e1, s1, 1), Attachment(e2, s2, 0)


def enumerate_sites(diagram: Diagram, options: SearchOptions = SearchOptions()) -> Iterator[H2MoveSite]:
    """All band sites up to the routing budget, sorted, truncated at site_limit.

    Only face-consistent sites are produced. A band and its reversal are the
    same move, so only the lexicographically smaller of the two is kept.
    Sites are emitted with clasp sign +1; the band is flat, and -1 draws the
    same move.
    """
    if options.site_limit == 0:
        return iter(())
    fs = faces(diagram)
    face_of = {es: fid for fid, face in enumerate(fs) for es in face}
    found = set()
    for length in range(options.max_routing_length + 1):
        for fid, face in enumerate(fs):
            for routing, end in _routes(face_of, fid, length, frozenset({fid})):
                for a, b in _pairs_on(sorted(face), sorted(fs[end])):
                    site = H2MoveSite((a, b), routing, 1)
                    rev = _reversed(site)
                    found.add(min(site, rev, key=_key))
    ordered = sorted(found, key=_key)
    return iter(ordered[: options.site_limit])


def pinch_search(diagram: Diagram, options: SearchOptions = SearchOptions()) -> SearchResult:
    """Apply every enumerated site and keep the verified certificates that match."""
    stats = SearchStats()
    certs = []
    for site in enumerate_sites(diagram, options):
        stats.enumerated += 1
        try:
            after, _ = band_surgery(diagram, site)
        except NonKnotResult:
            stats.non_knot += 1
            continue
        except InvalidSite:
            stats.invalid_site += 1
            continue
        if len(after) > options.max_result_crossings:
            stats.skipped_filter += 1
            continue
        try:
            cert = _certify(diagram, after, site)
        except (IdentificationError, TooManyCrossings):
            stats.skipped_unidentifiable += 1
            continue
        except NonIntegralSigma:
            stats.non_integral += 1
            continue
        if options.target_knot is not None and cert.knot_after.name != _canon(options.target_knot):
            stats.skipped_filter += 1
            continue
        if (
            options.target_sigma_cover is not None
            and cert.sigma_cover_cobordism != options.target_sigma_cover
        ):
            stats.skipped_filter += 1
            continue
        if not verify_certificate(cert).ok:
            stats.non_integral += 1
            continue
        stats.emitted += 1
        certs.append(cert)
    return SearchResult(certs, stats, options)


def _canon(name: str) -> str:
    from .table import lookup

    return lookup(name).name


# ---------------------------------------------------------------- Mobius band targets


def default_battery() -> list[tuple[str, Diagram]]:
    """Starting diagrams for the two target moves.

    The T(2,5) and T(2,9) diagrams are standard, Markov-stabilized, or carry
    one extra curl, so the writhe at the moment of the move varies.
    """
    t5 = torus_2n_diagram(5)
    t9 = torus_2n_diagram(9)
    return [
        ("T(2,5) standard", t5),
        ("T(2,5) stabilized +", braid_closure([1, 1, 1, 1, 1, 2])),
        ("T(2,5) stabilized -", braid_closure([1, 1, 1, 1, 1, -2])),
        ("T(2,5) +curl", add_curl(t5, 1, 1, "R")),
        ("T(2,5) +curl left", add_curl(t5, 1, 1, "L")),
        ("T(2,5) -curl", add_curl(t5, 1, -1, "R")),
        ("T(2,9) standard", t9),
        ("T(2,9) stabilized +", braid_closure([1] * 9 + [2])),
        ("6_1 table", table_diagram("6_1")),
    ]


_GOALS = {
    # surface boundary, disk boundary, cover signature of the move from the disk side
    "T(2,5)": ("unknot", -1),
    "T(2,9)": ("6_1", -1),
}


def find_paper_certificates(
    options: SearchOptions = SearchOptions(max_routing_length=1),
    battery: Iterable[tuple[str, Diagram]] | None = None,
) -> dict:
    """Look for moves unknot -> T(2,5) and 6_1 -> T(2,9) with cover signature -1.

    Each starting diagram is searched without knot or signature filters.
    Certificates landing on a goal pair are kept in whichever direction
    they were found; moves found from the torus side are reversed so they
    start at the slice knot. Gluing a slice disk gives the ledger. Not
    finding a move within budget is reported, not raised.
    """
    if battery is None:
        battery = default_battery()
    battery = list(battery)
    opts = SearchOptions(
        max_routing_length=options.max_routing_length,
        max_result_crossings=options.max_result_crossings,
        site_limit=options.site_limit,
    )
    report = {"options": asdict(options), "runs": [], "found": {}, "summary": {}}
    found: dict[str, list] = {goal: [] for goal in _GOALS}
    for name, diagram in battery:
        result = pinch_search(diagram, opts)
        run = {"start": name, "pd": str(diagram), "stats": result.stats.as_dict(), "hits": 0}
        for cert in result.certificates:
            for goal, (disk, want) in _GOALS.items():
                ends = {cert.knot_before.name, cert.knot_after.name}
                if ends != {goal, disk}:
                    continue
                oriented = cert if cert.knot_before.name == disk else reverse_certificate(cert)
                if not verify_certificate(oriented).ok:
                    continue
                ledger = glue_pinch(base_ledger(disk), oriented)
                run["hits"] += 1
                found[goal].append(
                    {
                        "start": name,
                        "certificate": oriented.as_dict(),
                        "ledger": ledger.as_dict(),
                        "pair": list(ledger.pair),
                        "negative_definite": ledger.negative_definite,
                        "target_sign": oriented.sigma_cover_cobordism == want,
                    }
                )
        report["runs"].append(run)
    for goal, hits in found.items():
        uniq = {json.dumps(h["certificate"], sort_keys=True): h for h in hits}
        hits = sorted(uniq.values(), key=lambda h: json.dumps(h["certificate"], sort_keys=True))
        report["found"][goal] = hits
        wanted = [h for h in hits if h["target_sign"]]
        report["summary"][goal] = {
            "certificates": len(hits),
            "negative_definite": len(wanted),
            "status": "found" if wanted else "not found within budget",
            "pairs": sorted({tuple(h["pair"]) for h in hits}),
        }
    return report
