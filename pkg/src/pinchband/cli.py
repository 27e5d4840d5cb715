"""Command line front end.

Exit codes: 0 success, 1 domain error or failed check, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from types import SimpleNamespace

from .cobordism import (
    PinchCertificate,
    base_ledger,
    cobordism_sigma,
    glue_pinch,
    verify_certificate,
)
from .diagram import Diagram, emit_pd, orient, parse_pd, table_diagram, torus_2n_diagram
from .errors import IdentificationError, InvalidN, PinchbandError
from .goeritz import knot_signature
from .identify import fingerprint, identify
from .realizability import grid, grid_csv, minimal_points, status_allen, status_post
from .search import SearchOptions, find_paper_certificates, pinch_search

__all__ = ["main", "build_parser", "GOLDEN_MOVES", "GOLDEN_MINIMAL_POINTS"]


class UsageError(Exception):
    pass


# Signatures and writhes of the two moves, and the pairs they realize.
GOLDEN_MOVES = (
    {
        "disk": "unknot", "target": "T(2,5)",
        "sigma1": 0, "sigma2": -4, "w1": 0, "w2": 6,
        "sigma_cover": -1, "pair": (-6, 1),
    },
    {
        "disk": "6_1", "target": "T(2,9)",
        "sigma1": 0, "sigma2": -8, "w1": -5, "w2": 9,
        "sigma_cover": -1, "pair": (-14, 1),
    },
)
GOLDEN_MINIMAL_POINTS = {5: (-10, -6), 9: (-18, -14)}


@dataclass(frozen=True)
class _GoldenKnot:
    name: str
    signature: int
    slice: bool


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _load_diagram(args) -> Diagram:
    given = [x for x in (args.builtin, args.pd, args.file) if x is not None]
    if len(given) != 1:
        raise UsageError("give exactly one of --builtin NAME, --pd TEXT or FILE")
    if args.builtin is not None:
        return table_diagram(args.builtin)
    if args.pd is not None:
        return parse_pd(args.pd)
    return parse_pd(Path(args.file).read_text())


# ---------------------------------------------------------------- commands


def cmd_invariants(args) -> tuple[int, str]:
    d = _load_diagram(args)
    rep = knot_signature(d)
    fp = fingerprint(d)
    try:
        k = identify(d)
        ident, slice_ = k.name, k.slice
    except IdentificationError as exc:
        ident, slice_ = None, None
        note = str(exc)
    out = {
        "pd": emit_pd(d),
        "crossings": len(d),
        "writhe": orient(d).writhe,
        "sigma": rep.sigma,
        "determinant": rep.determinant,
        "breakdown": rep.as_dict()["breakdown"],
        "fingerprint": fp.as_dict(),
        "identified": ident,
        "slice": slice_,
    }
    if args.format == "json":
        return 0, _dump(out)
    lines = [
        f"pd: {out['pd']}",
        f"crossings: {out['crossings']}",
        f"writhe: {out['writhe']}",
        f"signature: {out['sigma']}",
        f"determinant: {out['determinant']}",
        f"bracket: {fp.as_dict()['bracket']}",
        f"identified: {ident if ident else 'unidentified (' + note + ')'}",
    ]
    if ident:
        lines.append(f"slice: {'yes' if slice_ else 'not known'}")
    return 0, "\n".join(lines)


def cmd_classify(args) -> tuple[int, str]:
    try:
        st = (status_post if args.post else status_allen)(args.n, args.e, args.h)
    except InvalidN as exc:
        raise UsageError(str(exc)) from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        return 0, _dump({"n": args.n, "e": args.e, "h": args.h, **st.as_dict()})
    wit = " ".join(f"{k}={v}" for k, v in st.witness.items())
    line = f"T(2,{args.n}) (e,h)=({args.e},{args.h}): {st.verdict.value} [{st.clause}]"
    return 0, f"{line} {wit}".rstrip()


def cmd_grid(args) -> tuple[int, str]:
    try:
        rows = grid(args.n, (args.e_min, args.e_max), (args.h_min, args.h_max), args.post)
    except (InvalidN, ValueError) as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        text = _dump([{"n": n, "e": e, "h": h, **st.as_dict()} for n, e, h, st in rows])
    elif args.format == "text":
        mark = {"Realizable": "R", "Unknown": "?", "NotRealizable": "."}
        lines = [f"T(2,{args.n}) e={args.e_min}..{args.e_max} (R realizable, ? unknown)"]
        for h in range(args.h_max, args.h_min - 1, -1):
            cells = "".join(mark[st.verdict.value] for _, _, hh, st in rows if hh == h)
            lines.append(f"h={h:>3} {cells}")
        text = "\n".join(lines)
    else:
        text = grid_csv(rows).rstrip("\n")
    if args.output:
        Path(args.output).write_text(text + "\n")
        return 0, f"wrote {len(rows)} cells to {args.output}"
    return 0, text


def cmd_search(args) -> tuple[int, str]:
    d = _load_diagram(args)
    opts = SearchOptions(
        max_routing_length=args.max_routing,
        target_knot=args.target,
        target_sigma_cover=args.target_sigma,
        max_result_crossings=args.max_crossings,
        site_limit=args.site_limit,
    )
    result = pinch_search(d, opts)
    report = result.as_dict()
    if args.output:
        Path(args.output).write_text(_dump(report) + "\n")
    if args.format == "json":
        return 0, _dump(report)
    s = result.stats
    lines = [
        f"sites {s.enumerated}: emitted {s.emitted}, unidentifiable "
        f"{s.skipped_unidentifiable}, filtered {s.skipped_filter}, errors {s.errors}"
    ]
    for c in result.certificates:
        flag = " [extended model]" if c.extended_model else ""
        lines.append(
            f"{c.knot_before.name} -> {c.knot_after.name}  w {c.writhe_before} -> "
            f"{c.writhe_after}  sigma(C) = {c.sigma_cover_cobordism:+d}  "
            f"site {json.dumps(c.site.as_dict())}{flag}"
        )
    return 0, "\n".join(lines)


def _certificates_in(data) -> list[dict]:
    if isinstance(data, list):
        return data
    if "certificates" in data:
        return list(data["certificates"])
    if "found" in data:
        return [h["certificate"] for hits in data["found"].values() for h in hits]
    return [data]


def cmd_verify(args) -> tuple[int, str]:
    try:
        data = json.loads(Path(args.file).read_text())
        certs = [PinchCertificate.from_dict(c) for c in _certificates_in(data)]
    except (OSError, ValueError, KeyError, TypeError, PinchbandError) as exc:
        return 1, f"cannot read certificates: {exc}"
    reports = [verify_certificate(c) for c in certs]
    ok = all(r.ok for r in reports)
    if args.format == "json":
        return (0 if ok else 1), _dump([r.as_dict() for r in reports])
    lines = []
    for i, r in enumerate(reports):
        status = "ok" if r.ok else "FAIL " + ", ".join(r.failures())
        model = " (extended model)" if r.extended_model else ""
        lines.append(f"certificate {i}: {status}{model}")
        lines.extend(f"  {m}" for m in r.messages)
    lines.append(f"{sum(r.ok for r in reports)}/{len(reports)} certificates verified")
    return (0 if ok else 1), "\n".join(lines)


def demo_paper(check_signatures: bool = False, search: bool = False) -> dict:
    """Rebuild the two Mobius band ledgers from fixed constants and check them."""
    checks = []
    ledgers = []

    def check(name, ok, detail=""):
        checks.append({"check": name, "ok": bool(ok), "detail": detail})

    for mv in GOLDEN_MOVES:
        value = cobordism_sigma(mv["sigma1"], mv["sigma2"], mv["w1"], mv["w2"])
        check(
            f"sigma(C) for {mv['disk']} -> {mv['target']}",
            value == mv["sigma_cover"],
            f"({mv['sigma2']}) - ({mv['sigma1']}) + ({mv['w2']} - ({mv['w1']}))/2 = {value}",
        )
        disk = _GoldenKnot(mv["disk"], mv["sigma1"], True)
        target = _GoldenKnot(mv["target"], mv["sigma2"], False)
        move = SimpleNamespace(knot_before=disk, knot_after=target, sigma_cover_cobordism=value)
        ledger = glue_pinch(base_ledger(disk), move)
        info = {
            "boundary": mv["target"],
            "pair": list(ledger.pair),
            "betti1": ledger.betti1,
            "sigma_cover": ledger.sigma_cover,
            "orientable": ledger.orientable,
            "negative_definite": ledger.negative_definite,
            "history": list(ledger.history),
        }
        ledgers.append(info)
        check(f"(e,h) for {mv['target']}", tuple(ledger.pair) == mv["pair"], str(tuple(ledger.pair)))
        check(
            f"negative definite Mobius band for {mv['target']}",
            ledger.betti1 == 1 and ledger.sigma_cover == -1
            and not ledger.orientable and ledger.negative_definite,
        )

    minimal = {}
    for n, want in GOLDEN_MINIMAL_POINTS.items():
        before, after = minimal_points(n, post=False), minimal_points(n, post=True)
        minimal[str(n)] = {"before": before.as_dict(), "after": after.as_dict()}
        check(
            f"minimal points for T(2,{n})",
            after.minimal_points == want and after.gamma4 == 1 and before.unique,
            f"{list(before.minimal_points)} -> {list(after.minimal_points)}",
        )

    if check_signatures:
        live = {
            "unknot": knot_signature(Diagram(())).sigma,
            "T(2,5)": knot_signature(torus_2n_diagram(5)).sigma,
            "T(2,9)": knot_signature(torus_2n_diagram(9)).sigma,
            "6_1": knot_signature(table_diagram("6_1")).sigma,
        }
        golden = {}
        for mv in GOLDEN_MOVES:
            golden[mv["disk"]] = mv["sigma1"]
            golden[mv["target"]] = mv["sigma2"]
        for name in sorted(golden):
            check(f"live signature of {name}", live[name] == golden[name], f"{live[name]}")

    found = None
    if search:
        report = find_paper_certificates(SearchOptions(max_routing_length=0))
        found = report["summary"]
        for mv in GOLDEN_MOVES:
            hits = [h for h in report["found"][mv["target"]] if h["target_sign"]]
            if hits:
                check(
                    f"searched band for {mv['target']} gives {mv['pair']}",
                    all(tuple(h["pair"]) == mv["pair"] for h in hits),
                    f"{len(hits)} certificates",
                )
    return {
        "ledgers": ledgers,
        "minimal_points": minimal,
        "search": found,
        "checks": checks,
        "ok": all(c["ok"] for c in checks),
    }


def cmd_demo(args) -> tuple[int, str]:
    if args.what != "paper":
        raise UsageError(f"unknown demo {args.what!r}")
    out = demo_paper(args.check_signatures, args.search)
    code = 0 if out["ok"] else 1
    if args.format == "json":
        return code, _dump(out)
    lines = []
    for led in out["ledgers"]:
        e, h = led["pair"]
        lines.append(
            f"{led['boundary']}: {' + '.join(led['history'])} -> (e,h) = ({e},{h}), "
            f"sigma(cover) = {led['sigma_cover']}, "
            f"{'non-orientable' if not led['orientable'] else 'orientable'}, "
            f"negative definite: {'yes' if led['negative_definite'] else 'no'}"
        )
    for n, mp in out["minimal_points"].items():
        lines.append(
            f"T(2,{n}) minimal points at h = {mp['after']['gamma4']}: "
            f"{mp['before']['minimal_points']} before, {mp['after']['minimal_points']} after"
        )
    if out["search"] is not None:
        for goal, s in out["search"].items():
            lines.append(f"search {goal}: {s['status']} ({s['negative_definite']} certificates)")
    for c in out["checks"]:
        detail = f"  {c['detail']}" if c["detail"] else ""
        lines.append(f"[{'ok' if c['ok'] else 'FAIL'}] {c['check']}{detail}")
    return code, "\n".join(lines)


# ---------------------------------------------------------------- parser


def _add_source(p):
    p.add_argument("file", nargs="?", help="file holding a PD code")
    p.add_argument("--builtin", metavar="NAME", help="builtin table knot, e.g. T(2,5) or 6_1")
    p.add_argument("--pd", metavar="TEXT", help="PD code such as 'PD[X(1,4,2,5),...]'")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pinchband",
        description="Knot invariants, pinch moves and (e,h) realizability for T(2,n).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="signature, determinant, writhe, identification")
    _add_source(p)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("classify", help="status of one (e,h) pair for T(2,n)")
    p.add_argument("n", type=int)
    p.add_argument("e", type=int)
    p.add_argument("h", type=int)
    p.add_argument("--post", action="store_true", help="include the T(2,5) and T(2,9) bands")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("grid", help="status of every pair in a window")
    for name in ("n", "e_min", "e_max", "h_min", "h_max"):
        p.add_argument(name, type=int)
    p.add_argument("--post", action="store_true")
    p.add_argument("--format", choices=("text", "csv", "json"), default="csv")
    p.add_argument("-o", "--output", help="write to this file")
    p.set_defaults(func=cmd_grid)

    p = sub.add_parser("search", help="certified pinch moves from a diagram")
    _add_source(p)
    p.add_argument("--max-routing", type=int, default=0, metavar="K")
    p.add_argument("--site-limit", type=int, default=100_000, metavar="N")
    p.add_argument("--max-crossings", type=int, default=24)
    p.add_argument("--target", metavar="NAME")
    p.add_argument("--target-sigma", type=int, metavar="S")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("-o", "--output", help="write the JSON report here")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify", help="re-check certificates in a JSON file")
    p.add_argument("file")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("demo", help="rebuild the T(2,5) and T(2,9) Mobius bands")
    p.add_argument("what", choices=("paper",))
    p.add_argument("--check-signatures", action="store_true")
    p.add_argument("--search", action="store_true", help="also run a routing-0 band search")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_demo)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, text = args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"pinchband: error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        if not isinstance(exc, PinchbandError) and args.command == "search":
            parser.print_usage(sys.stderr)
            print(f"pinchband: error: {exc}", file=sys.stderr)
            return 2
        print(f"pinchband: {exc}", file=sys.stderr)
        return 1
    except (PinchbandError, OSError, KeyError) as exc:
        print(f"pinchband: {exc}", file=sys.stderr)
        return 1
    print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
