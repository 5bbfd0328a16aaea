"""Command-line front end: ``sysbounds {info,bounds,table,audit,color,gen}``."""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import Sequence

from . import bounds as B
from .audit import (
    CHECK_IDS,
    DEFAULT_MANDATORY,
    DEFAULT_REPORT_ONLY,
    AuditConfig,
    EnumerationSource,
    audit_sweep,
    compute_invariants,
    read_graph6_file,
)
from .bounds import BoundDomainError, BoundId, BoundParams
from .coloring import OddGirthError, ball_peel_coloring
from .families import FAMILY_HELP, from_family, gen_general_mycielski, gen_kneser
from .graph import EdgeListError, Graph, Graph6Error, parse_edge_list, parse_graph6, to_graph6

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_ERROR = 2

TABLE_PRESETS = {
    "table1": B.TABLE1,
    "table2": B.TABLE2,
}
_FAMILY_NAMES = ("cycle", "path", "complete", "empty", "petersen", "groetzsch", "grotzsch",
                 "kneser", "mycielski", "genmycielski")
_EDGE_LIST_SUFFIXES = (".txt", ".edges", ".el", ".edgelist")


class CliError(Exception):
    pass


# -- input helpers ------------------------------------------------------------

def load_graph(spec: str) -> Graph:
    """Resolve a graph from a family name, a graph6/edge-list file or a graph6 string."""
    head = spec.split(":", 1)[0].lower()
    if head in _FAMILY_NAMES:
        try:
            return from_family(spec)
        except ValueError as exc:
            raise CliError(str(exc)) from None
    if os.path.exists(spec):
        try:
            with open(spec, "r", encoding="ascii") as fh:
                text = fh.read()
        except OSError as exc:
            raise CliError(f"cannot read {spec}: {exc}") from None
        if spec.endswith(_EDGE_LIST_SUFFIXES):
            try:
                return parse_edge_list(text)
            except (EdgeListError, ValueError) as exc:
                raise CliError(f"{spec}: {exc}") from None
        for lineno, line in enumerate(text.splitlines(), start=1):
            if line.strip():
                try:
                    return parse_graph6(line)
                except Graph6Error as exc:
                    raise CliError(f"{spec}: line {lineno}: {exc}") from None
        raise CliError(f"{spec}: no graph found")
    try:
        return parse_graph6(spec)
    except Graph6Error as exc:
        raise CliError(
            f"{spec!r} is neither a family ({FAMILY_HELP}), an existing file nor valid graph6: {exc}"
        ) from None


def _parse_range(text: str) -> tuple[int, ...]:
    lo, sep, hi = text.partition("-")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise CliError(f"bad range {text!r}; expected N or A-B") from None
    if b < a:
        raise CliError(f"empty range {text!r}")
    return tuple(range(a, b + 1))


def _parse_ids(text: str | None, default: frozenset[str]) -> frozenset[str]:
    if text is None:
        return default
    ids = frozenset(t.strip().upper() for t in text.split(",") if t.strip())
    unknown = ids - set(CHECK_IDS)
    if unknown:
        raise CliError(f"unknown check ids {sorted(unknown)}; known: {', '.join(CHECK_IDS)}")
    return ids


def _parse_catalog(text: str) -> list[BoundId]:
    key = text.lower()
    if key in TABLE_PRESETS:
        return [b for b in B.CATALOG_ORDER if b in TABLE_PRESETS[key]]
    if key == "all":
        return list(B.CATALOG_ORDER) + [BoundId.BALL_A, BoundId.BALL_B, BoundId.EQ2]
    try:
        return [BoundId(t.strip().upper()) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise CliError(f"bad catalog {text!r}: {exc}") from None


def _inf(x):
    return "inf" if x is None else x


def _emit(obj, fmt: str, out=None) -> None:
    out = out or sys.stdout
    if fmt == "json":
        out.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")
    else:
        for key, val in obj.items():
            out.write(f"{key}: {_inf(val)}\n")


# -- commands -------------------------------------------------------------------

def info_dict(g: Graph) -> dict:
    inv = compute_invariants(g)
    return {
        "graph6": to_graph6(g),
        "n": inv.n,
        "edges": inv.edges,
        "girth": inv.girth,
        "oddGirth": inv.odd_girth,
        "k": inv.k,
        "chi": inv.chi,
        "ess": inv.essentiality,
        "forestEss": inv.forest_essentiality,
        "trivRadius": inv.triviality_radius,
        "dXkMinus1": inv.ball_k_minus_1,
    }


def cmd_info(args) -> int:
    _emit(info_dict(load_graph(args.graph)), args.format)
    return EXIT_OK


def bounds_dict(chi: int, k: int, catalog: Sequence[BoundId]) -> dict:
    p = BoundParams(chi, k)
    rows = []
    for bid in catalog:
        try:
            val = B.evaluate(bid, p)
            rows.append({"id": bid.value, "raw": val.raw_str(), "value": val.value})
        except BoundDomainError as exc:
            rows.append({"id": bid.value, "raw": None, "value": None, "error": str(exc)})
    vertex_ids = [b for b in catalog if b in B.CATALOG_ORDER]
    winner = None
    if vertex_ids:
        try:
            wid, wval = B.best_bound(p, vertex_ids)
            winner = {"id": wid.value, "label": wid.label, "raw": wval.raw_str(), "value": wval.value}
        except BoundDomainError:
            pass
    return {"chi": chi, "k": k, "bounds": rows, "winner": winner}


def cmd_bounds(args) -> int:
    try:
        data = bounds_dict(args.chi, args.k, _parse_catalog(args.catalog))
    except BoundDomainError as exc:
        raise CliError(str(exc)) from None
    if args.format == "json":
        _emit(data, "json")
        return EXIT_OK
    for row in data["bounds"]:
        if row["value"] is None:
            print(f"{row['id']:<16} n/a ({row['error']})")
        else:
            print(f"{row['id']:<16} {row['raw']:>14} -> {row['value']}")
    w = data["winner"]
    if w:
        print(f"winner: {w['id']} ({w['label']}) = {w['raw']}")
    return EXIT_OK


def table_matrix(chis: Sequence[int], ks: Sequence[int], catalog) -> list[list[str]]:
    return [[B.best_bound((chi, k), catalog)[0].label for k in ks] for chi in chis]


def render_table(chis, ks, matrix, fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"chi": list(chis), "k": list(ks), "winners": matrix}, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["chi"] + [f"k={k}" for k in ks])
        for chi, row in zip(chis, matrix):
            w.writerow([chi] + row)
        return buf.getvalue()
    lines = ["| | " + " | ".join(f"k = {k}" for k in ks) + " |",
             "|---" * (len(ks) + 1) + "|"]
    for chi, row in zip(chis, matrix):
        lines.append(f"| chi = {chi} | " + " | ".join(row) + " |")
    return "\n".join(lines) + "\n"


def cmd_table(args) -> int:
    catalog = _parse_catalog(args.catalog or args.preset)
    chis, ks = _parse_range(args.chi), _parse_range(args.k)
    matrix = table_matrix(chis, ks, catalog)
    fmt = "md" if args.format == "text" else args.format
    sys.stdout.write(render_table(chis, ks, matrix, fmt))
    return EXIT_OK


def cmd_audit(args) -> int:
    mandatory = _parse_ids(args.mandatory, DEFAULT_MANDATORY)
    report_only = _parse_ids(args.report_only, DEFAULT_REPORT_ONLY - mandatory)
    config = AuditConfig(mandatory=mandatory, report_only=report_only,
                         jobs=max(1, args.jobs), max_listed=args.max_listed)
    if args.enumerate is not None:
        try:
            source = EnumerationSource(_parse_range(args.enumerate), dedup=args.dedup)
        except ValueError as exc:
            raise CliError(str(exc)) from None
    elif args.graph6_file is not None:
        if not os.path.exists(args.graph6_file):
            raise CliError(f"cannot read {args.graph6_file}: no such file")
        source = read_graph6_file(args.graph6_file)
    else:
        raise CliError("audit needs --enumerate N or --graph6-file PATH")
    try:
        report = audit_sweep(source, config)
    except (OSError, ValueError) as exc:
        raise CliError(str(exc)) from None
    text = report.to_csv() if args.format == "csv" else report.to_json()
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            raise CliError(f"cannot write {args.out}: {exc}") from None
    else:
        sys.stdout.write(text)
    print(
        f"audited {report.total_graphs} graphs: {report.violation_count} mandatory violations, "
        f"{report.finding_count} report-only findings, {report.tight_count} tight",
        file=sys.stderr,
    )
    return EXIT_OK if report.ok else EXIT_VIOLATION


def cmd_color(args) -> int:
    g = load_graph(args.graph)
    k = args.k
    if k is None:
        og = compute_invariants(g).odd_girth
        k = 1 if og is None else (og - 1) // 2
    try:
        coloring, trace = ball_peel_coloring(g, k)
    except OddGirthError as exc:
        raise CliError(f"{exc} (witness cycle {exc.cycle})") from None
    if args.format == "json":
        _emit({
            "k": k,
            "colors": list(coloring.colors),
            "count": trace.total_colors,
            "peels": [{"center": p.center, "color": p.color, "ballSize": len(p.ball)} for p in trace.peels],
            "remainder": sorted(trace.remainder),
        }, "json")
        return EXIT_OK
    for v, c in enumerate(coloring.colors):
        print(f"{v} {c}")
    print(f"# colors: {trace.total_colors}")
    print(f"# peels: {len(trace.peels)} (k={k})")
    for p in trace.peels:
        print(f"#   center {p.center}: ball of {len(p.ball)} vertices, colour {p.color}")
    print(f"# remainder: {len(trace.remainder)} vertices")
    return EXIT_OK


def cmd_gen(args) -> int:
    fam = args.family.lower()
    try:
        if ":" in fam or fam in ("petersen", "groetzsch", "grotzsch"):
            g = from_family(args.family)
        elif fam in ("cycle", "path", "complete", "empty"):
            if args.n is None:
                raise CliError(f"{fam} needs --n")
            g = from_family(f"{fam}:{args.n}")
        elif fam == "kneser":
            if args.a is None or args.b is None:
                raise CliError("kneser needs --a and --b")
            g = gen_kneser(args.a, args.b)
        elif fam in ("mycielski", "general-mycielski", "genmycielski"):
            if args.base is None:
                raise CliError(f"{fam} needs --base FAMILY")
            levels = args.levels if fam != "mycielski" else 2
            if levels is None:
                raise CliError(f"{fam} needs --levels")
            g = gen_general_mycielski(load_graph(args.base), levels)
        else:
            raise CliError(f"unknown family {args.family!r}; expected one of {FAMILY_HELP}")
    except ValueError as exc:
        raise CliError(str(exc)) from None
    print(to_graph6(g))
    return EXIT_OK


# -- parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sysbounds",
        description="Vertex-count lower bounds from chromatic number and odd girth.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="exact invariants of one graph")
    p.add_argument("graph", help=f"graph6 string, graph6/edge-list file, or family ({FAMILY_HELP})")
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("bounds", help="evaluate every bound at (chi, k)")
    p.add_argument("--chi", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--catalog", default="all", help="table1, table2, all, or comma-separated ids")
    p.add_argument("--format", choices=["json", "text"], default="text")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("table", help="winner matrix over a (chi, k) grid")
    p.add_argument("--preset", choices=sorted(TABLE_PRESETS), default="table1")
    p.add_argument("--catalog", default=None, help="override the preset catalog")
    p.add_argument("--chi", default="3-15", help="inclusive range A-B")
    p.add_argument("--k", default="2-10", help="inclusive range A-B")
    p.add_argument("--format", choices=["md", "csv", "json", "text"], default="md")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("audit", help="check the bounds on many graphs")
    p.add_argument("--enumerate", metavar="N", help="all labeled graphs on N (or A-B) vertices, N <= 7")
    p.add_argument("--graph6-file", metavar="PATH")
    p.add_argument("--dedup", action="store_true", help="one graph per isomorphism class")
    p.add_argument("--mandatory", metavar="LIST")
    p.add_argument("--report-only", metavar="LIST")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--max-listed", type=int, default=1000)
    p.add_argument("--out", metavar="PATH")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("color", help="ball-peeling colouring")
    p.add_argument("graph")
    p.add_argument("--k", type=int, default=None, help="defaults to the graph's own odd-girth parameter")
    p.add_argument("--format", choices=["json", "text"], default="text")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("gen", help="emit a named graph as graph6")
    p.add_argument("family")
    p.add_argument("--n", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--base")
    p.add_argument("--levels", type=int)
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
