"""Command line front end.

Subcommands: count, build, verify, search, lemma, scan. Output formats are
text (default), json, and csv; json renderings are byte-identical across
worker counts for identical inputs (timings never enter serialised output).

Exit codes: 0 success / all checks pass, 1 verification failure,
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import enumeration as enum
from . import families as fam
from . import graph as G
from . import transforms as tr
from .counting import count_cis, count_cis_rooted, count_cis_rooted2
from .errors import CisGraphError, ParseError

DEFAULT_SEED = 1729
DEFAULT_TRIALS = 200
DEFAULT_ORDER_BUDGET = 16

# default verification windows; upper ends stay desk scale, wider ranges are
# available explicitly up to the enumeration caps
_VERIFY_DEFAULTS = {
    "main1cut": (3, 8),
    "main2cut": (3, 8),
    "min_uni_n": (4, 8),
    "maxnp": (5, 8),
    "min_p_pend": (4, 8),
    "theo_p0": (6, 8),
    "prop_tadpole": (6, 12),
    "minimally_2conn_counts": (3, 9),
}


# rendering -----------------------------------------------------------------

def _emit(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="ascii") as fh:
            fh.write(text)


def _render_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _columns(rows: list[dict]) -> list[str]:
    cols: list[str] = []
    for row in rows:
        for key in row:
            if key not in cols:
                cols.append(key)
    return cols


def _render_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=_columns(rows), lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
    return buf.getvalue()


def _render_table(rows: list[dict]) -> str:
    if not rows:
        return "(empty)\n"
    cols = _columns(rows)
    cells = [[str(row.get(c, "")) for c in cols] for row in rows]
    widths = [max(len(c), *(len(line[i]) for line in cells))
              for i, c in enumerate(cols)]
    out = ["  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip()]
    for line in cells:
        out.append("  ".join(v.ljust(w) for v, w in zip(line, widths)).rstrip())
    return "\n".join(out) + "\n"


def _rows_output(rows: list[dict], fmt: str, path: str | None,
                 json_obj=None) -> None:
    if fmt == "json":
        _emit(_render_json(rows if json_obj is None else json_obj), path)
    elif fmt == "csv":
        _emit(_render_csv(rows), path)
    else:
        _emit(_render_table(rows), path)


# input ----------------------------------------------------------------------

def _read_graphs(args) -> list[G.Graph]:
    if args.family is not None:
        return [fam.build_family(args.family)]
    if args.graph6 is not None:
        return [G.from_graph6(args.graph6)]
    if args.edge_list is not None:
        with open(args.edge_list, encoding="ascii") as fh:
            return [G.parse_edge_list(fh.read())]
    if args.graph6_file is not None:
        if args.graph6_file == "-":
            lines = sys.stdin.read().splitlines()
        else:
            with open(args.graph6_file, encoding="ascii") as fh:
                lines = fh.read().splitlines()
    else:
        lines = sys.stdin.read().splitlines()
    graphs = []
    for no, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            graphs.append(G.from_graph6(line))
        except CisGraphError as exc:
            raise ParseError(f"line {no}: {exc}") from exc
    if not graphs:
        raise ParseError("no input graphs")
    return graphs


# subcommands -----------------------------------------------------------------

def cmd_count(args) -> int:
    graphs = _read_graphs(args)
    rows = []
    for g in graphs:
        row = {"graph6": G.to_graph6(g), "n": g.n}
        if args.roots is not None:
            u, v = args.roots
            row["root_u"], row["root_v"] = u, v
            row["count"] = count_cis_rooted2(g, u, v)
        elif args.root is not None:
            row["root"] = args.root
            row["count"] = count_cis_rooted(g, args.root)
        else:
            row["count"] = count_cis(g)
        rows.append(row)
    if args.format == "text":
        _emit("".join(f"{row['count']}\n" for row in rows), args.output)
    else:
        _rows_output(rows, args.format, args.output)
    return 0


def cmd_build(args) -> int:
    spec = fam.parse_family_spec(args.spec)
    g = spec.build()
    if args.format == "json":
        _emit(_render_json({"spec": spec.text(), "n": g.n,
                            "graph6": G.to_graph6(g)}), args.output)
    else:
        _emit(G.to_graph6(g) + "\n", args.output)
    return 0


def cmd_verify(args) -> int:
    lo, hi = _VERIFY_DEFAULTS[args.theorem]
    n_lo = args.n_lo if args.n_lo is not None else lo
    n_hi = args.n_hi if args.n_hi is not None else hi
    report = enum.verify_theorem(args.theorem, n_lo, n_hi, workers=args.workers)
    if args.format == "json":
        _emit(_render_json(report.to_json_dict()), args.output)
    elif args.format == "csv":
        _emit(_render_csv(list(report.entries)), args.output)
    else:
        head = f"verify {report.theorem_id} n={report.n_lo}..{report.n_hi}\n"
        tail = ("PASS" if report.passed else "FAIL") + "\n"
        _emit(head + _render_table(list(report.entries)) + tail, args.output)
    return 0 if report.passed else 1


def _class_from_args(args) -> enum.GraphClass:
    return enum.GraphClass(
        n=args.n,
        cut_count=args.c,
        pendant_count=args.p,
        two_connected=True if args.two_connected else None,
        minimally_two_connected=True if args.min_two_connected else None,
        tree=True if args.tree else None,
    )


def cmd_search(args) -> int:
    report = enum.extremal_search(_class_from_args(args), args.objective,
                                  workers=args.workers)
    if args.format == "json":
        _emit(_render_json(report.to_json_dict()), args.output)
        return 0
    row = report.to_json_dict()
    row["class"] = " ".join(f"{k}={v}" for k, v in row["class"].items())
    row["witnesses"] = " ".join(row["witnesses"])
    if args.format == "csv":
        _emit(_render_csv([row]), args.output)
    else:
        lines = [f"{k}: {row[k]}" for k in row]
        lines.append(f"elapsed: {report.elapsed:.2f}s")
        _emit("\n".join(lines) + "\n", args.output)
    return 0


def _lemma_reports(args) -> list[tr.LemmaReport]:
    reports = []
    for seed in range(args.seed, args.seed + args.trials):
        inst = tr.random_instance(args.lemma, args.order_budget, seed)
        reports.append(tr.check(inst))
    return reports


def _one_cut_chain(n: int) -> list[tr.LemmaReport]:
    reports = []
    l = 2
    while 2 * l <= n - 1:
        inst = tr.LemmaInstance("one_cut", {}, {}, {"n": n, "l": l})
        reports.append(tr.check(inst))
        l += 1
    if not reports:
        raise CisGraphError(f"no one_cut chain step exists at n={n}")
    return reports


def cmd_lemma(args) -> int:
    if args.lemma == "path_order" and args.exhaustive:
        checked, mismatches = tr.path_order_equality_sweep(args.max_order)
        passed = mismatches == 0
        if args.format == "json":
            _emit(_render_json({"lemma_id": "path_order", "mode": "exhaustive",
                                "max_order": args.max_order, "checked": checked,
                                "mismatches": mismatches, "passed": passed}),
                  args.output)
        else:
            _emit(f"path_order exhaustive sweep to order {args.max_order}: "
                  f"{checked} instances, {mismatches} equality mispredictions: "
                  f"{'PASS' if passed else 'FAIL'}\n", args.output)
        return 0 if passed else 1

    if args.lemma == "one_cut" and args.n is not None:
        reports = _one_cut_chain(args.n)
    else:
        reports = _lemma_reports(args)
    rows = [r.to_json_dict() for r in reports]
    all_hold = all(r.holds for r in reports)
    if args.format == "json":
        _emit(_render_json(rows), args.output)
    elif args.format == "csv":
        _emit(_render_csv(rows), args.output)
    else:
        lines = []
        for r in reports:
            lines.append(f"{'ok  ' if r.holds else 'FAIL'} "
                         f"{r.lhs} {r.relation_observed} {r.rhs} "
                         f"(claimed {r.relation_claimed}, cuts "
                         f"{r.cut_count_before}->{r.cut_count_after})  "
                         f"{r.instance}")
        lines.append(f"{sum(r.holds for r in reports)}/{len(reports)} hold")
        _emit("\n".join(lines) + "\n", args.output)
    return 0 if all_hold else 1


def cmd_scan(args) -> int:
    entries = enum.open_problem_scan(args.n_lo, args.n_hi, workers=args.workers)
    if args.format == "json":
        _emit(_render_json([e.to_json_dict() for e in entries]), args.output)
        return 0
    rows = []
    for e in entries:
        d = e.report.to_json_dict()
        rows.append({
            "n": d["class"]["n"],
            "c": d["class"]["cut_count"],
            "optimum": d["optimum"],
            "witnesses": " ".join(d["witnesses"]),
            "blocks": "; ".join(",".join(map(str, b)) for b in e.witness_blocks),
            "all_minimal": e.blocks_all_minimal,
            "flagged": e.flagged,
        })
    _rows_output(rows, args.format, args.output)
    return 0


# parser -----------------------------------------------------------------------

def _add_common(sub) -> None:
    sub.add_argument("--format", choices=("text", "json", "csv"), default="text")
    sub.add_argument("--output", default=None, metavar="PATH",
                     help="write output to PATH instead of stdout")
    sub.add_argument("--workers", type=int, default=None,
                     help="worker threads (default: CISGRAPH_WORKERS or all cores)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cisgraph",
        description="count connected induced subgraphs, build extremal "
                    "families, check transformation lemmas, verify theorems",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("count", help="count connected induced subgraphs")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--family", help="family spec, e.g. 'double_tadpole(6,3,3)'")
    src.add_argument("--graph6", help="a single graph6 string")
    src.add_argument("--edge-list", help="edge list file (first line n, then 'u v')")
    src.add_argument("--graph6-file", help="file of graph6 lines, '-' for stdin")
    p.add_argument("--root", type=int, default=None,
                   help="count subgraphs containing this vertex")
    p.add_argument("--roots", type=int, nargs=2, default=None, metavar=("U", "V"),
                   help="count subgraphs containing both vertices")
    _add_common(p)
    p.set_defaults(fn=cmd_count)

    p = subs.add_parser("build", help="build a family member, print graph6")
    p.add_argument("spec", help="family spec, e.g. 'balanced_max(7,2)'")
    _add_common(p)
    p.set_defaults(fn=cmd_build)

    p = subs.add_parser("verify", help="exhaustively verify a theorem window")
    p.add_argument("theorem", choices=enum.THEOREM_IDS)
    p.add_argument("--n-lo", type=int, default=None)
    p.add_argument("--n-hi", type=int, default=None)
    _add_common(p)
    p.set_defaults(fn=cmd_verify)

    p = subs.add_parser("search", help="extremal search over a graph class")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c", type=int, default=None, help="cut vertex count")
    p.add_argument("--p", type=int, default=None, help="pendant vertex count")
    p.add_argument("--two-connected", action="store_true")
    p.add_argument("--min-two-connected", action="store_true")
    p.add_argument("--tree", action="store_true")
    p.add_argument("--objective", choices=("min", "max"), required=True)
    _add_common(p)
    p.set_defaults(fn=cmd_search)

    p = subs.add_parser("lemma", help="check random or exhaustive lemma instances")
    p.add_argument("lemma", choices=tr.LEMMA_IDS)
    p.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--order-budget", type=int, default=DEFAULT_ORDER_BUDGET)
    p.add_argument("--n", type=int, default=None,
                   help="one_cut only: verify the whole chain at this order")
    p.add_argument("--exhaustive", action="store_true",
                   help="path_order only: sweep all small instances")
    p.add_argument("--max-order", type=int, default=7,
                   help="total order cap for the exhaustive sweep")
    _add_common(p)
    p.set_defaults(fn=cmd_lemma)

    p = subs.add_parser("scan", help="minima and block structure for 1 <= c <= n-3")
    p.add_argument("--n-lo", type=int, default=4)
    p.add_argument("--n-hi", type=int, default=7)
    _add_common(p)
    p.set_defaults(fn=cmd_scan)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except CisGraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
