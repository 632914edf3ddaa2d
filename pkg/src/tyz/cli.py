"""Command-line interface.

Every subcommand renders a list of rows in one of three formats (aligned
table, JSON object, CSV) and optionally writes the result to a file instead
of stdout.  Graph-input commands require a stable graph by default and a
semistable one under --semistable.  Exit status: 0 on success, 1 when a
verify suite has failing cases, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .catalog import (
    SUITE_NAMES,
    class_counts,
    connectivity_class,
    format_rational,
    verify,
    weight_records,
)
from .eulerian import euler_tour_count, is_balanced
from .graphs import (
    MultiDigraph,
    format_graph,
    is_semistable,
    is_stable,
    parse_graph,
)
from .spectral import charpoly
from .zeta import FAMILY_NAMES, FamilySpec, det_a_minus_i, z, z_family

__all__ = ["main", "entrypoint", "UsageError"]


class UsageError(Exception):
    """Bad command-line input; reported on stderr with exit status 2."""


MAX_WEIGHT = 5
SLOW_WEIGHT = 5  # the weight-5 catalog takes minutes, so it sits behind --allow-slow


def _checked_weight(args) -> int:
    k = args.weight
    if not 1 <= k <= MAX_WEIGHT:
        raise UsageError(f"--weight must be between 1 and {MAX_WEIGHT}")
    if k >= SLOW_WEIGHT and not args.allow_slow:
        raise UsageError(
            f"weight {k} takes minutes to enumerate; rerun with --allow-slow"
        )
    return k


def _input_graph(args) -> MultiDigraph:
    try:
        g = parse_graph(args.graph)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.semistable:
        if not is_semistable(g):
            raise UsageError(
                "graph is not semistable (needs in- and out-degree at least 1 "
                "and total degree at least 3 at every vertex)"
            )
    elif not is_stable(g):
        raise UsageError(
            "graph is not stable (needs in- and out-degree at least 2 at every "
            "vertex); pass --semistable to relax"
        )
    return g


# ---------------------------------------------------------------------------
# subcommand handlers: each returns (columns, rows, extra) where rows hold
# native values (ints, strings, lists, bools) and extra feeds the JSON object
# and the table footer
# ---------------------------------------------------------------------------


def _cmd_enumerate(args):
    k = _checked_weight(args)
    columns = ["graph", "vertices", "edges", "weight", "class"]
    rows = [
        {
            "graph": format_graph(r.graph),
            "vertices": r.graph.n,
            "edges": r.edges,
            "weight": r.weight,
            "class": r.cls,
        }
        for r in weight_records(k)
    ]
    return columns, rows, {}


def _cmd_classify(args):
    k = _checked_weight(args)
    counts = class_counts(k)
    columns = ["weight", "total", "connected", "strongly_connected", "lambda"]
    rows = [
        {
            "weight": k,
            "total": counts.total,
            "connected": counts.connected,
            "strongly_connected": counts.strongly_connected,
            "lambda": counts.lam,
        }
    ]
    return columns, rows, {}


def _cmd_z(args):
    g = _input_graph(args)
    columns = ["graph", "vertices", "edges", "weight", "class", "z"]
    rows = [
        {
            "graph": format_graph(g),
            "vertices": g.n,
            "edges": g.edge_count,
            "weight": g.weight,
            "class": connectivity_class(g),
            "z": format_rational(z(g)),
        }
    ]
    return columns, rows, {}


def _cmd_charpoly(args):
    g = _input_graph(args)
    columns = ["graph", "charpoly", "det_A_minus_I"]
    rows = [
        {
            "graph": format_graph(g),
            "charpoly": list(charpoly(g)),
            "det_A_minus_I": det_a_minus_i(g),
        }
    ]
    return columns, rows, {}


def _cmd_euler(args):
    g = _input_graph(args)
    columns = ["graph", "balanced", "euler_tours"]
    rows = [
        {
            "graph": format_graph(g),
            "balanced": is_balanced(g),
            "euler_tours": euler_tour_count(g),
        }
    ]
    return columns, rows, {}


def _cmd_expansion(args):
    k = _checked_weight(args)
    columns = ["graph", "class", "z"]
    rows = [
        {"graph": format_graph(r.graph), "class": r.cls, "z": format_rational(r.z)}
        for r in weight_records(k)
    ]
    return columns, rows, {"weight": k}


def _cmd_verify(args):
    try:
        report = verify(args.suite, max_weight=args.max_weight, allow_slow=args.allow_slow)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    columns = ["case", "expected", "actual", "status"]
    rows = [
        {
            "case": c.name,
            "expected": c.expected,
            "actual": c.actual,
            "status": "pass" if c.ok else "FAIL",
        }
        for c in report.cases
    ]
    extra = {
        "suite": report.suite,
        "passed": report.passed,
        "failed": report.failed,
        "ok": report.ok,
        "footer": f"{report.suite}: {report.passed}/{len(report.cases)} cases pass",
        "exit": 0 if report.ok else 1,
    }
    return columns, rows, extra


_FAMILY_SIZES = {
    # vertices, edges as functions of the parameters; no graph is built, so
    # large de Bruijn instances stay cheap to describe
    "A": lambda s: (s.n, 2 * s.n),
    "B": lambda s: (s.n, 2 * s.n),
    "C": lambda s: (s.n, 2 * s.n),
    "K": lambda s: (s.n, s.n * s.n),
    "D": lambda s: (2 ** (s.n - 1), 2**s.n),
    "Kmn": lambda s: (s.m + s.n, 2 * s.m * s.n),
    "loops": lambda s: (1, s.n),
}


def _cmd_families(args):
    if args.name == "Kmn":
        if args.m is None:
            raise UsageError("family Kmn needs both --m and --n")
        spec = FamilySpec("Kmn", n=args.n, m=args.m)
    else:
        if args.m is not None:
            raise UsageError("--m only applies to family Kmn")
        spec = FamilySpec(args.name, n=args.n)
    try:
        value = z_family(spec)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    vertices, edges = _FAMILY_SIZES[args.name](spec)
    columns = ["family", "n", "m", "vertices", "edges", "weight", "z"]
    rows = [
        {
            "family": args.name,
            "n": args.n,
            "m": args.m,
            "vertices": vertices,
            "edges": edges,
            "weight": edges - vertices,
            "z": format_rational(value),
        }
    ]
    return columns, rows, {}


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return " ".join(str(v) for v in value)
    return str(value)


def _render_table(columns, rows, footer) -> str:
    grid = [[_cell(row.get(c)) for c in columns] for row in rows]
    widths = [
        max(len(col), *(len(g[i]) for g in grid)) if grid else len(col)
        for i, col in enumerate(columns)
    ]
    lines = ["  ".join(col.ljust(w) for col, w in zip(columns, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    for g in grid:
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(g, widths)).rstrip())
    if footer:
        lines.append(footer)
    return "\n".join(lines) + "\n"


def _render_json(columns, rows, extra) -> str:
    obj = {k: v for k, v in extra.items() if k not in ("footer", "exit")}
    obj["rows"] = rows
    return json.dumps(obj, indent=2) + "\n"


def _render_csv(columns, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_cell(row.get(c)) for c in columns])
    return buf.getvalue()


def _render(args, columns, rows, extra) -> str:
    if args.format == "json":
        return _render_json(columns, rows, extra)
    if args.format == "csv":
        return _render_csv(columns, rows)
    return _render_table(columns, rows, extra.get("footer"))


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("table", "json", "csv"), default="table",
        help="output format (default: table)",
    )
    common.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")

    parser = argparse.ArgumentParser(
        prog="tyz",
        description="Exact catalogs, coefficients, and identity checks for stable multidigraphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def weight_command(name, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("--weight", type=int, required=True, metavar="K")
        p.add_argument(
            "--allow-slow", action="store_true",
            help="permit weight-5 runs (expect minutes, not seconds)",
        )
        return p

    def graph_command(name, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("--graph", required=True, metavar="MATRIX",
                       help='adjacency matrix, e.g. "0 2;2 0"')
        p.add_argument("--semistable", action="store_true",
                       help="accept semistable input instead of requiring stable")
        return p

    weight_command("enumerate", "list the stable graphs of one weight")
    weight_command("classify", "count stable graphs by connectivity class")
    graph_command("z", "coefficient of one graph in the expansion")
    graph_command("charpoly", "characteristic polynomial of the adjacency matrix")
    graph_command("euler", "Euler tour count with a fixed starting edge")
    weight_command("expansion", "full formal sum for one weight")

    p = sub.add_parser("verify", parents=[common], help="run a named verification suite")
    p.add_argument("suite", choices=SUITE_NAMES)
    p.add_argument("--max-weight", type=int, default=None, metavar="W",
                   help="cap for the table2 and bernoulli suites")
    p.add_argument("--allow-slow", action="store_true",
                   help="permit weight-5 runs (expect minutes, not seconds)")

    p = sub.add_parser("families", parents=[common],
                       help="closed-form z for a parametric graph family")
    p.add_argument("--name", required=True, choices=[f for f in FAMILY_NAMES if f != "twovertex"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, default=None, help="second part size for Kmn")
    return parser


_HANDLERS = {
    "enumerate": _cmd_enumerate,
    "classify": _cmd_classify,
    "z": _cmd_z,
    "charpoly": _cmd_charpoly,
    "euler": _cmd_euler,
    "expansion": _cmd_expansion,
    "verify": _cmd_verify,
    "families": _cmd_families,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        columns, rows, extra = _HANDLERS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text = _render(args, columns, rows, extra)
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
            return 2
    else:
        sys.stdout.write(text)
    return extra.get("exit", 0)


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
