"""Command-line interface: search, construct, verify, stabilizer, table.

Report format
-------------
Reports are JSON objects with a fixed key order:

    tool, version, n, D, delta, K, qs_bound, qs_saturated, exhaustive,
    additive, diagonal_distance, codewords, generators, stabilizer, graph,
    reason, elapsed_seconds

``codewords`` and ``generators`` hold labels as digit strings (vertex 1
leftmost), comma-separated when D > 10.  ``diagonal_distance`` is an int,
or the string ">k" when only "above the table cap k" is known.  ``graph``
embeds D, n, and the full adjacency matrix so a report can be re-verified
on its own.  ``reason`` is null except for refused degenerate requests,
which carry K = 0.  Reports are deterministic except for the
``elapsed_seconds`` field.

Pauli strings (inside ``stabilizer``) use the grammar

    ["w^k"] factor*        factor = "X<vertex>["^e"] | "Z<vertex>["^e"]

with 1-indexed vertices in order, the X factor before the Z factor on each
vertex, exponent suffixes omitted when the exponent is 1, and the bare
identity rendered as "I".

Exit codes: 0 success (including degenerate-regime refusals), 1 invalid
input, 2 time budget exhausted (the report is still produced), 3
verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Any

from . import __version__
from .codes import GraphCode, assert_distance, code_from_labels, qs_bound
from .constructions import (
    default_partition,
    hypercube16_code,
    partition_code,
    star_code_odd,
)
from .distance import ABOVE_CAP, DistanceTable, build_distance_table
from .errors import (
    DegenerateRegimeError,
    InternalCheckError,
    NotAdditiveError,
    QgcError,
)
from .graphs import FAMILIES, Graph, build_family, parse_graph, serialize_graph
from .oracle import kl_verify, oracle_cap
from .pauli import pauli_string
from .search import search_additive, search_code
from .stabilizer import StabilizerGroup, stabilizer_subgroup, verify_stabilizer
from .zmod import label_str, parse_label

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_BUDGET = 2
EXIT_VERIFY = 3

#: Stabilizer tuples and Pauli strings are embedded in reports up to this order.
_REPORT_STAB_LIMIT = 4096


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; this tool reserves 2 for budgets."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def _diagonal_json(table: DistanceTable) -> int | str:
    if table.diagonal_distance == ABOVE_CAP:
        return f">{table.cap}"
    return table.diagonal_distance


def build_report(
    code: GraphCode,
    table: DistanceTable,
    stab: StabilizerGroup | None = None,
    elapsed: float = 0.0,
) -> dict[str, Any]:
    """The JSON document for a produced code."""
    stab_doc: dict[str, Any] | None = None
    if stab is not None:
        stab_doc = {
            "order": stab.order,
            "generators": [label_str(s) for s in stab.generators],
        }
        if stab.tuples is not None and stab.order <= _REPORT_STAB_LIMIT:
            assert stab.elements is not None
            stab_doc["tuples"] = [label_str(s) for s in stab.tuples]
            stab_doc["paulis"] = [pauli_string(p) for p in stab.elements]
    return {
        "tool": "qgc",
        "version": __version__,
        "n": code.n,
        "D": code.dim,
        "delta": code.delta,
        "K": code.K,
        "qs_bound": qs_bound(code.n, code.delta, code.dim),
        "qs_saturated": code.qs_saturated(),
        "exhaustive": code.exhaustive,
        "additive": code.additive,
        "diagonal_distance": _diagonal_json(table),
        "codewords": [label_str(c) for c in code.codewords],
        "generators": (
            None
            if code.generators is None
            else [label_str(g) for g in code.generators]
        ),
        "stabilizer": stab_doc,
        "graph": {
            "D": code.dim,
            "n": code.n,
            "adjacency": [list(row) for row in code.graph.gamma],
        },
        "reason": None,
        "elapsed_seconds": round(elapsed, 3),
    }


def degenerate_report(
    graph: Graph, delta: int, exc: DegenerateRegimeError, elapsed: float
) -> dict[str, Any]:
    """K = 0 document for a refused degenerate-regime request."""
    return {
        "tool": "qgc",
        "version": __version__,
        "n": graph.n,
        "D": graph.dim,
        "delta": delta,
        "K": 0,
        "qs_bound": qs_bound(graph.n, delta, graph.dim),
        "qs_saturated": False,
        "exhaustive": True,
        "additive": False,
        "diagonal_distance": exc.diagonal_distance,
        "codewords": [],
        "generators": None,
        "stabilizer": None,
        "graph": {
            "D": graph.dim,
            "n": graph.n,
            "adjacency": [list(row) for row in graph.gamma],
        },
        "reason": str(exc),
        "elapsed_seconds": round(elapsed, 3),
    }


def report_to_json(doc: dict[str, Any]) -> str:
    return json.dumps(doc, indent=2) + "\n"


def load_report(path: str) -> dict[str, Any]:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def graph_from_report(doc: dict[str, Any]) -> Graph:
    g = doc["graph"]
    return Graph(g["D"], tuple(tuple(row) for row in g["adjacency"]))


def code_from_report(doc: dict[str, Any]) -> GraphCode:
    """Rebuild the code a report describes, recomputing its additivity."""
    graph = graph_from_report(doc)
    labels = [parse_label(graph.dim, graph.n, s) for s in doc["codewords"]]
    return code_from_labels(
        graph, doc["delta"], labels, exhaustive=bool(doc.get("exhaustive"))
    )


def _emit(doc: dict[str, Any], out: str | None, summary: str) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(report_to_json(doc))
        print(summary)
    else:
        sys.stdout.write(report_to_json(doc))


def _summary_line(code: GraphCode, elapsed: float) -> str:
    return (
        f"n={code.n} D={code.dim} delta={code.delta} K={code.K} "
        f"additive={code.additive} exhaustive={code.exhaustive} "
        f"elapsed={elapsed:.2f}s"
    )


def _resolve_graph(args: argparse.Namespace) -> Graph:
    if args.graph is not None:
        with open(args.graph, "r", encoding="utf-8") as fh:
            graph = parse_graph(fh.read())
        if args.D is not None and args.D != graph.dim:
            raise ValueError(
                f"--D {args.D} contradicts the graph file's dimension {graph.dim}"
            )
        return graph
    if args.family is None:
        raise ValueError("provide either --graph FILE or --family NAME --n N")
    if args.n is None or args.D is None:
        raise ValueError("--family requires both --n and --D")
    return build_family(
        args.family, args.n, args.D, double_edge=getattr(args, "double_edge", False)
    )


def cmd_search(args: argparse.Namespace) -> int:
    graph = _resolve_graph(args)
    start = time.monotonic()
    try:
        if args.additive_only:
            code = search_additive(graph, args.delta, budget_seconds=args.budget)
        else:
            code = search_code(graph, args.delta, budget_seconds=args.budget)
    except DegenerateRegimeError as exc:
        elapsed = time.monotonic() - start
        doc = degenerate_report(graph, args.delta, exc, elapsed)
        _emit(doc, args.out, f"K=0 (refused: {exc})")
        return EXIT_OK
    elapsed = time.monotonic() - start
    table = build_distance_table(graph, min(args.delta - 1, graph.n))
    doc = build_report(code, table, elapsed=elapsed)
    _emit(doc, args.out, _summary_line(code, elapsed))
    return EXIT_OK if code.exhaustive else EXIT_BUDGET


def cmd_construct(args: argparse.Namespace) -> int:
    start = time.monotonic()
    if args.method == "partition":
        graph = _resolve_graph(args)
        if args.v1:
            side = frozenset(int(tok) - 1 for tok in args.v1.split(","))
        else:
            side = default_partition(graph)
        code = partition_code(graph, side)
    elif args.method == "star-odd":
        if args.n is None:
            raise ValueError("--method star-odd requires --n")
        code = star_code_odd(args.n)
    else:
        code = hypercube16_code()
    table = build_distance_table(code.graph, min(code.delta - 1, code.n))
    report = assert_distance(code, table)
    elapsed = time.monotonic() - start
    if not report.passed:
        for violation in report.violations:
            print(f"distance violation: {violation.describe()}", file=sys.stderr)
        return EXIT_VERIFY
    doc = build_report(code, table, elapsed=elapsed)
    _emit(doc, args.out, _summary_line(code, elapsed))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    doc = load_report(args.code)
    if doc.get("K") == 0 and doc.get("reason"):
        print(f"nothing to verify: {doc['reason']}")
        return EXIT_OK
    try:
        code = code_from_report(doc)
    except (QgcError, ValueError, KeyError) as exc:
        print(f"FAIL structure: {exc}")
        return EXIT_VERIFY
    failures = 0
    if doc.get("K") != code.K:
        print(f"FAIL K: report claims {doc.get('K')}, found {code.K}")
        failures += 1
    if bool(doc.get("additive")) != code.additive:
        print(
            f"FAIL additive: report claims {doc.get('additive')}, "
            f"found {code.additive}"
        )
        failures += 1
    table = build_distance_table(code.graph, min(code.delta - 1, code.n))
    report = assert_distance(code, table)
    if report.passed:
        print(f"PASS distance: {report.pairs_checked} pairs at delta={code.delta}")
    else:
        failures += 1
        for violation in report.violations:
            print(f"FAIL distance: {violation.describe()}")
    if args.oracle:
        if code.dim**code.n > oracle_cap():
            print(
                f"SKIP oracle: dim**n = {code.dim**code.n} above the cap "
                f"{oracle_cap()}"
            )
        else:
            kl = kl_verify(code)
            if kl.passed:
                print(
                    f"PASS oracle: {kl.products_checked} products, "
                    f"max off-diagonal {kl.max_offdiagonal:.2e}, "
                    f"nondegenerate={kl.nondegenerate}"
                )
            else:
                failures += 1
                for v in kl.violations:
                    print(
                        f"FAIL oracle: <c_{v.q}|{v.pauli}|c_{v.r}> = {v.value:.3g}"
                    )
    return EXIT_VERIFY if failures else EXIT_OK


def cmd_stabilizer(args: argparse.Namespace) -> int:
    doc = load_report(args.code)
    try:
        code = code_from_report(doc)
    except (QgcError, ValueError, KeyError) as exc:
        print(f"FAIL structure: {exc}")
        return EXIT_VERIFY
    start = time.monotonic()
    stab = stabilizer_subgroup(code)  # NotAdditiveError -> invalid input
    result = verify_stabilizer(code, stab)
    elapsed = time.monotonic() - start
    print(
        f"stabilizer order {stab.order} with {len(stab.generators)} generators; "
        f"K*|S| = {code.K * stab.order} = D^n is "
        f"{'OK' if result.order_identity_ok else 'WRONG'}"
    )
    print(
        f"checks: C1 {'PASS' if result.c1_ok else 'FAIL'} "
        f"({result.c1_checked} element/codeword pairs), "
        f"group law {'PASS' if result.group_ok else 'FAIL'} "
        f"({result.group_checked} pairs), "
        f"C3 {_tri(result.c3_ok)}, C2 {_tri(result.c2_ok)}"
        + (" [sampled]" if result.sampled else "")
    )
    for line in result.violations:
        print(f"FAIL: {line}")
    if args.out:
        table = build_distance_table(code.graph, min(code.delta - 1, code.n))
        out_doc = build_report(code, table, stab=stab, elapsed=elapsed)
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(report_to_json(out_doc))
    return EXIT_OK if result.passed else EXIT_VERIFY


def _tri(flag: bool | None) -> str:
    return "SKIP" if flag is None else ("PASS" if flag else "FAIL")


def cmd_table(args: argparse.Namespace) -> int:
    deltas = [int(tok) for tok in args.delta.split(",")]
    if not deltas or any(d < 2 for d in deltas):
        raise ValueError(f"--delta needs integers >= 2, got {args.delta!r}")
    if args.n_min > args.n_max:
        raise ValueError("--n-min must not exceed --n-max")
    budget_hit = False
    rows: list[list[str]] = []
    for n in range(args.n_min, args.n_max + 1):
        cells = [str(n)]
        for delta in deltas:
            try:
                graph = build_family(
                    args.family, n, args.D, double_edge=args.double_edge
                )
            except ValueError as exc:
                cells.append("-")
                continue
            try:
                if args.additive_only:
                    code = search_additive(graph, delta, budget_seconds=args.budget)
                else:
                    code = search_code(graph, delta, budget_seconds=args.budget)
            except DegenerateRegimeError:
                cells.append("0")
                continue
            if code.exhaustive:
                cells.append(str(code.K))
            else:
                cells.append(f">={code.K}")
                budget_hit = True
        rows.append(cells)
    header = ["n"] + [f"delta={d}" for d in deltas]
    widths = [
        max(len(header[c]), max(len(row[c]) for row in rows))
        for c in range(len(header))
    ]
    print("  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip())
    for row in rows:
        print("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
    return EXIT_BUDGET if budget_hit else EXIT_OK


def _add_graph_options(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--graph", help="graph file (header 'D n', then the matrix)")
    sub.add_argument("--family", choices=FAMILIES, help="built-in graph family")
    sub.add_argument("--n", type=int, help="vertex count for --family")
    sub.add_argument("--D", type=int, help="qudit dimension")
    sub.add_argument(
        "--double-edge",
        action="store_true",
        help="give the cycle edge {1,2} weight 2 (needs D >= 3)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qgc", description=__doc__.split("\n", 1)[0])
    parser.add_argument("--version", action="version", version=__version__)
    subs = parser.add_subparsers(dest="command", required=True)

    sp = subs.add_parser("search", parents=[], help="search for a largest code")
    _add_graph_options(sp)
    sp.add_argument("--delta", type=int, required=True, help="target distance")
    sp.add_argument(
        "--additive-only",
        action="store_true",
        help="restrict to addition-closed codes",
    )
    sp.add_argument("--budget", type=float, help="time budget in seconds")
    sp.add_argument("--out", help="write the JSON report here")
    sp.add_argument(
        "--seq",
        action="store_true",
        help="force sequential execution (always on; kept for compatibility)",
    )
    sp.set_defaults(func=cmd_search)

    cp = subs.add_parser("construct", help="build a code by a closed-form method")
    cp.add_argument(
        "--method",
        choices=("partition", "star-odd", "hypercube16"),
        required=True,
    )
    _add_graph_options(cp)
    cp.add_argument(
        "--v1",
        help="comma-separated 1-indexed vertices of side 1 (partition method)",
    )
    cp.add_argument("--out", help="write the JSON report here")
    cp.set_defaults(func=cmd_construct)

    vp = subs.add_parser("verify", help="re-verify a report file")
    vp.add_argument("--code", required=True, help="report JSON to verify")
    vp.add_argument(
        "--oracle",
        action="store_true",
        help="also run the dense error-correction check",
    )
    vp.set_defaults(func=cmd_verify)

    tp = subs.add_parser("stabilizer", help="build and verify a stabilizer group")
    tp.add_argument("--code", required=True, help="report JSON of an additive code")
    tp.add_argument("--out", help="write an augmented report here")
    tp.set_defaults(func=cmd_stabilizer)

    bp = subs.add_parser("table", help="K for a family over a range of n")
    bp.add_argument("--family", choices=FAMILIES, required=True)
    bp.add_argument("--D", type=int, required=True)
    bp.add_argument("--n-min", type=int, required=True)
    bp.add_argument("--n-max", type=int, required=True)
    bp.add_argument("--delta", required=True, help="comma-separated distances")
    bp.add_argument("--budget", type=float, help="time budget per search, seconds")
    bp.add_argument("--additive-only", action="store_true")
    bp.add_argument("--double-edge", action="store_true")
    bp.set_defaults(func=cmd_table)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except InternalCheckError as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except NotAdditiveError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (QgcError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
