"""Compare the pure-Python and compiled max-clique kernels on real searches.

Builds the same compatibility graphs the search pipeline solves and times
``solve_max_clique`` on each backend.  Both follow the identical branching
order, so the members found and the number of explored nodes must match
exactly; the table reports wall time, node throughput, and speedup.

Usage:
    python3 benchmarks/bench_clique.py            # desk-scale cases
    python3 benchmarks/bench_clique.py --heavy    # adds the 7-cycle case
"""

import argparse
import time

from qgc._kernels import _pure, pack_masks
from qgc.codes import qs_bound
from qgc.distance import build_distance_table
from qgc.graphs import cycle_graph, wheel_graph
from qgc.search import compatibility_graph

try:
    from qgc._kernels import _fast
except ImportError:
    _fast = None

CASES = [
    ("cycle n=6 D=2 delta=2", cycle_graph(6, 2), 2),
    ("cycle n=8 D=2 delta=3", cycle_graph(8, 2), 3),
    ("cycle n=6 D=3 delta=3", cycle_graph(6, 3, double_edge=True), 3),
    ("wheel n=8 D=2 delta=3", wheel_graph(8, 2), 3),
]
HEAVY = [
    ("cycle n=7 D=2 delta=2", cycle_graph(7, 2), 2),
]


def run_case(name, graph, delta):
    table = build_distance_table(graph, min(delta - 1, graph.n))
    cg = compatibility_graph(table, delta)
    masks = list(cg.masks)
    # Same saturation bound the search pipeline passes: the clique plus the
    # zero label cannot beat the largest K the distance allows.
    ub = max(qs_bound(graph.n, delta, graph.dim) - 1, 0)

    t0 = time.perf_counter()
    pure = _pure.solve_max_clique(masks, ub, None)
    t_pure = time.perf_counter() - t0

    row = {
        "name": name,
        "vertices": len(masks),
        "k": len(pure[0]),
        "nodes": pure[2],
        "pure": t_pure,
        "fast": None,
    }
    if _fast is not None:
        blob = pack_masks(masks, len(masks))
        t0 = time.perf_counter()
        fast = _fast.solve_max_clique(blob, len(masks), ub, 0.0)
        row["fast"] = time.perf_counter() - t0
        if (list(fast[0]), fast[2]) != (list(pure[0]), pure[2]):
            raise SystemExit(f"backend mismatch on {name}: {fast} vs {pure}")
    return row


def fmt(seconds: float | None) -> str:
    if seconds is None:
        return "-"
    if seconds < 1.0:
        return f"{seconds * 1e3:.2f}ms"
    return f"{seconds:.2f}s"


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--heavy", action="store_true",
        help="include the 7-cycle search (about a minute on the pure backend)",
    )
    args = parser.parse_args()

    cases = CASES + (HEAVY if args.heavy else [])
    if _fast is None:
        print("compiled extension not available; timing the pure kernel only")
    print(
        f"{'case':<24} {'verts':>5} {'K':>3} {'nodes':>12} "
        f"{'pure':>10} {'compiled':>10} {'speedup':>8}"
    )
    for name, graph, delta in cases:
        row = run_case(name, graph, delta)
        ratio = (
            f"{row['pure'] / row['fast']:7.1f}x"
            if row["fast"] else "       -"
        )
        print(
            f"{row['name']:<24} {row['vertices']:>5} {row['k']:>3} "
            f"{row['nodes']:>12} {fmt(row['pure']):>10} "
            f"{fmt(row['fast']):>10} {ratio}"
        )


if __name__ == "__main__":
    main()
