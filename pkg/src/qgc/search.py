"""Code search: maximum compatible label sets, general and additive.

A code of distance delta on graph G is a set of labels whose pairwise
displacements all sit at table distance >= delta.  Finding the largest such
set containing zero is a maximum-clique problem on the "candidate" labels
(those at distance >= delta from zero); the additive variant restricts to
label sets closed under addition and is searched over subgroup chains.

Both searches are deterministic: candidates are visited in ascending label
order and the first optimum found in that order is returned.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from . import _kernels
from .codes import GraphCode, assert_distance, code_from_labels, qs_bound
from .distance import ABOVE_CAP, DistanceTable, build_distance_table
from .errors import CapTooLowError, DegenerateRegimeError, InternalCheckError
from .graphs import Graph
from .zmod import ModTuple


def candidate_set(table: DistanceTable, delta: int) -> tuple[ModTuple, ...]:
    """All nonzero labels at distance >= delta from zero, ascending.

    Refuses the degenerate regime delta > diagonal distance, where distance
    loses its operational meaning for this machinery; requires the table
    cap to be at least delta - 1 so that "entry >= delta" is decidable.
    """
    if delta < 1:
        raise ValueError(f"delta must be >= 1, got {delta}")
    if table.cap < min(delta - 1, table.n):
        raise CapTooLowError(
            f"table cap {table.cap} cannot decide distance >= {delta}"
        )
    diag = table.diagonal_distance
    if diag != ABOVE_CAP and delta > diag:
        raise DegenerateRegimeError(delta, diag)
    dim, n = table.dim, table.n
    out = [
        ModTuple.from_index(dim, n, idx)
        for idx, value in enumerate(table.entries)
        if idx and (value == ABOVE_CAP or value >= delta)
    ]
    return tuple(out)


@dataclass(frozen=True)
class CompatibilityGraph:
    """Candidates plus the pairwise "distance >= delta" relation as bitsets."""

    delta: int
    nodes: tuple[ModTuple, ...]
    masks: tuple[int, ...]


def compatibility_graph(table: DistanceTable, delta: int) -> CompatibilityGraph:
    """Adjacency between candidates whose difference has distance >= delta."""
    nodes = candidate_set(table, delta)
    entries = table.entries
    masks = []
    for i, a in enumerate(nodes):
        mask = 0
        for j, b in enumerate(nodes):
            if i == j:
                continue
            value = entries[(b - a).index]
            if value == ABOVE_CAP or value >= delta:
                mask |= 1 << j
        masks.append(mask)
    return CompatibilityGraph(delta, nodes, tuple(masks))


@dataclass(frozen=True)
class CliqueResult:
    members: tuple[int, ...]
    proven_optimal: bool
    nodes_explored: int


def max_clique(
    cg: CompatibilityGraph,
    upper_bound: int | None = None,
    budget_seconds: float | None = None,
) -> CliqueResult:
    """Maximum clique of the compatibility graph (first in ascending order)."""
    members, proven, nodes = _kernels.solve_max_clique(
        cg.masks, upper_bound=upper_bound, budget_seconds=budget_seconds
    )
    return CliqueResult(tuple(members), proven, nodes)


def _self_check(code: GraphCode, table: DistanceTable) -> GraphCode:
    report = assert_distance(code, table)
    if not report.passed:
        raise InternalCheckError(
            "freshly produced code failed its own distance check: "
            + "; ".join(v.describe() for v in report.violations)
        )
    return code


def search_code(
    graph: Graph, delta: int, budget_seconds: float | None = None
) -> GraphCode:
    """Largest code of the requested distance on this graph.

    The result's ``exhaustive`` flag is True when optimality was proven,
    either by exhausting the branch-and-bound tree or by hitting the
    singleton-type bound; it is False exactly when the time budget expired,
    in which case the best code found so far is returned.
    """
    if delta < 2:
        raise ValueError(f"search requires delta >= 2, got {delta}")
    if delta > graph.n + 1:
        raise ValueError(
            f"delta {delta} unreachable: distances never exceed n = {graph.n}"
        )
    table = build_distance_table(graph, min(delta - 1, graph.n))
    cg = compatibility_graph(table, delta)  # raises in the degenerate regime
    zero = ModTuple.zero(graph.dim, graph.n)
    bound = qs_bound(graph.n, delta, graph.dim)
    if not cg.nodes:
        return GraphCode(graph, delta, (zero,), True, True, ())
    result = max_clique(
        cg, upper_bound=max(bound - 1, 0), budget_seconds=budget_seconds
    )
    labels = [zero] + [cg.nodes[i] for i in result.members]
    code = code_from_labels(graph, delta, labels, exhaustive=result.proven_optimal)
    return _self_check(code, table)


def _coset_extension(
    elems: set[tuple[int, ...]], g: tuple[int, ...], dim: int
) -> list[tuple[int, ...]] | None:
    """New elements of <elems, g>, or None if g is already inside.

    The cosets elems + j*g for j = 1..ord-1 are pairwise disjoint and
    disjoint from elems, so the returned list has no duplicates.
    """
    if g in elems:
        return None
    fresh: list[tuple[int, ...]] = []
    shift = g
    while shift not in elems:
        fresh.extend(tuple((h + s) % dim for h, s in zip(he, shift)) for he in elems)
        shift = tuple((a + b) % dim for a, b in zip(shift, g))
    return fresh


def search_additive(
    graph: Graph, delta: int, budget_seconds: float | None = None
) -> GraphCode:
    """Largest additive (addition-closed) code of the requested distance.

    Depth-first search over subgroup chains.  Each subgroup is reached by
    exactly one chain, the one whose next generator is always the smallest
    new element it brings in, so the enumeration is complete and free of
    duplicates.  Pruning: a chain is cut when the current subgroup plus all
    still-compatible candidates cannot beat the incumbent.
    """
    if delta < 2:
        raise ValueError(f"search requires delta >= 2, got {delta}")
    if delta > graph.n + 1:
        raise ValueError(
            f"delta {delta} unreachable: distances never exceed n = {graph.n}"
        )
    dim, n = graph.dim, graph.n
    table = build_distance_table(graph, min(delta - 1, graph.n))
    candidates = candidate_set(table, delta)
    zero = ModTuple.zero(dim, n)
    if not candidates:
        return GraphCode(graph, delta, (zero,), True, True, ())

    good: set[tuple[int, ...]] = {c.entries for c in candidates}
    ordered: list[tuple[int, ...]] = [c.entries for c in candidates]
    bound = qs_bound(n, delta, dim)
    deadline = None
    if budget_seconds is not None and budget_seconds > 0:
        deadline = time.monotonic() + budget_seconds

    best: list[tuple[int, ...]] = [(0,) * n]
    state = {"done": False, "aborted": False}

    def viable(elems: set[tuple[int, ...]]) -> list[tuple[int, ...]]:
        # Candidates that could still join: compatible with every element.
        out = []
        for x in ordered:
            if x in elems:
                continue
            ok = True
            for h in elems:
                d = tuple((a - b) % dim for a, b in zip(x, h))
                if d not in good:
                    ok = False
                    break
            if ok:
                out.append(x)
        return out

    def dfs(elems: set[tuple[int, ...]], frontier: list[tuple[int, ...]]) -> None:
        nonlocal best
        if state["done"] or state["aborted"]:
            return
        if deadline is not None and time.monotonic() > deadline:
            state["aborted"] = True
            return
        if len(elems) > len(best):
            best = sorted(elems)
            if len(best) >= bound:
                state["done"] = True  # singleton-type bound reached
                return
        if len(elems) + len(frontier) <= len(best):
            return
        for g in frontier:
            fresh = _coset_extension(elems, g, dim)
            if fresh is None:
                continue
            # Canonical chain rule: g must be the smallest element it adds.
            if min(fresh) != g:
                continue
            if any(x != g and x not in good for x in fresh):
                continue
            bigger = elems | set(fresh)
            dfs(bigger, [x for x in viable(bigger) if x > g])

    dfs({(0,) * n}, ordered)

    labels = [ModTuple(dim, t) for t in best]
    code = code_from_labels(
        graph, delta, labels, exhaustive=not state["aborted"]
    )
    if not code.additive:
        raise InternalCheckError("additive search produced a non-closed label set")
    return _self_check(code, table)
