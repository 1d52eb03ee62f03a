"""Closed-form code constructions that bypass search.

Three families: partition codes (distance 2 at the largest possible K, on
any graph split into two sides whose cross-edge sums are units), the odd-n
star-graph codes (nonadditive, distance 2), and a stored ((16, 128, 4))
additive code on the 4-dimensional hypercube graph.
"""

from __future__ import annotations

import itertools
import json
from importlib import resources
from math import comb, gcd

from .codes import GraphCode, code_from_labels, is_additive
from .errors import CapacityError, ConstructionError
from .graphs import Graph, hypercube_graph, star_graph
from .zmod import GeneratorMatrix, ModTuple, memory_cap, parse_label, span

#: delta of every partition and star construction.
_PARTITION_DELTA = 2


def partition_code(graph: Graph, v1: frozenset[int] | set[int]) -> GraphCode:
    """The distance-2 code with K = dim**(n-2) from a two-sided vertex split.

    ``v1`` holds 0-indexed vertices.  Codewords are the labels whose digit
    sums vanish separately on each side.  Requires every vertex's summed
    edge weight into the opposite side to be a unit mod dim; that makes any
    single-qudit error detectable, because its displacement changes one of
    the two side sums.
    """
    dim, n = graph.dim, graph.n
    side1 = frozenset(v1)
    if not side1 or not all(0 <= v < n for v in side1):
        raise ConstructionError(f"v1 must be a nonempty subset of 0..{n - 1}")
    side2 = frozenset(range(n)) - side1
    if not side2:
        raise ConstructionError("v1 must be a proper subset: v2 is empty")
    for l in range(n):
        other = side2 if l in side1 else side1
        cross = sum(graph.gamma[l][m] for m in other)
        if cross == 0:
            raise ConstructionError(
                f"vertex {l + 1} has no edge into the opposite side"
            )
        if gcd(cross, dim) != 1:
            raise ConstructionError(
                f"vertex {l + 1} has cross-edge sum {cross}, "
                f"not coprime to dim {dim}"
            )
    size = dim ** (n - 2)
    if size > memory_cap():
        raise CapacityError(
            f"partition code has {size} codewords, above the cap of {memory_cap()}"
        )
    ones = sorted(side1)
    twos = sorted(side2)
    labels = []
    for free1 in itertools.product(range(dim), repeat=len(ones) - 1):
        for free2 in itertools.product(range(dim), repeat=len(twos) - 1):
            digits = [0] * n
            for v, x in zip(ones[:-1], free1):
                digits[v] = x
            digits[ones[-1]] = (-sum(free1)) % dim
            for v, x in zip(twos[:-1], free2):
                digits[v] = x
            digits[twos[-1]] = (-sum(free2)) % dim
            labels.append(ModTuple(dim, tuple(digits)))
    code = code_from_labels(graph, _PARTITION_DELTA, labels, exhaustive=True)
    if not code.additive or not code.qs_saturated():
        raise ConstructionError("partition code failed its structural invariants")
    return code


def default_partition(graph: Graph) -> frozenset[int]:
    """First half of the vertex list: the natural split for bar graphs."""
    return frozenset(range(graph.n // 2))


def star_code_odd(n: int) -> GraphCode:
    """The distance-2 qubit code on the odd-n star graph.

    Codewords fix the hub digit to 0 and take peripheral weights r from

        R = {even r <= (n-3)/2}  union  {n-1-r : odd r <= (n-3)/2},

    giving K = 2**(n-2) - C(n-1, (n-1)/2)/2 codewords; nonadditive for
    every n >= 5.
    """
    if n < 3 or n % 2 == 0:
        raise ConstructionError(f"star code needs odd n >= 3, got {n}")
    graph = star_graph(n, 2)
    limit = (n - 3) // 2
    weights = {r for r in range(0, limit + 1, 2)}
    weights |= {n - 1 - r for r in range(1, limit + 1, 2)}
    labels = []
    for r in sorted(weights):
        for ones in itertools.combinations(range(1, n), r):
            digits = [0] * n
            for v in ones:
                digits[v] = 1
            labels.append(ModTuple(2, tuple(digits)))
    expected = 2 ** (n - 2) - comb(n - 1, (n - 1) // 2) // 2
    if len(labels) != expected:
        raise ConstructionError(
            f"star code size {len(labels)} does not match the closed form {expected}"
        )
    return code_from_labels(graph, _PARTITION_DELTA, labels, exhaustive=False)


def hypercube16_code() -> GraphCode:
    """The stored ((16, 128, 4)) additive code on the 4-dimensional hypercube.

    Generators ship as a data asset in the report format; the code is their
    span.  Found by a non-exhaustive search, so ``exhaustive`` is False.
    """
    text = resources.files("qgc.data").joinpath("hypercube16.json").read_text()
    doc = json.loads(text)
    dim, n = doc["D"], doc["n"]
    graph = hypercube_graph(n, dim)
    gens = GeneratorMatrix.from_rows(
        [parse_label(dim, n, s) for s in doc["generators"]]
    )
    labels = span(gens)
    if len(labels) != doc["K"]:
        raise ConstructionError(
            f"stored generators span {len(labels)} labels, expected {doc['K']}"
        )
    additive, minimal = is_additive(labels)
    assert additive and minimal is not None
    return GraphCode(
        graph, doc["delta"], tuple(labels), False, True, minimal
    )
