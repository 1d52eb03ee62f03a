"""Stabilizer groups of additive codes, built and verified symbolically.

For an additive code C the dual S = {s : dot(s, c) = 0 for all c in C}
indexes a group of Pauli products

    T_s = w^q(s) X^s Z^(-Gamma s),    q(s) = sum_{l<m} Gamma_lm s_l s_m,

each of which fixes every codeword basis state with phase exactly zero.
The phase exponent q(s) makes s -> T_s a homomorphism on the nose:
T_s T_t = T_(s+t) with no leftover phases, for any dimension.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product as _cartesian

import numpy as np

from .codes import GraphCode
from .errors import NotAdditiveError
from .graphs import Graph, apply_pauli_symbolic
from .pauli import PauliProduct, multiply, pauli_string
from .zmod import (
    GeneratorMatrix,
    ModTuple,
    dual_generators,
    label_str,
    memory_cap,
    solve_dual,
)

#: Full pairwise group-law checking up to this many (s, t) pairs.
_GROUP_LAW_FULL = 1 << 18

#: Dense-size threshold below which the completeness scan (C2) runs.
_C2_LIMIT = 4096

#: Sample counts used when the group is too large to materialize.
_SAMPLE_ELEMENTS = 256
_SAMPLE_PAIRS = 512


def stabilizer_phase(graph: Graph, s: ModTuple) -> int:
    """q(s) = sum over edges l<m of Gamma_lm s_l s_m, mod dim."""
    total = 0
    for l, m, w in graph.edges():
        total += w * s.entries[l] * s.entries[m]
    return total % graph.dim


def stabilizer_element(graph: Graph, s: ModTuple) -> PauliProduct:
    """T_s = w^q(s) X^s Z^(-Gamma s)."""
    dim = graph.dim
    zexp = [0] * graph.n
    for l, mu in enumerate(s.entries):
        if mu:
            row = graph.gamma[l]
            for m in range(graph.n):
                if row[m]:
                    zexp[m] = (zexp[m] - mu * row[m]) % dim
    return PauliProduct(dim, stabilizer_phase(graph, s), s.entries, tuple(zexp))


@dataclass(frozen=True)
class StabilizerGroup:
    """The stabilizer of an additive code.

    ``tuples`` and the aligned ``elements`` are materialized only when the
    order fits the memory cap; ``generators`` always suffice to reproduce
    the whole group.
    """

    graph: Graph
    order: int
    generators: tuple[ModTuple, ...]
    tuples: tuple[ModTuple, ...] | None
    elements: tuple[PauliProduct, ...] | None


def stabilizer_subgroup(code: GraphCode, cap: int | None = None) -> StabilizerGroup:
    """Solve the dual of the codeword group and lift it to Pauli products."""
    if not code.additive or code.generators is None:
        raise NotAdditiveError(
            "stabilizer groups exist only for additive (addition-closed) codes"
        )
    cap = memory_cap() if cap is None else cap
    gm = GeneratorMatrix.from_rows(
        code.generators, dim=code.dim, length=code.n
    )
    dual_gens, order = dual_generators(gm)
    tuples: tuple[ModTuple, ...] | None = None
    elements: tuple[PauliProduct, ...] | None = None
    if order <= cap:
        tuples = solve_dual(gm, cap=cap)
        elements = tuple(stabilizer_element(code.graph, s) for s in tuples)
    return StabilizerGroup(code.graph, order, dual_gens.rows, tuples, elements)


@dataclass(frozen=True)
class StabilizerReport:
    """Outcome of :func:`verify_stabilizer`; ``None`` marks skipped checks."""

    passed: bool
    order: int
    order_identity_ok: bool
    c1_checked: int
    c1_ok: bool
    group_checked: int
    group_ok: bool
    c3_count: int | None
    c3_ok: bool | None
    c2_checked: int | None
    c2_ok: bool | None
    sampled: bool
    violations: tuple[str, ...]


def _digit_matrix(dim: int, n: int) -> np.ndarray:
    """Row i holds the digits of label index i (vertex 1 most significant)."""
    idx = np.arange(dim**n, dtype=np.int64)
    digits = np.empty((dim**n, n), dtype=np.int64)
    for l in range(n - 1, -1, -1):
        digits[:, l] = idx % dim
        idx //= dim
    return digits


def verify_stabilizer(
    code: GraphCode, stab: StabilizerGroup, rng_seed: int = 0
) -> StabilizerReport:
    """Check the stabilizer against the code it claims to stabilize.

    - order identity: K * |S| = dim**n;
    - C1: every stored element fixes every codeword with phase exactly 0;
    - group law: T_s T_t = T_(s+t), phases included;
    - C3: the number of labels fixed by all generators equals K;
    - C2 (only when dim**n <= 4096): every phase-free displacement-zero
      product that acts as a constant phase on all codewords has its X
      exponent in S, so nothing stabilizes the code beyond S.

    When the group is too large to materialize, C1 and the group law run on
    a seeded random sample of generator combinations and the report says so.
    """
    graph = code.graph
    dim, n = code.dim, code.n
    violations: list[str] = []
    total = dim**n

    order_identity_ok = code.K * stab.order == total
    if not order_identity_ok:
        violations.append(
            f"K * |S| = {code.K} * {stab.order} != dim**n = {total}"
        )

    sampled = stab.tuples is None or stab.elements is None
    if not sampled:
        pairs_list = list(zip(stab.tuples, stab.elements))
    else:
        rng = random.Random(rng_seed)
        pairs_list = []
        for _ in range(min(_SAMPLE_ELEMENTS, 4 * stab.order)):
            s = ModTuple.zero(dim, n)
            for g in stab.generators:
                j = rng.randrange(dim)
                while j:
                    s = s + g
                    j -= 1
            pairs_list.append((s, stabilizer_element(graph, s)))

    # C1: stored (or sampled) elements fix codewords with zero phase.
    c1_checked = 0
    c1_ok = True
    for s, element in pairs_list:
        for q, c in enumerate(code.codewords):
            c1_checked += 1
            label, phase = apply_pauli_symbolic(graph, element, c)
            if label != c or phase != 0:
                c1_ok = False
                if len(violations) < 16:
                    violations.append(
                        f"T_s for s={label_str(s)} sends codeword {q} "
                        f"({label_str(c)}) to {label_str(label)} with phase "
                        f"{phase}: {pauli_string(element)}"
                    )

    # Group law with exact phases.
    group_checked = 0
    group_ok = True
    if not sampled and stab.order**2 <= _GROUP_LAW_FULL:
        index = {s.entries: k for k, (s, _) in enumerate(pairs_list)}
        for s, es in pairs_list:
            for t, et in pairs_list:
                group_checked += 1
                expected = pairs_list[index[(s + t).entries]][1]
                if multiply(es, et) != expected:
                    group_ok = False
                    if len(violations) < 16:
                        violations.append(
                            f"group law fails at s={label_str(s)}, t={label_str(t)}"
                        )
    else:
        rng = random.Random(rng_seed + 1)
        for _ in range(_SAMPLE_PAIRS):
            s = rng.choice(pairs_list)[0]
            t = rng.choice(pairs_list)[0]
            group_checked += 1
            st = s + t
            if multiply(
                stabilizer_element(graph, s), stabilizer_element(graph, t)
            ) != stabilizer_element(graph, st):
                group_ok = False
                if len(violations) < 16:
                    violations.append(
                        f"group law fails at s={label_str(s)}, t={label_str(t)}"
                    )

    # C3: labels fixed by all generators, via phases dot(g, a).
    c3_count: int | None = None
    c3_ok: bool | None = None
    if total <= memory_cap():
        digits = _digit_matrix(dim, n)
        fixed = np.ones(total, dtype=bool)
        for g in stab.generators:
            fixed &= (digits @ np.array(g.entries, dtype=np.int64)) % dim == 0
        c3_count = int(fixed.sum())
        c3_ok = c3_count == code.K
        if not c3_ok:
            violations.append(
                f"{c3_count} labels are fixed by all generators, expected K={code.K}"
            )

    # C2: no undeclared displacement-zero stabilizing product.
    c2_checked: int | None = None
    c2_ok: bool | None = None
    if total <= _C2_LIMIT and stab.tuples is not None:
        member = {s.entries for s in stab.tuples}
        c2_checked = 0
        c2_ok = True
        for mu_digits in _cartesian(range(dim), repeat=n):
            c2_checked += 1
            mu = ModTuple(dim, mu_digits)
            zexp = [0] * n
            for l, m_exp in enumerate(mu_digits):
                if m_exp:
                    row = graph.gamma[l]
                    for m in range(n):
                        if row[m]:
                            zexp[m] = (zexp[m] - m_exp * row[m]) % dim
            candidate = PauliProduct(dim, 0, mu_digits, tuple(zexp))
            phases = {
                apply_pauli_symbolic(graph, candidate, c)[1]
                for c in code.codewords
            }
            if len(phases) == 1 and mu.entries not in member:
                c2_ok = False
                if len(violations) < 16:
                    violations.append(
                        f"undeclared stabilizing product with X exponent "
                        f"{label_str(mu)}: {pauli_string(candidate)}"
                    )

    passed = (
        order_identity_ok
        and c1_ok
        and group_ok
        and c3_ok is not False
        and c2_ok is not False
    )
    return StabilizerReport(
        passed=passed,
        order=stab.order,
        order_identity_ok=order_identity_ok,
        c1_checked=c1_checked,
        c1_ok=c1_ok,
        group_checked=group_checked,
        group_ok=group_ok,
        c3_count=c3_count,
        c3_ok=c3_ok,
        c2_checked=c2_checked,
        c2_ok=c2_ok,
        sampled=sampled,
        violations=tuple(violations),
    )
