"""Dense state-vector reference implementation.

Everything here builds literal complex vectors and checks properties
numerically, with no reliance on the symbolic label machinery.  It exists
to cross-check that machinery and to verify codes directly against the
error-correction conditions; sizes are capped because vectors of length
dim**n are only affordable at small n.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

import numpy as np

from .codes import GraphCode
from .errors import CapacityError
from .graphs import Graph
from .pauli import PauliProduct, enumerate_by_size, pauli_string
from .zmod import ModTuple

#: Default cap on dim**n for dense work; QGC_MEM_CAP overrides.
DEFAULT_ORACLE_CAP = 1 << 14

#: Numerical tolerance for all dense comparisons.
TOLERANCE = 1e-9


def oracle_cap() -> int:
    value = os.environ.get("QGC_MEM_CAP")
    return int(value) if value else DEFAULT_ORACLE_CAP


@dataclass(frozen=True)
class DenseState:
    """A normalized n-qudit state vector in the computational basis."""

    dim: int
    n: int
    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        if self.amplitudes.shape != (self.dim**self.n,):
            raise ValueError(
                f"amplitude vector has shape {self.amplitudes.shape}, "
                f"expected ({self.dim**self.n},)"
            )


def _check_cap(dim: int, n: int) -> int:
    total = dim**n
    if total > oracle_cap():
        raise CapacityError(
            f"dense vector of {total} amplitudes exceeds the oracle cap "
            f"{oracle_cap()} (QGC_MEM_CAP raises it)"
        )
    return total


def digit_matrix(dim: int, n: int) -> np.ndarray:
    """Row i holds the digits of basis index i, vertex 1 most significant."""
    total = dim**n
    idx = np.arange(total, dtype=np.int64)
    digits = np.empty((total, n), dtype=np.int64)
    for l in range(n - 1, -1, -1):
        digits[:, l] = idx % dim
        idx //= dim
    return digits


def build_graph_state(graph: Graph) -> DenseState:
    """|G> from the closed form: amplitude of |j> is
    dim**(-n/2) * w^(sum_{l<m} Gamma_lm j_l j_m)."""
    dim, n = graph.dim, graph.n
    total = _check_cap(dim, n)
    digits = digit_matrix(dim, n)
    quad = np.zeros(total, dtype=np.int64)
    for l, m, w in graph.edges():
        quad += w * digits[:, l] * digits[:, m]
    omega = np.exp(2j * math.pi / dim)
    amps = omega ** (quad % dim) / dim ** (n / 2)
    return DenseState(dim, n, amps.astype(np.complex128))


def apply_pauli_dense(p: PauliProduct, state: DenseState) -> DenseState:
    """Literal action: (P psi)[k] = w^(lambda + nu . (k + mu)) psi[k + mu].

    X lowers a ket digit (X|j> = |j-1>), so the amplitude landing on index
    k is sourced from the digitwise-raised index k + mu.
    """
    if p.dim != state.dim or p.n != state.n:
        raise ValueError("product and state disagree on dim or n")
    dim, n = state.dim, state.n
    digits = digit_matrix(dim, n)
    omega = np.exp(2j * math.pi / dim)
    src_digits = (digits + np.array(p.xexp, dtype=np.int64)) % dim
    powers = dim ** np.arange(n - 1, -1, -1, dtype=np.int64)
    src = src_digits @ powers
    zdot = (src_digits @ np.array(p.zexp, dtype=np.int64)) % dim
    amps = (omega**p.phase) * (omega**zdot) * state.amplitudes[src]
    return DenseState(dim, n, amps)


def graph_basis_state(graph: Graph, a: ModTuple) -> DenseState:
    """|a> = Z^a |G>."""
    z = PauliProduct(graph.dim, 0, (0,) * graph.n, a.entries)
    return apply_pauli_dense(z, build_graph_state(graph))


def inner(left: DenseState, right: DenseState) -> complex:
    """<left|right>."""
    return complex(np.vdot(left.amplitudes, right.amplitudes))


def basis_matrix(graph: Graph) -> np.ndarray:
    """Column a.index is the graph basis state |a>; unitary of size dim**n."""
    dim, n = graph.dim, graph.n
    total = _check_cap(dim, n)
    digits = digit_matrix(dim, n)
    omega = np.exp(2j * math.pi / dim)
    base = build_graph_state(graph).amplitudes
    phases = (digits @ digits.T) % dim
    return base[:, None] * omega**phases


@dataclass(frozen=True)
class KLViolation:
    pauli: str
    q: int
    r: int
    value: complex


@dataclass(frozen=True)
class KLReport:
    """Outcome of the error-correction condition check."""

    passed: bool
    nondegenerate: bool
    delta: int
    products_checked: int
    max_offdiagonal: float
    max_diagonal_spread: float
    max_f_magnitude: float
    violations: tuple[KLViolation, ...]


def kl_verify(
    code: GraphCode, delta: int | None = None, tol: float = TOLERANCE
) -> KLReport:
    """Check <c_q| Q |c_r> = f(Q) delta_qr for every product of size < delta.

    Builds the codeword states densely and tests all phase-free products
    (phases only scale f, so they never affect the condition).  The code is
    reported nondegenerate when every f(Q) is zero within tolerance.
    """
    delta = code.delta if delta is None else delta
    graph = code.graph
    dim, n = code.dim, code.n
    total = _check_cap(dim, n)
    digits = digit_matrix(dim, n)
    omega = np.exp(2j * math.pi / dim)
    base = build_graph_state(graph).amplitudes
    words = np.array([c.entries for c in code.codewords], dtype=np.int64)
    # Column q is the state |c_q>.
    cw = base[:, None] * omega ** ((digits @ words.T) % dim)

    powers = dim ** np.arange(n - 1, -1, -1, dtype=np.int64)
    checked = 0
    max_off = 0.0
    max_spread = 0.0
    max_f = 0.0
    violations: list[KLViolation] = []
    eye = np.eye(code.K, dtype=bool)
    for size in range(1, delta):
        for q_op in enumerate_by_size(dim, n, size):
            checked += 1
            src_digits = (digits + np.array(q_op.xexp, dtype=np.int64)) % dim
            src = src_digits @ powers
            zdot = (src_digits @ np.array(q_op.zexp, dtype=np.int64)) % dim
            transformed = (omega**zdot)[:, None] * cw[src, :]
            overlap = cw.conj().T @ transformed
            f_value = complex(np.trace(overlap) / code.K)
            off = float(np.abs(overlap[~eye]).max()) if code.K > 1 else 0.0
            spread = float(np.abs(np.diagonal(overlap) - f_value).max())
            max_off = max(max_off, off)
            max_spread = max(max_spread, spread)
            max_f = max(max_f, abs(f_value))
            if off > tol or spread > tol:
                bad = np.abs(overlap - f_value * np.eye(code.K)) > tol
                qs, rs = np.nonzero(bad)
                for qq, rr in list(zip(qs, rs))[:4]:
                    if len(violations) < 16:
                        violations.append(
                            KLViolation(
                                pauli_string(q_op),
                                int(qq),
                                int(rr),
                                complex(overlap[qq, rr]),
                            )
                        )
    return KLReport(
        passed=not violations,
        nondegenerate=max_f <= tol,
        delta=delta,
        products_checked=checked,
        max_offdiagonal=max_off,
        max_diagonal_spread=max_spread,
        max_f_magnitude=max_f,
        violations=tuple(violations),
    )
