"""Generalized Pauli products on n qudits with exact phase bookkeeping.

A product is stored in the normal form  w^phase * X^xexp * Z^zexp  where
``w`` is the primitive dim-th root of unity exp(2*pi*i/dim), ``xexp`` and
``zexp`` are exponent tuples in Z_dim^n, and all X factors stand left of
all Z factors.  The single-qudit relations are

    X Z = w Z X,      X|j> = |j - 1 mod dim>,      Z|j> = w^j |j>,

so reordering  Z^a X^b -> X^b Z^a  costs a phase of w^(-a*b).  Every phase
in this module is an integer exponent of w; nothing is ever floating point.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .errors import DimensionMismatchError, InvalidScalarError


@dataclass(frozen=True)
class PauliProduct:
    """w^phase * prod_l X_l^xexp[l] * prod_l Z_l^zexp[l] on n qudits."""

    dim: int
    phase: int
    xexp: tuple[int, ...]
    zexp: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.dim < 2:
            raise ValueError(f"dimension must be >= 2, got {self.dim}")
        if not isinstance(self.xexp, tuple):
            object.__setattr__(self, "xexp", tuple(self.xexp))
        if not isinstance(self.zexp, tuple):
            object.__setattr__(self, "zexp", tuple(self.zexp))
        if len(self.xexp) != len(self.zexp):
            raise DimensionMismatchError(
                f"xexp length {len(self.xexp)} != zexp length {len(self.zexp)}"
            )
        if len(self.xexp) == 0:
            raise ValueError("qudit count must be >= 1")
        if not 0 <= self.phase < self.dim:
            raise InvalidScalarError(
                f"phase {self.phase} outside residue range [0, {self.dim - 1}]"
            )
        for e in itertools.chain(self.xexp, self.zexp):
            if not 0 <= e < self.dim:
                raise InvalidScalarError(
                    f"exponent {e} outside residue range [0, {self.dim - 1}]"
                )

    @property
    def n(self) -> int:
        return len(self.xexp)

    @classmethod
    def identity(cls, dim: int, n: int) -> "PauliProduct":
        return cls(dim, 0, (0,) * n, (0,) * n)

    @classmethod
    def single(cls, dim: int, n: int, qudit: int, xe: int, ze: int) -> "PauliProduct":
        """X^xe Z^ze acting on one 0-indexed qudit."""
        if not 0 <= qudit < n:
            raise ValueError(f"qudit {qudit} out of range for n={n}")
        xexp = [0] * n
        zexp = [0] * n
        xexp[qudit] = xe % dim
        zexp[qudit] = ze % dim
        return cls(dim, 0, tuple(xexp), tuple(zexp))

    def is_identity(self) -> bool:
        return self.phase == 0 and not any(self.xexp) and not any(self.zexp)


def _check_same_system(p: PauliProduct, q: PauliProduct) -> None:
    if p.dim != q.dim:
        raise DimensionMismatchError(f"dimensions differ: {p.dim} vs {q.dim}")
    if p.n != q.n:
        raise DimensionMismatchError(f"qudit counts differ: {p.n} vs {q.n}")


def multiply(p: PauliProduct, q: PauliProduct) -> PauliProduct:
    """The normal form of p * q (p applied after q).

    Moving q's X block left across p's Z block picks up w^(-zexp_p . xexp_q).
    """
    _check_same_system(p, q)
    d = p.dim
    cross = sum(a * b for a, b in zip(p.zexp, q.xexp))
    phase = (p.phase + q.phase - cross) % d
    xexp = tuple((a + b) % d for a, b in zip(p.xexp, q.xexp))
    zexp = tuple((a + b) % d for a, b in zip(p.zexp, q.zexp))
    return PauliProduct(d, phase, xexp, zexp)


def inverse(p: PauliProduct) -> PauliProduct:
    """The product q with q * p = p * q = identity (phase included)."""
    d = p.dim
    corr = sum(a * b for a, b in zip(p.zexp, p.xexp))
    phase = (-p.phase - corr) % d
    xexp = tuple((-a) % d for a in p.xexp)
    zexp = tuple((-a) % d for a in p.zexp)
    return PauliProduct(d, phase, xexp, zexp)


def commutation_exponent(p: PauliProduct, q: PauliProduct) -> int:
    """The integer c with p q = w^c q p.

    Equal to zexp_q . xexp_p - zexp_p . xexp_q mod dim; antisymmetric in
    its arguments, and zero exactly when the two products commute.
    """
    _check_same_system(p, q)
    forward = sum(a * b for a, b in zip(q.zexp, p.xexp))
    backward = sum(a * b for a, b in zip(p.zexp, q.xexp))
    return (forward - backward) % p.dim


def size_and_base(p: PauliProduct) -> tuple[int, tuple[int, ...]]:
    """Number of qudits acted on nontrivially, and their sorted 0-indexed set."""
    base = tuple(
        l for l in range(p.n) if p.xexp[l] or p.zexp[l]
    )
    return len(base), base


def enumerate_by_size(dim: int, n: int, size: int) -> Iterator[PauliProduct]:
    """All phase-free products of exactly the given size, in a fixed order.

    Yields C(n, size) * (dim**2 - 1)**size products: every size-subset of
    qudits, each carrying one of the dim**2 - 1 nonidentity single-qudit
    factors X^a Z^b.
    """
    if not 0 <= size <= n:
        raise ValueError(f"size {size} out of range for n={n}")
    if size == 0:
        yield PauliProduct.identity(dim, n)
        return
    factors = [
        (a, b) for a in range(dim) for b in range(dim) if (a, b) != (0, 0)
    ]
    for base in itertools.combinations(range(n), size):
        for choice in itertools.product(factors, repeat=size):
            xexp = [0] * n
            zexp = [0] * n
            for l, (a, b) in zip(base, choice):
                xexp[l] = a
                zexp[l] = b
            yield PauliProduct(dim, 0, tuple(xexp), tuple(zexp))


def pauli_string(p: PauliProduct) -> str:
    """Render in the text grammar: ``w^2 X1^2 Z1 X4``, identity as ``I``.

    Qudits are 1-indexed and emitted in order, X factor before Z factor on
    each; exponents equal to 1 are omitted; a leading ``w^k`` appears only
    when the phase k is nonzero.
    """
    parts: list[str] = []
    if p.phase:
        parts.append(f"w^{p.phase}")
    for l in range(p.n):
        if p.xexp[l]:
            parts.append(f"X{l + 1}" + (f"^{p.xexp[l]}" if p.xexp[l] != 1 else ""))
        if p.zexp[l]:
            parts.append(f"Z{l + 1}" + (f"^{p.zexp[l]}" if p.zexp[l] != 1 else ""))
    if len(parts) == (1 if p.phase else 0):
        parts.append("I")
    return " ".join(parts)
