"""Pauli product algebra against an explicit matrix oracle.

The oracle builds literal dim**n x dim**n matrices for X, Z, and their
products, so multiplication, inversion, and commutation phases are checked
against raw linear algebra with no shared code.
"""

import itertools
import math
import random

import numpy as np
import pytest

from qgc.errors import DimensionMismatchError, InvalidScalarError
from qgc.pauli import (
    PauliProduct,
    commutation_exponent,
    enumerate_by_size,
    inverse,
    multiply,
    pauli_string,
    size_and_base,
)


def x_matrix(dim):
    """X|j> = |j-1 mod dim>."""
    m = np.zeros((dim, dim), dtype=complex)
    for j in range(dim):
        m[(j - 1) % dim, j] = 1
    return m


def z_matrix(dim):
    omega = np.exp(2j * math.pi / dim)
    return np.diag([omega**j for j in range(dim)])


def dense(p: PauliProduct) -> np.ndarray:
    """The literal matrix of w^phase X^mu Z^nu via Kronecker products."""
    omega = np.exp(2j * math.pi / p.dim)
    out = np.array([[omega**p.phase]])
    for mu, nu in zip(p.xexp, p.zexp):
        factor = np.linalg.matrix_power(x_matrix(p.dim), mu) @ np.linalg.matrix_power(
            z_matrix(p.dim), nu
        )
        out = np.kron(out, factor)
    return out


def random_product(rng, dim, n):
    return PauliProduct(
        dim,
        rng.randrange(dim),
        tuple(rng.randrange(dim) for _ in range(n)),
        tuple(rng.randrange(dim) for _ in range(n)),
    )


class TestNormalForm:
    def test_zx_reorder_phase(self):
        # Z * X over Z_3: the X must move left across the Z, costing w^-1.
        z = PauliProduct.single(3, 1, 0, 0, 1)
        x = PauliProduct.single(3, 1, 0, 1, 0)
        zx = multiply(z, x)
        assert (zx.phase, zx.xexp, zx.zexp) == (2, (1,), (1,))
        xz = multiply(x, z)
        assert (xz.phase, xz.xexp, xz.zexp) == (0, (1,), (1,))

    def test_exponents_wrap(self):
        x2 = PauliProduct.single(3, 1, 0, 2, 0)
        sq = multiply(x2, x2)
        assert (sq.phase, sq.xexp) == (0, (1,))

    def test_validation(self):
        with pytest.raises(DimensionMismatchError):
            PauliProduct(2, 0, (0, 1), (0,))
        with pytest.raises(InvalidScalarError):
            PauliProduct(2, 2, (0,), (0,))
        with pytest.raises(DimensionMismatchError):
            multiply(PauliProduct.identity(2, 1), PauliProduct.identity(3, 1))

    def test_multiply_matches_matrices(self, rng):
        for _ in range(80):
            dim = rng.choice([2, 3, 4, 5])
            n = rng.randint(1, 3)
            p, q = random_product(rng, dim, n), random_product(rng, dim, n)
            got = dense(multiply(p, q))
            expect = dense(p) @ dense(q)
            assert np.allclose(got, expect, atol=1e-9)

    def test_inverse_matches_matrices(self, rng):
        for _ in range(60):
            dim = rng.choice([2, 3, 4, 6])
            n = rng.randint(1, 3)
            p = random_product(rng, dim, n)
            assert multiply(p, inverse(p)).is_identity()
            assert multiply(inverse(p), p).is_identity()
            got = dense(inverse(p))
            expect = np.linalg.inv(dense(p))
            assert np.allclose(got, expect, atol=1e-9)


class TestCommutation:
    def test_x_vs_z_single_qudit(self):
        x = PauliProduct.single(5, 1, 0, 1, 0)
        z = PauliProduct.single(5, 1, 0, 0, 1)
        assert commutation_exponent(x, z) == 1
        assert commutation_exponent(z, x) == 4

    def test_antisymmetry_and_reorder_identity(self, rng):
        for _ in range(60):
            dim = rng.choice([2, 3, 4, 6])
            n = rng.randint(1, 3)
            p, q = random_product(rng, dim, n), random_product(rng, dim, n)
            c = commutation_exponent(p, q)
            assert (c + commutation_exponent(q, p)) % dim == 0
            pq, qp = multiply(p, q), multiply(q, p)
            assert (pq.xexp, pq.zexp) == (qp.xexp, qp.zexp)
            assert (pq.phase - qp.phase) % dim == c

    def test_matches_matrices(self, rng):
        for _ in range(40):
            dim = rng.choice([2, 3, 4])
            n = rng.randint(1, 2)
            p, q = random_product(rng, dim, n), random_product(rng, dim, n)
            c = commutation_exponent(p, q)
            omega = np.exp(2j * math.pi / dim)
            lhs = dense(p) @ dense(q)
            rhs = (omega**c) * (dense(q) @ dense(p))
            assert np.allclose(lhs, rhs, atol=1e-9)


class TestEnumeration:
    def test_size_and_base(self):
        p = PauliProduct(3, 1, (0, 2, 0, 1), (0, 0, 1, 0))
        assert size_and_base(p) == (3, (1, 2, 3))
        assert size_and_base(PauliProduct.identity(2, 4)) == (0, ())

    def test_counts(self):
        count = sum(1 for _ in enumerate_by_size(2, 16, 3))
        assert count == math.comb(16, 3) * 3**3
        assert count == 15120
        count = sum(1 for _ in enumerate_by_size(3, 4, 2))
        assert count == math.comb(4, 2) * 8**2

    def test_all_distinct_and_right_size(self):
        seen = set()
        for p in enumerate_by_size(3, 3, 2):
            assert size_and_base(p)[0] == 2
            assert p.phase == 0
            seen.add((p.xexp, p.zexp))
        assert len(seen) == math.comb(3, 2) * 8**2

    def test_order_is_deterministic(self):
        first = list(itertools.islice(enumerate_by_size(2, 3, 1), 4))
        assert [(p.xexp, p.zexp) for p in first] == [
            ((0, 0, 0), (1, 0, 0)),
            ((1, 0, 0), (0, 0, 0)),
            ((1, 0, 0), (1, 0, 0)),
            ((0, 0, 0), (0, 1, 0)),
        ]


class TestRendering:
    def test_identity(self):
        assert pauli_string(PauliProduct.identity(3, 2)) == "I"
        assert pauli_string(PauliProduct(3, 2, (0, 0), (0, 0))) == "w^2 I"

    def test_factors_in_vertex_order(self):
        p = PauliProduct(3, 1, (2, 0, 1), (1, 0, 0))
        assert pauli_string(p) == "w^1 X1^2 Z1 X3"

    def test_exponent_one_omitted(self):
        p = PauliProduct(5, 0, (0, 1), (0, 3))
        assert pauli_string(p) == "X2 Z2^3"
