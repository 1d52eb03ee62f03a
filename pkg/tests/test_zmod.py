"""Arithmetic over Z_D^n, spans, diagonalization, and duals.

The independent oracle here is plain brute force: enumerate all of Z_D^n
and filter.  Everything zmod computes cleverly must agree with it.
"""

import itertools
import random

import pytest

from qgc.errors import CapacityError, DimensionMismatchError, InvalidScalarError
from qgc.zmod import (
    GeneratorMatrix,
    ModTuple,
    add_tuples,
    diagonalize,
    dot,
    dual_generators,
    label_str,
    neg_tuple,
    parse_label,
    scale_tuple,
    solve_dual,
    span,
    sub_tuples,
)

from conftest import mt


def brute_span(rows, dim, n):
    """All linear combinations, by trying every coefficient vector."""
    if not rows:
        return {(0,) * n}
    out = set()
    for coeffs in itertools.product(range(dim), repeat=len(rows)):
        t = [0] * n
        for c, row in zip(coeffs, rows):
            for l in range(n):
                t[l] = (t[l] + c * row[l]) % dim
        out.add(tuple(t))
    return out


def brute_dual(members, dim, n):
    """All s orthogonal to every member, by scanning Z_dim^n."""
    out = set()
    for s in itertools.product(range(dim), repeat=n):
        if all(sum(a * b for a, b in zip(s, c)) % dim == 0 for c in members):
            out.add(s)
    return out


class TestModTuple:
    def test_roundtrip_index(self):
        t = mt(3, "120")
        assert t.index == 1 * 9 + 2 * 3 + 0
        assert ModTuple.from_index(3, 3, t.index) == t

    def test_index_is_lexicographic(self):
        all_tuples = sorted(
            ModTuple(3, digits) for digits in itertools.product(range(3), repeat=2)
        )
        assert [t.index for t in all_tuples] == list(range(9))

    def test_entry_validation(self):
        with pytest.raises(InvalidScalarError):
            ModTuple(2, (0, 2))
        with pytest.raises(ValueError):
            ModTuple(1, (0,))

    def test_arithmetic(self):
        a, b = mt(3, "12"), mt(3, "22")
        assert add_tuples(a, b) == mt(3, "01")
        assert sub_tuples(a, b) == mt(3, "20")
        assert neg_tuple(a) == mt(3, "21")
        assert a + b == mt(3, "01") and a - b == mt(3, "20") and -a == mt(3, "21")
        assert scale_tuple(2, a) == mt(3, "21")
        assert dot(a, b) == (1 * 2 + 2 * 2) % 3

    def test_mismatch_raises(self):
        with pytest.raises(DimensionMismatchError):
            add_tuples(mt(2, "01"), mt(3, "01"))
        with pytest.raises(DimensionMismatchError):
            dot(mt(2, "01"), mt(2, "011"))
        with pytest.raises(InvalidScalarError):
            scale_tuple(3, mt(3, "01"))

    def test_label_str_roundtrip(self):
        assert label_str(mt(3, "120")) == "120"
        assert parse_label(3, 3, "120") == mt(3, "120")
        wide = ModTuple(12, (0, 11, 3))
        assert label_str(wide) == "0,11,3"
        assert parse_label(12, 3, "0,11,3") == wide


class TestSpan:
    def test_single_row_order_six(self):
        # One row (2, 3) over Z_6 generates a cyclic group of order 6.
        gens = GeneratorMatrix.from_entries(6, [(2, 3)])
        elems = span(gens)
        assert len(elems) == 6
        assert {e.entries for e in elems} == brute_span([(2, 3)], 6, 2)

    def test_empty_is_trivial(self):
        gens = GeneratorMatrix.from_rows([], dim=3, length=2)
        assert span(gens) == (ModTuple.zero(3, 2),)

    def test_random_agrees_with_brute_force(self):
        rng = random.Random(7)
        for _ in range(40):
            dim = rng.choice([2, 3, 4, 6])
            n = rng.randint(1, 4)
            rows = [
                tuple(rng.randrange(dim) for _ in range(n))
                for _ in range(rng.randint(0, 3))
            ]
            gens = GeneratorMatrix.from_entries(dim, rows, length=n)
            got = {e.entries for e in span(gens)}
            assert got == brute_span(rows, dim, n)

    def test_sorted_ascending(self):
        gens = GeneratorMatrix.from_entries(2, [(1, 0, 1), (0, 1, 1)])
        elems = span(gens)
        assert list(elems) == sorted(elems)

    def test_cap_enforced(self):
        gens = GeneratorMatrix.from_entries(2, [(1, 0, 0), (0, 1, 0), (0, 0, 1)])
        with pytest.raises(CapacityError):
            span(gens, cap=4)


class TestDiagonalize:
    @staticmethod
    def _apply_column_ops(rows, ops, dim):
        m = [list(r) for r in rows]
        for op in ops:
            if op[0] == "swap":
                _, i, j = op
                for row in m:
                    row[i], row[j] = row[j], row[i]
            elif op[0] == "addmul":
                _, i, j, k = op
                for row in m:
                    row[i] = (row[i] + k * row[j]) % dim
            else:
                _, i, u = op
                for row in m:
                    row[i] = (row[i] * u) % dim
        return m

    def test_random_forms_are_diagonal_and_reachable(self):
        # The recorded column ops, plus some row mixing, must explain the
        # diagonal: check span preservation and the diagonal shape.
        rng = random.Random(11)
        for _ in range(60):
            dim = rng.choice([2, 3, 4, 6, 8])
            n = rng.randint(1, 4)
            nrows = rng.randint(0, 4)
            rows = [
                tuple(rng.randrange(dim) for _ in range(n)) for _ in range(nrows)
            ]
            gens = GeneratorMatrix.from_entries(dim, rows, length=n)
            form = diagonalize(gens)
            assert len(form.diagonal) == n
            # span order must match the brute-force span size
            assert form.span_order() == len(brute_span(rows, dim, n))
            # column ops applied to the original rows must give a matrix
            # whose row span equals the diagonal's row span
            transformed = self._apply_column_ops(rows, form.column_ops, dim)
            diag_rows = [
                tuple(form.diagonal[l] if j == l else 0 for j in range(n))
                for l in range(n)
            ]
            assert brute_span(transformed, dim, n) == brute_span(diag_rows, dim, n)

    def test_orders_multiply_to_total(self):
        rng = random.Random(13)
        for _ in range(30):
            dim = rng.choice([2, 3, 6])
            n = rng.randint(1, 3)
            rows = [
                tuple(rng.randrange(dim) for _ in range(n))
                for _ in range(rng.randint(0, 3))
            ]
            form = diagonalize(GeneratorMatrix.from_entries(dim, rows, length=n))
            assert form.span_order() * form.dual_order() == dim**n


class TestSolveDual:
    def test_even_weight_dual(self):
        # C = span{11111} over Z_2; S is the 16 even-weight tuples.
        gens = GeneratorMatrix.from_entries(2, [(1, 1, 1, 1, 1)])
        dual = solve_dual(gens)
        assert len(dual) == 16
        assert all(sum(s.entries) % 2 == 0 for s in dual)

    def test_trivial_code_dual_is_everything(self):
        gens = GeneratorMatrix.from_rows([], dim=3, length=2)
        dual = solve_dual(gens)
        assert len(dual) == 9

    def test_random_agrees_with_brute_force(self):
        rng = random.Random(17)
        for _ in range(60):
            dim = rng.choice([2, 3, 4, 6])
            n = rng.randint(1, 4)
            rows = [
                tuple(rng.randrange(dim) for _ in range(n))
                for _ in range(rng.randint(0, 3))
            ]
            members = brute_span(rows, dim, n)
            gens = GeneratorMatrix.from_entries(dim, rows, length=n)
            got = {s.entries for s in solve_dual(gens)}
            assert got == brute_dual(members, dim, n)

    def test_double_dual_restores_span(self):
        rng = random.Random(19)
        for _ in range(40):
            dim = rng.choice([2, 3, 4, 6])
            n = rng.randint(1, 4)
            rows = [
                tuple(rng.randrange(dim) for _ in range(n))
                for _ in range(rng.randint(0, 3))
            ]
            gens = GeneratorMatrix.from_entries(dim, rows, length=n)
            dual = solve_dual(gens)
            back = solve_dual(GeneratorMatrix.from_rows(dual, dim=dim, length=n))
            assert {s.entries for s in back} == brute_span(rows, dim, n)

    def test_generators_span_the_dual(self):
        rng = random.Random(23)
        for _ in range(40):
            dim = rng.choice([2, 3, 4, 6])
            n = rng.randint(1, 4)
            rows = [
                tuple(rng.randrange(dim) for _ in range(n))
                for _ in range(rng.randint(0, 3))
            ]
            gens = GeneratorMatrix.from_entries(dim, rows, length=n)
            dual_gens, order = dual_generators(gens)
            spanned = {s.entries for s in span(dual_gens)}
            assert len(spanned) == order
            assert spanned == brute_dual(brute_span(rows, dim, n), dim, n)

    def test_cap_enforced(self):
        gens = GeneratorMatrix.from_rows([], dim=2, length=10)
        with pytest.raises(CapacityError):
            solve_dual(gens, cap=512)

    def test_order_identity(self):
        # |C| * |S| = dim**n for any generator matrix.
        rng = random.Random(29)
        for _ in range(30):
            dim = rng.choice([2, 3, 4, 6])
            n = rng.randint(1, 4)
            rows = [
                tuple(rng.randrange(dim) for _ in range(n))
                for _ in range(rng.randint(0, 3))
            ]
            gens = GeneratorMatrix.from_entries(dim, rows, length=n)
            c_size = len(brute_span(rows, dim, n))
            s_size = len(solve_dual(gens))
            assert c_size * s_size == dim**n
