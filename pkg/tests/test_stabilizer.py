"""Stabilizer lift T_s = w^q(s) X^s Z^(-Gamma s) and its verification."""

import dataclasses

import pytest

from qgc.errors import NotAdditiveError
from qgc.constructions import star_code_odd
from qgc.graphs import Graph, apply_pauli_symbolic, cycle_graph, graph_from_edges
from qgc.pauli import PauliProduct, multiply, pauli_string
from qgc.search import search_code
from qgc.stabilizer import (
    stabilizer_element,
    stabilizer_phase,
    stabilizer_subgroup,
    verify_stabilizer,
)
from qgc.zmod import GeneratorMatrix, ModTuple, dot, solve_dual

from conftest import mt, random_graph

PATH2 = Graph(2, ((0, 1), (1, 0)))


def five_cycle_code():
    return search_code(cycle_graph(5, 2), 3)


class TestElements:
    def test_path_element_form(self):
        t = stabilizer_element(PATH2, mt(2, "11"))
        assert t == PauliProduct(2, 1, (1, 1), (1, 1))
        assert pauli_string(t) == "w^1 X1 Z1 X2 Z2"
        assert stabilizer_phase(PATH2, mt(2, "11")) == 1

    def test_path_element_fixes_its_codewords(self):
        # span{(1,1)} is stabilized with phase exactly zero on both labels.
        t = stabilizer_element(PATH2, mt(2, "11"))
        for a in (mt(2, "00"), mt(2, "11")):
            label, phase = apply_pauli_symbolic(PATH2, t, a)
            assert label == a and phase == 0

    def test_weighted_phase(self):
        g = graph_from_edges(3, 2, [(0, 1, 2)])
        assert stabilizer_phase(g, mt(3, "11")) == 2
        assert stabilizer_phase(g, mt(3, "21")) == 1

    def test_homomorphism_is_exact(self, rng):
        # T_s T_t = T_(s+t) with no phase slack, on random graphs.
        for _ in range(60):
            g = random_graph(rng)
            s = ModTuple(g.dim, tuple(rng.randrange(g.dim) for _ in range(g.n)))
            t = ModTuple(g.dim, tuple(rng.randrange(g.dim) for _ in range(g.n)))
            left = multiply(stabilizer_element(g, s), stabilizer_element(g, t))
            assert left == stabilizer_element(g, s + t)

    def test_every_element_is_diagonal_on_codewords(self, rng):
        # T_s moves |a> to |a> whenever dot(s, a) = 0: phase equals dot(s, a).
        for _ in range(40):
            g = random_graph(rng)
            s = ModTuple(g.dim, tuple(rng.randrange(g.dim) for _ in range(g.n)))
            a = ModTuple(g.dim, tuple(rng.randrange(g.dim) for _ in range(g.n)))
            label, phase = apply_pauli_symbolic(g, stabilizer_element(g, s), a)
            assert label == a
            assert phase == dot(s, a)


class TestSubgroup:
    def test_five_cycle_orders(self):
        code = five_cycle_code()
        assert code.K == 2 and code.additive
        stab = stabilizer_subgroup(code)
        assert stab.order == 16
        assert code.K * stab.order == 2**5
        assert stab.tuples is not None and len(stab.tuples) == 16
        assert stab.elements is not None and len(stab.elements) == 16

    def test_tuples_annihilate_codewords(self):
        code = five_cycle_code()
        stab = stabilizer_subgroup(code)
        for s in stab.tuples:
            for c in code.codewords:
                assert dot(s, c) == 0

    def test_double_dual_restores_codewords(self):
        code = five_cycle_code()
        stab = stabilizer_subgroup(code)
        gm = GeneratorMatrix.from_rows(stab.generators, dim=2, length=5)
        assert solve_dual(gm) == code.codewords

    def test_nonadditive_is_refused(self):
        with pytest.raises(NotAdditiveError):
            stabilizer_subgroup(star_code_odd(5))

    def test_small_cap_skips_materialization(self):
        code = five_cycle_code()
        stab = stabilizer_subgroup(code, cap=4)
        assert stab.order == 16
        assert stab.tuples is None and stab.elements is None
        assert stab.generators  # generators are always available


class TestVerify:
    def test_five_cycle_passes_all_checks(self):
        code = five_cycle_code()
        stab = stabilizer_subgroup(code)
        report = verify_stabilizer(code, stab)
        assert report.passed
        assert report.order_identity_ok
        assert not report.sampled
        assert report.c1_checked == 16 * 2 and report.c1_ok
        assert report.group_checked == 16 * 16 and report.group_ok
        assert report.c3_count == 2 and report.c3_ok
        assert report.c2_checked == 32 and report.c2_ok
        assert report.violations == ()

    def test_trivial_code_has_full_dual(self):
        g = graph_from_edges(2, 3, [(0, 1), (0, 2), (1, 2)])
        code = search_code(g, 2)
        assert code.K == 1
        stab = stabilizer_subgroup(code)
        assert stab.order == 8
        assert [s.entries for s in stab.generators] == [
            (1, 0, 0),
            (0, 1, 0),
            (0, 0, 1),
        ]
        report = verify_stabilizer(code, stab)
        assert report.passed and report.c3_count == 1

    def test_corrupted_phase_is_caught(self):
        code = five_cycle_code()
        stab = stabilizer_subgroup(code)
        bad_elements = list(stab.elements)
        victim = bad_elements[3]
        bad_elements[3] = PauliProduct(
            victim.dim, (victim.phase + 1) % 2, victim.xexp, victim.zexp
        )
        tampered = dataclasses.replace(stab, elements=tuple(bad_elements))
        report = verify_stabilizer(code, tampered)
        assert not report.passed
        assert not report.c1_ok
        assert any("T_s for s=" in v for v in report.violations)

    def test_corrupted_order_is_caught(self):
        code = five_cycle_code()
        stab = stabilizer_subgroup(code)
        report = verify_stabilizer(code, dataclasses.replace(stab, order=32))
        assert not report.passed
        assert not report.order_identity_ok
        assert any("K * |S|" in v for v in report.violations)

    def test_sampled_mode_still_passes(self):
        code = five_cycle_code()
        stab = stabilizer_subgroup(code, cap=4)
        report = verify_stabilizer(code, stab)
        assert report.passed
        assert report.sampled
        assert report.c2_checked is None and report.c2_ok is None
        assert report.c3_count == 2  # the label scan needs no materialization
