"""Clique kernel: pure path, compiled path, and their exact agreement.

A subset brute force over small random graphs provides the ground truth;
the two backends must then agree not just on clique size but on members
and node counts, since they promise identical branch order.
"""

import random

import pytest

from qgc._kernels import BACKEND, pack_masks, solve_max_clique
from qgc._kernels import _pure


def make_masks(rng: random.Random, n: int, p: float) -> list[int]:
    masks = [0] * n
    for a in range(n):
        for b in range(a + 1, n):
            if rng.random() < p:
                masks[a] |= 1 << b
                masks[b] |= 1 << a
    return masks


def brute_max_clique_size(masks: list[int]) -> int:
    n = len(masks)
    best = 0
    for sub in range(1 << n):
        vs = [i for i in range(n) if sub >> i & 1]
        if len(vs) <= best:
            continue
        if all(masks[a] >> b & 1 for a in vs for b in vs if a != b):
            best = len(vs)
    return best


def is_clique(masks: list[int], members: list[int]) -> bool:
    return all(
        masks[a] >> b & 1 for a in members for b in members if a != b
    )


class TestPure:
    def test_empty_graph(self):
        assert _pure.solve_max_clique([]) == ([], True, 0)

    def test_edgeless_picks_lowest_vertex(self):
        members, proven, _ = _pure.solve_max_clique([0, 0, 0])
        assert members == [0]
        assert proven

    def test_triangle_with_isolated_vertex(self):
        masks = [0b0110, 0b0101, 0b0011, 0b0000]
        members, proven, _ = _pure.solve_max_clique(masks)
        assert members == [0, 1, 2]
        assert proven

    def test_tie_resolves_to_lowest_labels(self):
        # Two disjoint triangles; ascending branch order finds {0,1,2} first.
        masks = [0b000110, 0b000101, 0b000011, 0b110000, 0b101000, 0b011000]
        members, proven, _ = _pure.solve_max_clique(masks)
        assert members == [0, 1, 2]

    def test_upper_bound_zero(self):
        assert _pure.solve_max_clique([0b10, 0b01], upper_bound=0) == ([], True, 0)

    def test_upper_bound_early_exit(self):
        masks = [0b0110, 0b0101, 0b0011, 0b0000]
        members, proven, nodes = _pure.solve_max_clique(masks, upper_bound=3)
        assert len(members) == 3
        assert proven

    def test_against_brute_force(self):
        rng = random.Random(7)
        for _ in range(60):
            n = rng.randint(0, 12)
            masks = make_masks(rng, n, rng.choice([0.2, 0.5, 0.8]))
            members, proven, _ = _pure.solve_max_clique(masks)
            assert proven
            assert is_clique(masks, members)
            assert sorted(members) == members
            assert len(members) == brute_max_clique_size(masks)

    def test_budget_abort(self):
        # Dense 48-vertex graph explores far more than one deadline interval.
        rng = random.Random(11)
        masks = make_masks(rng, 48, 0.9)
        members, proven, nodes = _pure.solve_max_clique(
            masks, budget_seconds=1e-9
        )
        assert not proven
        assert nodes == _pure.CHECK_INTERVAL
        assert is_clique(masks, members)


class TestDispatch:
    def test_backend_is_reported(self):
        assert BACKEND in ("cython", "pure")

    def test_pack_masks_layout(self):
        blob = pack_masks([0b10, 0b01], 2)
        assert blob == (2).to_bytes(8, "little") + (1).to_bytes(8, "little")
        assert len(pack_masks([0] * 3, 70)) == 3 * 16

    def test_dispatch_matches_pure(self):
        rng = random.Random(23)
        for _ in range(40):
            n = rng.randint(0, 13)
            masks = make_masks(rng, n, rng.choice([0.3, 0.6, 0.9]))
            assert solve_max_clique(masks) == _pure.solve_max_clique(masks)

    def test_dispatch_matches_pure_with_bound(self):
        rng = random.Random(29)
        for _ in range(20):
            n = rng.randint(1, 13)
            masks = make_masks(rng, n, 0.7)
            for ub in (1, 2, 3):
                got = solve_max_clique(masks, upper_bound=ub)
                want = _pure.solve_max_clique(masks, upper_bound=ub)
                assert got == want


@pytest.mark.skipif(BACKEND != "cython", reason="compiled extension not built")
class TestCompiled:
    def test_node_counts_match_exactly(self):
        from qgc._kernels import _fast

        rng = random.Random(31)
        for _ in range(30):
            n = rng.randint(1, 60)
            masks = make_masks(rng, n, 0.5)
            blob = pack_masks(masks, n)
            got = _fast.solve_max_clique(blob, n, -1, 0.0)
            want = _pure.solve_max_clique(masks)
            assert list(got[0]) == want[0]
            assert bool(got[1]) == want[1]
            assert got[2] == want[2]

    def test_multiword_masks(self):
        # 70 vertices forces two 64-bit words per row.
        rng = random.Random(37)
        masks = make_masks(rng, 70, 0.3)
        members, proven, nodes = solve_max_clique(masks)
        assert proven
        assert is_clique(masks, members)
        assert (members, proven, nodes) == tuple(_pure.solve_max_clique(masks))
