import random
from itertools import permutations

import pytest

from octcover.core import OrderedPoint2, OrderedPointSet, Point3, WedgeApex, project
from octcover.verify import Coloring, empirical_min_threshold, verify, verify3d

from conftest import chain_opset, random_opset
from oracles import naive_min_threshold, naive_verify_ok


def const_coloring(opset, color=1):
    return Coloring({p.id: color for p in opset.points})


def test_single_point_vacuous():
    opset = chain_opset(1)
    assert verify(opset, const_coloring(opset), 2, 2) == []


def test_monochromatic_chain_violation():
    opset = chain_opset(12)
    violations = verify(opset, const_coloring(opset), 12, 2)
    assert any(v.apex == WedgeApex(12, 12) for v in violations)
    v = violations[-1]
    assert v.distinct_colors_found == 1
    assert len(v.witness) == 12


def test_incomparable_pair_ok():
    opset = OrderedPointSet(
        [OrderedPoint2(1, 2, 1, 0), OrderedPoint2(2, 1, 2, 1)]
    )
    assert verify(opset, Coloring({0: 1, 1: 2}), 2, 2) == []


def test_param_validation():
    opset = chain_opset(2)
    with pytest.raises(ValueError):
        verify(opset, const_coloring(opset), 1, 2)


def test_partial_coloring_rejected():
    opset = chain_opset(3)
    with pytest.raises(ValueError):
        verify(opset, Coloring({0: 1}), 2, 2)


def test_monotonicity(rng):
    for _ in range(20):
        opset = random_opset(rng.randint(2, 12), rng)
        col = Coloring({p.id: rng.randint(1, 3) for p in opset.points})
        n = len(opset)
        for m in range(2, n + 1):
            if not verify(opset, col, m, 2):
                # Ok at (m, d) implies Ok at larger m and smaller d
                assert not verify(opset, col, m + 1, 2)
                assert not verify(opset, col, m, 1)
            if m >= 3 and not verify(opset, col, m, 3):
                assert not verify(opset, col, m, 2)


def test_agrees_with_naive_random(rng):
    for _ in range(60):
        n = rng.randint(1, 7)
        opset = random_opset(n, rng)
        col = Coloring({p.id: rng.randint(1, 2) for p in opset.points})
        for m, d in ((2, 2), (3, 2), (4, 2)):
            assert (not verify(opset, col, m, d)) == naive_verify_ok(
                opset, col, m, d
            )


def test_agrees_with_naive_exhaustive_n3():
    ident = [1, 2, 3]
    for xp in permutations(ident):
        for yp in permutations(ident):
            opset = OrderedPointSet(
                OrderedPoint2(xp[i], yp[i], i + 1, i) for i in range(3)
            )
            for mask in range(8):
                col = Coloring({i: 1 + ((mask >> i) & 1) for i in range(3)})
                for m, d in ((2, 2), (3, 2)):
                    assert (not verify(opset, col, m, d)) == naive_verify_ok(
                        opset, col, m, d
                    )


class TestVerify3d:
    def test_single_point_vacuous(self):
        pts = [Point3(1, 1, 1, 0)]
        assert verify3d(pts, Coloring({0: 1}), 2, 2) == []

    def test_monochromatic_chain(self):
        pts = [Point3(i, i, i, i - 1) for i in range(1, 13)]
        col = Coloring({p.id: 1 for p in pts})
        assert verify3d(pts, col, 12, 2) != []

    def test_matches_planar_verify(self, rng):
        # planar/3D equivalence of the k-good condition
        for _ in range(40):
            n = rng.randint(1, 12)
            perms = [list(range(1, n + 1)) for _ in range(3)]
            for p in perms:
                rng.shuffle(p)
            pts = [Point3(perms[0][i], perms[1][i], perms[2][i], i) for i in range(n)]
            col = Coloring({i: rng.randint(1, 3) for i in range(n)})
            opset = project(pts)
            for m, d in ((2, 2), (3, 3), (5, 2)):
                ok3d = not verify3d(pts, col, m, d)
                ok2d = not verify(opset, col, m, d)
                assert ok3d == ok2d


class TestEmpiricalMinThreshold:
    def test_single_point(self):
        opset = chain_opset(1)
        assert empirical_min_threshold(opset, const_coloring(opset), 2) == 2

    def test_monochromatic_chain(self):
        opset = chain_opset(12)
        assert empirical_min_threshold(opset, const_coloring(opset), 2) == 13

    def test_two_chain_bichromatic(self):
        opset = chain_opset(2)
        assert empirical_min_threshold(opset, Coloring({0: 1, 1: 2}), 2) == 2

    def test_matches_direct_loop(self, rng):
        for _ in range(30):
            n = rng.randint(1, 10)
            opset = random_opset(n, rng)
            col = Coloring({p.id: rng.randint(1, 3) for p in opset.points})
            for d in (1, 2, 3):
                assert empirical_min_threshold(opset, col, d) == naive_min_threshold(
                    opset, col, d
                )
