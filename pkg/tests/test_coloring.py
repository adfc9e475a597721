import pytest

from octcover.coloring import (
    BudgetExhausted,
    ExhaustiveTwoColorer,
    Palette,
    base_two_color_search,
    closed_form_bound,
    color_set,
    threshold,
)
from octcover.core import OrderedPoint2, OrderedPointSet
from octcover.verify import Coloring, verify

from conftest import chain_opset, random_opset
from oracles import all_two_colorings_passing


class TestThreshold:
    def test_values(self):
        assert threshold(1) == 1
        assert threshold(2) == 12
        assert threshold(3) == 19009

    def test_recurrence_oracle(self):
        # independent big-integer evaluation of the recurrence
        m = 12
        for k in range(3, 9):
            m = 144 * (m * m - m) + 1
            assert threshold(k) == m

    def test_domain_error(self):
        with pytest.raises(ValueError):
            threshold(0)
        with pytest.raises(ValueError):
            threshold(-3)


class TestClosedFormBound:
    def test_values(self):
        assert closed_form_bound(2) == 12
        assert closed_form_bound(3) == 12**4 == 20736
        assert closed_form_bound(4) == 12**10 == 61917364224

    def test_domain_error(self):
        with pytest.raises(ValueError):
            closed_form_bound(1)

    def test_dominates_threshold(self):
        for k in range(2, 9):
            assert threshold(k) <= closed_form_bound(k)


class TestPalette:
    def test_needs_colors(self):
        with pytest.raises(ValueError):
            Palette(())

    def test_rejects_duplicates(self):
        with pytest.raises(ValueError):
            Palette((1, 1))


class TestBaseTwoColorSearch:
    def test_single_point(self):
        opset = chain_opset(1)
        col = base_two_color_search(opset, 1, 2)
        assert col[0] in (1, 2)

    def test_small_sets_vacuous(self, rng):
        for n in (3, 7, 11):
            opset = random_opset(n, rng)
            col = base_two_color_search(opset, 1, 2)
            assert set(col.assignment) == {p.id for p in opset.points}
            assert verify(opset, col, 12, 2) == []

    def test_twelve_chain_not_monochromatic(self):
        opset = chain_opset(12)
        col = base_two_color_search(opset, 1, 2)
        assert len(col.colors_used()) == 2
        passing = all_two_colorings_passing(opset, 12, 2)
        assert col in passing

    def test_budget_exhaustion(self):
        opset = chain_opset(13)
        with pytest.raises(BudgetExhausted):
            base_two_color_search(opset, 1, 2, node_budget=1)

    def test_deterministic(self, rng):
        opset = random_opset(20, rng)
        assert base_two_color_search(opset, 1, 2) == base_two_color_search(
            opset, 1, 2
        )


class TestColorSet:
    def test_single_point(self):
        opset = chain_opset(1)
        col = color_set(opset, (1, 2, 3))
        assert col[0] in (1, 2, 3)

    def test_single_color_palette(self, rng):
        opset = random_opset(6, rng)
        col = color_set(opset, (7,))
        assert col.colors_used() == {7}

    def test_owned_points_differ_from_owner(self):
        opset = OrderedPointSet(
            [
                OrderedPoint2(1, 1, 1, 0),
                OrderedPoint2(3, 3, 2, 1),
                OrderedPoint2(2, 2, 3, 2),
            ]
        )
        col = color_set(opset, (1, 2, 3))
        assert col[1] != col[0]
        assert col[2] != col[0]

    def test_owned_differs_property(self, rng):
        from octcover.partition import build_partition

        for _ in range(10):
            opset = random_opset(rng.randint(2, 40), rng)
            col = color_set(opset, (1, 2, 3))
            part = build_partition(opset)
            for pid, oid in part.owner.items():
                assert col[pid] != col[oid]

    def test_no_sentinel_in_output(self, rng):
        for k in (3, 4):
            opset = random_opset(25, rng)
            col = color_set(opset, tuple(range(1, k + 1)))
            assert col.colors_used() <= set(range(1, k + 1))

    def test_guarantee_at_threshold(self, rng):
        # wedges holding threshold(k) points of any prefix see all k colors
        for k in (1, 2, 3, 4):
            for _ in range(3):
                opset = random_opset(rng.randint(1, 30), rng)
                col = color_set(opset, tuple(range(1, k + 1)))
                assert verify(opset, col, max(threshold(k), k), k) == []

    def test_two_color_delegates_to_base(self, rng):
        calls = []

        class Recorder:
            def two_color(self, opset, a, b):
                calls.append((len(opset), a, b))
                return base_two_color_search(opset, a, b)

        opset = random_opset(8, rng)
        color_set(opset, (5, 9), Recorder())
        assert calls == [(8, 5, 9)]

    def test_deterministic(self, rng):
        opset = random_opset(30, rng)
        assert color_set(opset, (1, 2, 3)) == color_set(opset, (1, 2, 3))

    def test_empty_set_rejected(self):
        with pytest.raises(ValueError):
            color_set(OrderedPointSet([]), (1, 2))


def test_exhaustive_two_colorer_satisfies_contract(rng):
    base = ExhaustiveTwoColorer()
    for _ in range(5):
        opset = random_opset(rng.randint(12, 25), rng)
        col = base.two_color(opset, 1, 2)
        assert verify(opset, col, 12, 2) == []
