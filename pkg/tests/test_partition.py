import pytest

from octcover.core import OrderedPoint2, OrderedPointSet
from octcover.partition import build_partition, owned_set

from conftest import random_opset


def opset(*coords):
    return OrderedPointSet(
        OrderedPoint2(x, y, time=t, id=t - 1) for (x, y, t) in coords
    )


def test_single_point_important():
    part = build_partition(opset((1, 1, 1)))
    assert [p.id for p in part.important] == [0]
    assert part.owner == {}


def test_dominated_points_owned_by_first():
    part = build_partition(opset((1, 1, 1), (3, 3, 2), (2, 2, 3)))
    assert [p.id for p in part.important] == [0]
    assert part.owner == {1: 0, 2: 0}


def test_mutually_incomparable_all_important():
    part = build_partition(opset((3, 1, 1), (1, 3, 2), (2, 2, 3)))
    assert [p.id for p in part.important] == [0, 1, 2]
    assert part.owner == {}


def test_owned_set_time_order():
    part = build_partition(opset((1, 1, 1), (3, 3, 2), (2, 2, 3)))
    assert [p.id for p in owned_set(part, 0)] == [1, 2]


def test_owned_set_empty_region():
    part = build_partition(opset((3, 1, 1), (1, 3, 2), (2, 2, 3)))
    assert owned_set(part, 0) == ()


def test_owned_set_chain():
    part = build_partition(opset((1, 1, 1), (2, 2, 2), (3, 3, 3)))
    assert [p.id for p in owned_set(part, 0)] == [1, 2]


def test_owned_set_unknown_point():
    part = build_partition(opset((1, 1, 1), (2, 2, 2)))
    with pytest.raises(KeyError):
        owned_set(part, 1)


def test_partition_property(rng):
    # every point is important xor owned; owners are strictly SW and earlier
    for _ in range(25):
        s = random_opset(rng.randint(1, 30), rng)
        part = build_partition(s)
        by_id = {p.id: p for p in s.points}
        important_ids = {p.id for p in part.important}
        for p in s.points:
            assert (p.id in important_ids) != (p.id in part.owner)
        for pid, oid in part.owner.items():
            p, o = by_id[pid], by_id[oid]
            assert o.x < p.x and o.y < p.y
            assert o.time < p.time
        # no important point strictly NE of an earlier important point
        for i, p in enumerate(part.important):
            for q in part.important[:i]:
                assert not (q.x < p.x and q.y < p.y)


def test_owner_is_time_minimal_dominating_important(rng):
    for _ in range(25):
        s = random_opset(rng.randint(2, 25), rng)
        part = build_partition(s)
        by_id = {p.id: p for p in s.points}
        for pid, oid in part.owner.items():
            p = by_id[pid]
            dominating = [
                q for q in part.important if q.x < p.x and q.y < p.y and q.time < p.time
            ]
            assert min(dominating, key=lambda q: q.time).id == oid


def test_prefix_consistency(rng):
    # the algorithm is online: partitioning a time-prefix restricts the full run
    for _ in range(10):
        s = random_opset(rng.randint(2, 20), rng)
        full = build_partition(s)
        for t in range(1, len(s) + 1):
            prefix = OrderedPointSet(p for p in s.points if p.time <= t)
            part = build_partition(prefix)
            ids = {p.id for p in prefix.points}
            assert [p.id for p in part.important] == [
                p.id for p in full.important if p.id in ids
            ]
            assert part.owner == {
                k: v for k, v in full.owner.items() if k in ids
            }


def test_determinism(rng):
    s = random_opset(20, rng)
    assert build_partition(s) == build_partition(s)
