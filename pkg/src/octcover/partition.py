"""Partition an ordered planar point set into important points and owned sets.

Processing points in time order, a point is important when no earlier
important point lies strictly SW of it; otherwise it is owned by the
earliest important point strictly SW of it.  Regions are never
materialized: the "earliest dominating important point" rule decides
membership exactly.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .core import OrderedPoint2, OrderedPointSet


@dataclass(frozen=True)
class Partition:
    important: tuple[OrderedPoint2, ...]
    owner: dict[int, int]  # point id -> id of the owning important point
    _owned: dict[int, tuple[OrderedPoint2, ...]] = field(repr=False)

    def is_important(self, point_id: int) -> bool:
        return any(p.id == point_id for p in self.important)


def build_partition(opset: OrderedPointSet) -> Partition:
    """Run the online partitioning pass over the points in time order."""
    important: list[OrderedPoint2] = []
    owner: dict[int, int] = {}
    owned: dict[int, list[OrderedPoint2]] = {}
    for q in opset.points:
        best = None
        for p in important:  # time order, so first hit is the earliest
            if p.x < q.x and p.y < q.y:
                best = p
                break
        if best is None:
            important.append(q)
            owned[q.id] = []
        else:
            owner[q.id] = best.id
            owned[best.id].append(q)
    return Partition(
        important=tuple(important),
        owner=owner,
        _owned={k: tuple(v) for k, v in owned.items()},
    )


def owned_set(partition: Partition, p: OrderedPoint2 | int) -> tuple[OrderedPoint2, ...]:
    """Points owned by the important point p, in time order."""
    pid = p.id if isinstance(p, OrderedPoint2) else p
    try:
        return partition._owned[pid]
    except KeyError:
        raise KeyError(f"point {pid} is not an important point") from None
