"""Exact geometric ground layer.

Rank-space reduction of 3D point sets, projection to ordered planar sets,
wedge/octant containment, and canonical apex enumeration.  All predicates
are exact: coordinates are integers (ranks) or rationals, never floats.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class RawPoint3:
    """An input point with exact rational coordinates and its input index."""

    x: Fraction
    y: Fraction
    z: Fraction
    id: int


@dataclass(frozen=True)
class Point3:
    """A rank-reduced 3D point: per-axis ranks are distinct within a set."""

    x: int
    y: int
    z: int
    id: int


@dataclass(frozen=True)
class OrderedPoint2:
    """A projected planar point: x/y ranks plus the arrival time (z-rank)."""

    x: int
    y: int
    time: int
    id: int


@dataclass(frozen=True)
class WedgeApex:
    """Apex of a wedge: the closed dominance region {p : p.x <= a, p.y <= b}."""

    a: int
    b: int


@dataclass(frozen=True)
class OctantApex:
    """Apex of an octant: the closed region {p : p <= apex coordinatewise}."""

    a1: Scalar
    a2: Scalar
    a3: Scalar


class OrderedPointSet:
    """Planar points with distinct x-ranks, distinct y-ranks and distinct times.

    Points are stored sorted by time.  Subsets of a larger set keep their
    original ranks and times, so times are required to be distinct and
    increasing but not necessarily 1..n.
    """

    __slots__ = ("points",)

    def __init__(self, points: Iterable[OrderedPoint2]):
        pts = tuple(sorted(points, key=lambda p: p.time))
        if len({p.x for p in pts}) != len(pts):
            raise ValueError("x ranks must be distinct")
        if len({p.y for p in pts}) != len(pts):
            raise ValueError("y ranks must be distinct")
        if len({p.time for p in pts}) != len(pts):
            raise ValueError("times must be distinct")
        self.points = pts

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __eq__(self, other) -> bool:
        return isinstance(other, OrderedPointSet) and self.points == other.points

    def __repr__(self) -> str:
        return f"OrderedPointSet({list(self.points)!r})"

    def subset(self, points: Iterable[OrderedPoint2]) -> "OrderedPointSet":
        return OrderedPointSet(points)


def rank_reduce(points: Sequence[RawPoint3]) -> list[Point3]:
    """Replace coordinates by per-axis ranks (1-based), ties broken by id.

    Later-indexed points get the larger rank on a tied axis.  Dominance
    among untied pairs is preserved exactly, which is all that wedge and
    octant traces depend on.
    """
    if not points:
        raise ValueError("rank_reduce requires a nonempty input")
    ids = [p.id for p in points]
    if len(set(ids)) != len(ids):
        raise ValueError("point ids must be distinct")
    ranks: dict[int, list[int]] = {i: [0, 0, 0] for i in ids}
    for axis, key in enumerate(("x", "y", "z")):
        order = sorted(points, key=lambda p: (getattr(p, key), p.id))
        for r, p in enumerate(order, start=1):
            ranks[p.id][axis] = r
    return [Point3(*ranks[p.id], id=p.id) for p in points]


def project(points: Sequence[Point3]) -> OrderedPointSet:
    """Project to the plane: time of a point is the rank of its z coordinate."""
    if not points:
        raise ValueError("project requires a nonempty input")
    by_z = sorted(points, key=lambda p: p.z)
    return OrderedPointSet(
        OrderedPoint2(x=p.x, y=p.y, time=t, id=p.id)
        for t, p in enumerate(by_z, start=1)
    )


def wedge_contents(
    opset: OrderedPointSet, apex: WedgeApex, t: int
) -> list[OrderedPoint2]:
    """Points of the time-t prefix inside the wedge, in time order."""
    return [
        p for p in opset.points if p.time <= t and p.x <= apex.a and p.y <= apex.b
    ]


def canonical_apexes(opset: OrderedPointSet) -> list[WedgeApex]:
    """All apexes (a, b) with a an x-rank and b a y-rank of the set.

    Every wedge trace on the set equals the trace of one of these n^2
    apexes (snap each coordinate down to the largest rank below it).
    """
    if not len(opset):
        raise ValueError("canonical_apexes requires a nonempty set")
    xs = sorted(p.x for p in opset.points)
    ys = sorted(p.y for p in opset.points)
    return [WedgeApex(a, b) for a in xs for b in ys]


def min_wedge(p: OrderedPoint2, q: OrderedPoint2) -> WedgeApex:
    """Apex of the smallest wedge containing both points."""
    if p == q:
        raise ValueError("min_wedge requires two distinct points")
    return WedgeApex(max(p.x, q.x), max(p.y, q.y))
