"""Primal side: decompose multi-fold octant covers into k coverings.

Dualization: a target x lies in the octant with apex a iff the dual point
-a lies in the octant with apex -x.  Coloring the dual points therefore
splits the octants into classes, and a target covered by at least
threshold(k) octants is covered by every class.

The triangle correspondence maps homothets of the base right triangle
T0 = {(u, v) : u <= 0, v <= 0, u + v >= -1} to octants via lifting plane
points (u, v) to (u, v, -u-v).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .coloring import Base2Contract, color_set, threshold
from .core import OctantApex, Point3, RawPoint3, Scalar, project
from .verify import Coloring


class DecompositionError(RuntimeError):
    """The produced decomposition violates the coverage guarantee."""


@dataclass(frozen=True)
class CoverInstance:
    apexes: tuple[OctantApex, ...]  # octant translates, identified by index
    targets: tuple[RawPoint3, ...]  # the finite covered set

    def __post_init__(self):
        if not self.apexes:
            raise ValueError("cover must contain at least one octant")
        if not self.targets:
            raise ValueError("cover must contain at least one target")


@dataclass(frozen=True)
class TriangleHomothet:
    """A positively scaled translate of T0, given by its right-angle corner."""

    corner_u: Fraction
    corner_v: Fraction
    scale: Fraction

    def __post_init__(self):
        if self.scale <= 0:
            raise ValueError("homothety scale must be positive")


@dataclass(frozen=True)
class Decomposition:
    class_of: dict[int, int]  # octant index -> class in 1..k


def octant_contains(apex: OctantApex, target: RawPoint3) -> bool:
    return target.x <= apex.a1 and target.y <= apex.a2 and target.z <= apex.a3


def coverage_count(cover: CoverInstance, target_index: int) -> int:
    """Number of octants containing the target (closed containment)."""
    t = cover.targets[target_index]
    return sum(1 for a in cover.apexes if octant_contains(a, t))


def _joint_ranks(
    dual_coords: Sequence[tuple[Scalar, Scalar, Scalar]],
    target_coords: Sequence[tuple[Scalar, Scalar, Scalar]],
) -> tuple[list[tuple[int, int, int]], list[tuple[int, int, int]]]:
    """Rank dual points and negated targets jointly on each axis.

    Tie rule: on equal values a dual point ranks below a negated target,
    so closed primal containment (target <= apex) survives rank reduction.
    Among dual points (or among targets) ties break by index.
    """
    nd, nt = len(dual_coords), len(target_coords)
    dual_ranks = [[0, 0, 0] for _ in range(nd)]
    target_ranks = [[0, 0, 0] for _ in range(nt)]
    for axis in range(3):
        entries = [(c[axis], 0, i) for i, c in enumerate(dual_coords)]
        entries += [(c[axis], 1, i) for i, c in enumerate(target_coords)]
        entries.sort()
        for r, (_, group, i) in enumerate(entries, start=1):
            (dual_ranks if group == 0 else target_ranks)[i][axis] = r
    return (
        [tuple(r) for r in dual_ranks],
        [tuple(r) for r in target_ranks],
    )


def decompose_cover(
    cover: CoverInstance, k: int, base: Base2Contract | None = None
) -> Decomposition:
    """Split the octants into classes 1..k via the dual point coloring.

    Every target covered by at least threshold(k) octants is covered by
    all k classes; this is re-checked on every run and a failure raises
    DecompositionError.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    dual = [(-a.a1, -a.a2, -a.a3) for a in cover.apexes]
    neg_targets = [(-t.x, -t.y, -t.z) for t in cover.targets]
    dual_ranks, _ = _joint_ranks(dual, neg_targets)
    dual_points = [Point3(*r, id=i) for i, r in enumerate(dual_ranks)]
    if k == 1:
        decomp = Decomposition({i: 1 for i in range(len(cover.apexes))})
    else:
        coloring = color_set(project(dual_points), tuple(range(1, k + 1)), base)
        decomp = Decomposition(dict(coloring.assignment))
    _check_guarantee(cover, decomp, k)
    return decomp


def _classes_covering(cover: CoverInstance, decomp: Decomposition, ti: int) -> set[int]:
    t = cover.targets[ti]
    return {
        decomp.class_of[i]
        for i, a in enumerate(cover.apexes)
        if octant_contains(a, t)
    }


def _check_guarantee(cover: CoverInstance, decomp: Decomposition, k: int) -> None:
    thr = threshold(k)
    for ti in range(len(cover.targets)):
        if coverage_count(cover, ti) >= thr:
            classes = _classes_covering(cover, decomp, ti)
            if len(classes) < k:
                raise DecompositionError(
                    f"target {ti} has coverage >= {thr} but misses classes "
                    f"{set(range(1, k + 1)) - classes}"
                )


def min_full_coverage(cover: CoverInstance, decomp: Decomposition, k: int) -> int:
    """Smallest c such that every target covered >= c times sees all k classes.

    Empirical tightness report for a decomposition run; 1 when every
    target already sees all classes.
    """
    worst = 0
    for ti in range(len(cover.targets)):
        if len(_classes_covering(cover, decomp, ti)) < k:
            worst = max(worst, coverage_count(cover, ti) + 1)
    return max(1, worst)


def triangle_to_octant(t: TriangleHomothet) -> OctantApex:
    """Octant apex whose dominance trace matches triangle membership.

    A plane point (u, v) lies in the homothet iff its lift
    (u, v, -u-v) is coordinatewise <= the returned apex.
    """
    return OctantApex(t.corner_u, t.corner_v, t.scale - t.corner_u - t.corner_v)


def triangle_contains(t: TriangleHomothet, u: Scalar, v: Scalar) -> bool:
    """Direct 2D membership test (closed), independent of the lift."""
    return (
        u <= t.corner_u
        and v <= t.corner_v
        and u + v >= t.corner_u + t.corner_v - t.scale
    )


def lift_target(u: Scalar, v: Scalar, idx: int) -> RawPoint3:
    return RawPoint3(Fraction(u), Fraction(v), Fraction(-u - v), id=idx)


def decompose_triangle_cover(
    homothets: Sequence[TriangleHomothet],
    targets2d: Sequence[tuple[Scalar, Scalar]],
    k: int,
    base: Base2Contract | None = None,
) -> Decomposition:
    """Decompose a cover by homothets of T0 via the octant reduction."""
    if not homothets or not targets2d:
        raise ValueError("homothets and targets must be nonempty")
    cover = CoverInstance(
        apexes=tuple(triangle_to_octant(h) for h in homothets),
        targets=tuple(lift_target(u, v, i) for i, (u, v) in enumerate(targets2d)),
    )
    return decompose_cover(cover, k, base)
