"""Exhaustive ground-truth verifiers for the wedge and octant conditions.

`verify` checks the planar condition: for every canonical wedge holding at
least m points, the first m of them (in time order) must carry at least d
distinct colors.  Checking only the size-m time-prefix suffices because
wedge contents at later times are supersets.

`verify3d` checks the 3D octant condition directly and shares no traversal
code with `verify`, so the pair can test the planar/3D equivalence.
"""
from __future__ import annotations

from bisect import bisect_right, insort
from dataclasses import dataclass
from typing import Sequence, Union

from .core import OctantApex, OrderedPointSet, Point3, WedgeApex


@dataclass(frozen=True)
class Violation:
    apex: Union[WedgeApex, OctantApex]
    time: int
    witness: tuple[int, ...]  # point ids
    distinct_colors_found: int


class Coloring:
    """Total map from point ids to colors."""

    __slots__ = ("assignment",)

    def __init__(self, assignment: dict):
        self.assignment = dict(assignment)

    def __getitem__(self, point_id: int):
        return self.assignment[point_id]

    def __contains__(self, point_id: int) -> bool:
        return point_id in self.assignment

    def __len__(self) -> int:
        return len(self.assignment)

    def __eq__(self, other) -> bool:
        return isinstance(other, Coloring) and self.assignment == other.assignment

    def __repr__(self) -> str:
        return f"Coloring({self.assignment!r})"

    def colors_used(self) -> set:
        return set(self.assignment.values())


def _check_total(ids, coloring: Coloring) -> None:
    missing = [i for i in ids if i not in coloring]
    if missing:
        raise ValueError(f"coloring is not total: missing ids {missing}")


def verify(
    opset: OrderedPointSet, coloring: Coloring, m: int, d: int
) -> list[Violation]:
    """Return all canonical-apex violations of the (m, d) wedge condition.

    Empty list means Ok.  Sweeps apexes column by column: for each x-rank a
    in ascending order the contained points grow, and within a column the
    first-m-by-time window is maintained incrementally while b ascends.
    """
    if not (m >= d >= 1):
        raise ValueError("require m >= d >= 1")
    pts = opset.points
    n = len(pts)
    _check_total((p.id for p in pts), coloring)
    if m > n:
        return []
    xs = sorted(p.x for p in pts)
    ys = sorted(p.y for p in pts)
    by_x = sorted(range(n), key=lambda i: pts[i].x)
    col_y: list[tuple[int, int]] = []  # (y, time-position), sorted by y
    xi = 0
    violations: list[Violation] = []
    for a in xs:
        while xi < n and pts[by_x[xi]].x <= a:
            pos = by_x[xi]
            insort(col_y, (pts[pos].y, pos))
            xi += 1
        first: list[int] = []  # time-positions of the m earliest, sorted
        count = 0
        j = 0
        dirty = True
        bad: int | None = None
        for b in ys:
            while j < len(col_y) and col_y[j][0] <= b:
                pos = col_y[j][1]
                j += 1
                count += 1
                if len(first) < m:
                    insort(first, pos)
                    dirty = True
                elif pos < first[-1]:
                    first.pop()
                    insort(first, pos)
                    dirty = True
            if count >= m:
                if dirty:
                    seen = {coloring[pts[p].id] for p in first}
                    bad = len(seen) if len(seen) < d else None
                    dirty = False
                if bad is not None:
                    violations.append(
                        Violation(
                            apex=WedgeApex(a, b),
                            time=pts[first[-1]].time,
                            witness=tuple(pts[p].id for p in first),
                            distinct_colors_found=bad,
                        )
                    )
    violations.sort(key=lambda v: (v.apex.a, v.apex.b))
    return violations


def verify3d(
    points: Sequence[Point3], coloring: Coloring, m: int, d: int
) -> list[Violation]:
    """Return all canonical-apex violations of the (m, d) octant condition.

    For every apex (a, b, c) drawn from the per-axis ranks: if the closed
    octant holds at least m points, those points must carry at least d
    distinct colors.  Independent of `verify` by construction.
    """
    if not (m >= d >= 1):
        raise ValueError("require m >= d >= 1")
    pts = list(points)
    _check_total((p.id for p in pts), coloring)
    xs = sorted(p.x for p in pts)
    ys = sorted(p.y for p in pts)
    zs = sorted(p.z for p in pts)
    violations: list[Violation] = []
    for a in xs:
        for b in ys:
            sub = sorted(
                (p for p in pts if p.x <= a and p.y <= b), key=lambda p: p.z
            )
            if len(sub) < m:
                continue
            # distinct-color counts over z-prefixes of the contained set
            seen: set = set()
            distinct = []
            for p in sub:
                seen.add(coloring[p.id])
                distinct.append(len(seen))
            length = 0
            for c in zs:
                while length < len(sub) and sub[length].z <= c:
                    length += 1
                if length >= m and distinct[length - 1] < d:
                    violations.append(
                        Violation(
                            apex=OctantApex(a, b, c),
                            time=length,
                            witness=tuple(p.id for p in sub[:length]),
                            distinct_colors_found=distinct[length - 1],
                        )
                    )
    violations.sort(key=lambda v: (v.apex.a1, v.apex.a2, v.apex.a3))
    return violations


def empirical_min_threshold(opset: OrderedPointSet, coloring: Coloring, d: int) -> int:
    """Smallest m in [d, n+1] with verify(opset, coloring, m, d) == Ok.

    n+1 means the condition only holds vacuously, at sizes above n.
    Computed in one sweep: a wedge whose d-th distinct color first appears
    at position m0 of its trace (or never, with trace size cnt) forces
    m >= m0 (resp. m >= cnt + 1).
    """
    if d < 1:
        raise ValueError("require d >= 1")
    pts = opset.points
    n = len(pts)
    _check_total((p.id for p in pts), coloring)
    xs = sorted(p.x for p in pts)
    ys = sorted(p.y for p in pts)
    by_x = sorted(range(n), key=lambda i: pts[i].x)
    col_y: list[tuple[int, int]] = []
    xi = 0
    ans = d
    for a in xs:
        while xi < n and pts[by_x[xi]].x <= a:
            pos = by_x[xi]
            insort(col_y, (pts[pos].y, pos))
            xi += 1
        positions: list[int] = []  # Q's time-positions, sorted
        color_min: dict = {}  # color -> min time-position in Q
        j = 0
        for b in ys:
            changed = False
            while j < len(col_y) and col_y[j][0] <= b:
                pos = col_y[j][1]
                j += 1
                insort(positions, pos)
                c = coloring[pts[pos].id]
                if c not in color_min or pos < color_min[c]:
                    color_min[c] = pos
                changed = True
            if changed and positions:
                cnt = len(positions)
                mins = sorted(color_min.values())
                if len(mins) < d:
                    req = cnt + 1
                else:
                    req = bisect_right(positions, mins[d - 1])
                if req > ans:
                    ans = req
    return ans
