"""Recursive polychromatic coloring of ordered planar point sets.

`color_set` implements the recursive scheme: the important points are
colored with one reserved placeholder color, placeholder points are then
2-colored by the pluggable base colorer, and each owned set is colored
recursively with the palette minus its owner's final color.

`threshold(k)` is the guarantee threshold: a wedge with that many points
of any time-prefix contains all k colors in the output of `color_set`.
"""
from __future__ import annotations

from bisect import insort
from dataclasses import dataclass
from typing import Protocol, Sequence

from .core import OrderedPointSet
from .partition import build_partition, owned_set
from .verify import Coloring, verify

DEFAULT_NODE_BUDGET = 10_000_000

BASE_THRESHOLD = 12  # wedge size at which the base 2-colorer must find both colors


class BudgetExhausted(RuntimeError):
    """The backtracking node budget ran out before a verdict was reached."""


class ColoringError(RuntimeError):
    """No valid coloring was found where one is guaranteed to exist."""


@dataclass(frozen=True)
class Palette:
    colors: tuple

    def __post_init__(self):
        if len(self.colors) < 1:
            raise ValueError("palette must have at least one color")
        if len(set(self.colors)) != len(self.colors):
            raise ValueError("palette colors must be distinct")

    def __len__(self) -> int:
        return len(self.colors)

    def __iter__(self):
        return iter(self.colors)

    def __getitem__(self, i):
        return self.colors[i]


class Base2Contract(Protocol):
    """Strategy contract for the base 2-colorer.

    The returned coloring must pass verify(set, coloring, m=12, d=2).
    """

    def two_color(self, opset: OrderedPointSet, color_a, color_b) -> Coloring: ...


class _Red:
    """Reserved placeholder color; never appears in a final coloring."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "<red>"


def threshold(k: int) -> int:
    """Guarantee threshold m(k): m(1)=1, m(2)=12, then the square recurrence."""
    if k <= 0:
        raise ValueError("k must be positive")
    if k == 1:
        return 1
    m = 12
    for _ in range(k - 2):
        m = 144 * (m * m - m) + 1
    return m


def closed_form_bound(k: int) -> int:
    """Closed-form upper bound 12^(2^(k-1) + 2^(k-2) - 2) on threshold(k)."""
    if k <= 1:
        raise ValueError("k must be at least 2")
    return 12 ** (2 ** (k - 1) + 2 ** (k - 2) - 2)


def wedge_prefixes(opset: OrderedPointSet, m: int) -> list[tuple[int, ...]]:
    """Distinct first-m windows of canonical wedges holding >= m points.

    Each window is a sorted tuple of time-positions (indices into the
    time-ordered point list).  These are exactly the constraints a
    coloring must satisfy for verify(m, d) to pass.
    """
    pts = opset.points
    n = len(pts)
    if n < m:
        return []
    xs = sorted(p.x for p in pts)
    ys = sorted(p.y for p in pts)
    by_x = sorted(range(n), key=lambda i: pts[i].x)
    col_y: list[tuple[int, int]] = []
    xi = 0
    out: set[tuple[int, ...]] = set()
    for a in xs:
        while xi < n and pts[by_x[xi]].x <= a:
            pos = by_x[xi]
            insort(col_y, (pts[pos].y, pos))
            xi += 1
        first: list[int] = []
        count = 0
        j = 0
        changed = False
        for b in ys:
            while j < len(col_y) and col_y[j][0] <= b:
                pos = col_y[j][1]
                j += 1
                count += 1
                if len(first) < m:
                    insort(first, pos)
                    changed = True
                elif pos < first[-1]:
                    first.pop()
                    insort(first, pos)
                    changed = True
            if count >= m and changed:
                out.add(tuple(first))
                changed = False
    return sorted(out)


def base_two_color_search(
    opset: OrderedPointSet,
    color_a,
    color_b,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> Coloring:
    """Exhaustive 2-coloring search satisfying the (12, 2) wedge condition.

    Backtracks over the points in time order, pruning any branch in which
    some wedge's earliest-12 window is fully assigned and monochromatic.
    Existence is guaranteed, so running out of search space is a contract
    failure and running out of budget is a resource error.
    """
    if node_budget <= 0:
        raise ValueError("node_budget must be positive")
    pts = opset.points
    n = len(pts)
    prefixes = wedge_prefixes(opset, BASE_THRESHOLD)
    triggers: list[list[tuple[int, ...]]] = [[] for _ in range(n)]
    for pref in prefixes:
        triggers[pref[-1]].append(pref)
    assign: list = [None] * n
    nodes = 0

    def consistent(i: int) -> bool:
        for pref in triggers[i]:
            c0 = assign[pref[0]]
            if all(assign[p] == c0 for p in pref[1:]):
                return False
        return True

    def dfs(i: int) -> bool:
        nonlocal nodes
        if i == n:
            return True
        prev = assign[i - 1] if i else color_b
        order = (color_a, color_b) if prev == color_b else (color_b, color_a)
        for c in order:
            nodes += 1
            if nodes > node_budget:
                raise BudgetExhausted(
                    f"base 2-coloring search exceeded {node_budget} nodes"
                )
            assign[i] = c
            if consistent(i) and dfs(i + 1):
                return True
        assign[i] = None
        return False

    if not dfs(0):
        raise ColoringError(
            "no 2-coloring satisfies the (12, 2) condition; this contradicts "
            "the guarantee for the base case"
        )
    coloring = Coloring({pts[i].id: assign[i] for i in range(n)})
    if verify(opset, coloring, BASE_THRESHOLD, 2):
        raise ColoringError("search produced a coloring that fails verification")
    return coloring


class ExhaustiveTwoColorer:
    """Default Base2Contract implementation backed by base_two_color_search."""

    def __init__(self, node_budget: int = DEFAULT_NODE_BUDGET):
        self.node_budget = node_budget

    def two_color(self, opset: OrderedPointSet, color_a, color_b) -> Coloring:
        return base_two_color_search(opset, color_a, color_b, self.node_budget)


def color_set(
    opset: OrderedPointSet,
    palette: Palette | Sequence,
    base: Base2Contract | None = None,
) -> Coloring:
    """Color the set so every large-enough wedge prefix sees every color.

    With a k-color palette the output satisfies verify(m=threshold(k), d=k).
    The two palette colors temporarily replaced by the placeholder are
    always the last two entries.
    """
    colors = tuple(palette) if not isinstance(palette, Palette) else palette.colors
    Palette(colors)  # validate
    if not len(opset):
        raise ValueError("cannot color an empty set")
    if base is None:
        base = ExhaustiveTwoColorer()
    k = len(colors)
    if k == 1:
        return Coloring({p.id: colors[0] for p in opset.points})
    if k == 2:
        return base.two_color(opset, colors[0], colors[1])

    part = build_partition(opset)
    important = OrderedPointSet(part.important)
    red = _Red()
    s_coloring = color_set(important, colors[: k - 2] + (red,), base)

    final: dict = {}
    red_points = [p for p in part.important if s_coloring[p.id] is red]
    if red_points:
        recolored = base.two_color(
            OrderedPointSet(red_points), colors[k - 2], colors[k - 1]
        )
    else:
        recolored = Coloring({})
    for p in part.important:
        c = s_coloring[p.id]
        final[p.id] = recolored[p.id] if c is red else c

    for p in part.important:
        owned = owned_set(part, p)
        if not owned:
            continue
        sub_palette = tuple(c for c in colors if c != final[p.id])
        final.update(color_set(OrderedPointSet(owned), sub_palette, base).assignment)
    return Coloring(final)
