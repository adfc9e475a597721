"""The graph of wedge-isolable point pairs and its 4-coloring.

Two points are adjacent iff some wedge contains exactly those two points
at some time.  Equivalently: the minimal wedge of the pair holds no third
point of the time-prefix up to the later arrival.  The graph is planar,
so a proper 4-coloring exists, and that coloring makes every wedge with
at least 2 points bichromatic.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .coloring import ColoringError
from .core import OrderedPointSet
from .verify import Coloring, Violation, verify


@dataclass(frozen=True)
class WedgeGraph:
    n: int
    ids: tuple[int, ...]  # vertex ids (point ids)
    edges: frozenset[tuple[int, int]]  # unordered id pairs, stored sorted

    def __post_init__(self):
        idset = set(self.ids)
        for u, v in self.edges:
            if u == v:
                raise ValueError("self-loop")
            if u not in idset or v not in idset:
                raise ValueError("edge endpoint is not a vertex")


def build_wedge_graph(opset: OrderedPointSet) -> WedgeGraph:
    """Connect pairs whose minimal wedge is empty at the later arrival time."""
    pts = opset.points
    n = len(pts)
    x = np.fromiter((p.x for p in pts), dtype=np.int64, count=n)
    y = np.fromiter((p.y for p in pts), dtype=np.int64, count=n)
    edges = set()
    for j in range(1, n):
        # points with time-position <= j are exactly pts[: j + 1]
        ax = np.maximum(x[:j], x[j])
        ay = np.maximum(y[:j], y[j])
        inside = (x[: j + 1, None] <= ax[None, :]) & (y[: j + 1, None] <= ay[None, :])
        counts = inside.sum(axis=0)
        for i in np.nonzero(counts == 2)[0]:
            u, v = pts[int(i)].id, pts[j].id
            edges.add((min(u, v), max(u, v)))
    return WedgeGraph(n=n, ids=tuple(p.id for p in pts), edges=frozenset(edges))


def four_color(graph: WedgeGraph) -> Coloring:
    """Proper vertex coloring with colors 1..4 by exact backtracking.

    Vertices are picked most-saturated-first.  Failure would contradict
    planarity of the wedge graph, so it raises instead of returning.
    """
    ids = list(graph.ids)
    index = {v: i for i, v in enumerate(ids)}
    n = len(ids)
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in graph.edges:
        adj[index[u]].add(index[v])
        adj[index[v]].add(index[u])
    colors: list[int] = [0] * n

    def pick() -> int:
        best, best_key = -1, (-1, -1)
        for i in range(n):
            if colors[i]:
                continue
            sat = len({colors[j] for j in adj[i] if colors[j]})
            key = (sat, len(adj[i]))
            if key > best_key:
                best, best_key = i, key
        return best

    def dfs(assigned: int) -> bool:
        if assigned == n:
            return True
        i = pick()
        used = {colors[j] for j in adj[i] if colors[j]}
        for c in (1, 2, 3, 4):
            if c in used:
                continue
            colors[i] = c
            if dfs(assigned + 1):
                return True
        colors[i] = 0
        return False

    if n and not dfs(0):
        raise ColoringError(
            "no 4-coloring found; this contradicts planarity of the wedge graph"
        )
    return Coloring({v: colors[index[v]] for v in ids})


def verify_weak(opset: OrderedPointSet, coloring: Coloring) -> list[Violation]:
    """Check that every wedge with at least 2 points sees 2 distinct colors."""
    return verify(opset, coloring, m=2, d=2)
