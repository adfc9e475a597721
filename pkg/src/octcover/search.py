"""Exact exploration of minimal thresholds for weak polychromatic colorings.

For a set, c colors and a distinctness demand d, the minimal feasible
threshold is the smallest m such that some c-coloring makes every wedge
holding at least m points show at least d distinct colors among its
earliest m.  Feasibility is decided by exact backtracking; the sweep
driver aggregates the value over instance families.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .coloring import BudgetExhausted, DEFAULT_NODE_BUDGET, wedge_prefixes
from .core import OrderedPoint2, OrderedPointSet, RawPoint3
from .verify import Coloring, verify


def search_coloring(
    opset: OrderedPointSet,
    num_colors: int,
    m: int,
    d: int,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> Coloring | None:
    """Find a c-coloring passing verify(m, d), or None if none exists.

    Exhaustive backtracking in time order with prefix-window pruning and
    color-symmetry breaking (point i may only open one fresh color).
    """
    if node_budget <= 0:
        raise ValueError("node_budget must be positive")
    pts = opset.points
    n = len(pts)
    if m > n:
        return Coloring({p.id: 1 for p in pts})
    if m < d:
        return None  # some wedge prefix of size m < d can never show d colors
    triggers: list[list[tuple[int, ...]]] = [[] for _ in range(n)]
    for pref in wedge_prefixes(opset, m):
        triggers[pref[-1]].append(pref)
    assign: list[int] = [0] * n
    nodes = 0

    def consistent(i: int) -> bool:
        for pref in triggers[i]:
            if len({assign[p] for p in pref}) < d:
                return False
        return True

    def dfs(i: int, max_used: int) -> bool:
        nonlocal nodes
        if i == n:
            return True
        for c in range(1, min(num_colors, max_used + 1) + 1):
            nodes += 1
            if nodes > node_budget:
                raise BudgetExhausted(f"search exceeded {node_budget} nodes")
            assign[i] = c
            if consistent(i) and dfs(i + 1, max(max_used, c)):
                return True
        assign[i] = 0
        return False

    if dfs(0, 0):
        return Coloring({pts[i].id: assign[i] for i in range(n)})
    return None


@dataclass(frozen=True)
class ThresholdResult:
    m: int
    witness: Coloring


def find_min_threshold(
    opset: OrderedPointSet,
    c: int,
    d: int,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> ThresholdResult:
    """Minimal feasible m with a certified witness coloring.

    Ascends m from d; every smaller m is proved infeasible by exhaustion
    before moving on, and the witness is re-verified before returning.
    """
    if not (c >= d >= 1):
        raise ValueError("require c >= d >= 1")
    n = len(opset)
    for m in range(d, n + 1):
        witness = search_coloring(opset, c, m, d, node_budget)
        if witness is not None:
            if verify(opset, witness, m, d):
                raise RuntimeError("witness failed re-verification")
            return ThresholdResult(m=m, witness=witness)
    # all m in [d, n] infeasible; m = max(d, n + 1) passes vacuously
    m = max(d, n + 1)
    return ThresholdResult(m=m, witness=Coloring({p.id: 1 for p in opset.points}))


def min_feasible_threshold(
    opset: OrderedPointSet,
    c: int,
    d: int,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> int:
    return find_min_threshold(opset, c, d, node_budget).m


def _from_perms(xperm: Sequence[int], yperm: Sequence[int]) -> OrderedPointSet:
    return OrderedPointSet(
        OrderedPoint2(x=xperm[t], y=yperm[t], time=t + 1, id=t)
        for t in range(len(xperm))
    )


def exhaustive_instances(n_max: int) -> Iterator[tuple[str, OrderedPointSet]]:
    """All rank configurations up to n_max, x-permutation fixed to identity.

    Wedge traces only depend on per-axis orders, and relabeling by time
    makes the x-permutation the identity without loss of generality.
    """
    for n in range(1, n_max + 1):
        identity = list(range(1, n + 1))
        for yperm in itertools.permutations(identity):
            name = f"n{n}-y" + "".join(str(v) for v in yperm)
            yield name, _from_perms(identity, list(yperm))


def random_instances(
    n: int, count: int, seed: int
) -> Iterator[tuple[str, OrderedPointSet]]:
    rng = random.Random(seed)
    for idx in range(count):
        xperm = list(range(1, n + 1))
        yperm = list(range(1, n + 1))
        rng.shuffle(xperm)
        rng.shuffle(yperm)
        yield f"random-n{n}-{idx}", _from_perms(xperm, yperm)


def family_instances(n_max: int) -> Iterator[tuple[str, OrderedPointSet]]:
    for n in range(1, n_max + 1):
        inc = list(range(1, n + 1))
        dec = list(range(n, 0, -1))
        yield f"chain-n{n}", _from_perms(inc, inc)
        yield f"antichain-n{n}", _from_perms(inc, dec)


@dataclass(frozen=True)
class SweepEntry:
    instance_id: str
    n: int
    min_threshold: int
    opset: OrderedPointSet
    witness: Coloring


@dataclass(frozen=True)
class SweepReport:
    entries: tuple[SweepEntry, ...]
    max_threshold: int
    argmax_id: str


def sweep(
    instances: Iterator[tuple[str, OrderedPointSet]],
    c: int,
    d: int,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> SweepReport:
    """Max and argmax of the minimal feasible threshold over instances."""
    entries: list[SweepEntry] = []
    for name, opset in instances:
        res = find_min_threshold(opset, c, d, node_budget)
        entries.append(
            SweepEntry(
                instance_id=name,
                n=len(opset),
                min_threshold=res.m,
                opset=opset,
                witness=res.witness,
            )
        )
    if not entries:
        raise ValueError("no instances generated")
    best = max(entries, key=lambda e: e.min_threshold)
    return SweepReport(
        entries=tuple(entries),
        max_threshold=best.min_threshold,
        argmax_id=best.instance_id,
    )


def opset_to_raw(opset: OrderedPointSet) -> list[RawPoint3]:
    """Lift a planar ordered set back to 3D (time becomes the z coordinate)."""
    return [
        RawPoint3(Fraction(p.x), Fraction(p.y), Fraction(p.time), id=p.id)
        for p in opset.points
    ]
