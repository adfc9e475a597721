"""Plain-text instance formats and deterministic instance generators.

Point files hold one point per line, ``x y z`` as decimal rationals
(``p/q`` allowed), with ``#`` comments.  Cover files have ``[octants]``
and ``[targets]`` sections; triangle files have ``[triangles]`` and
``[targets2d]`` sections.  Parsing round-trips bit-exactly on rationals.
"""
from __future__ import annotations

import math
import random
from fractions import Fraction
from typing import Sequence

from .core import OctantApex, RawPoint3
from .duality import CoverInstance, TriangleHomothet
from .verify import Coloring


class FormatError(ValueError):
    """Malformed input file; the message carries the offending line number."""


def _fraction(token: str, lineno: int) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise FormatError(f"line {lineno}: bad rational {token!r}") from None


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def parse_points(text: str) -> list[RawPoint3]:
    points = []
    for lineno, line in _content_lines(text):
        parts = line.split()
        if len(parts) != 3:
            raise FormatError(f"line {lineno}: expected 3 coordinates, got {len(parts)}")
        x, y, z = (_fraction(t, lineno) for t in parts)
        points.append(RawPoint3(x, y, z, id=len(points)))
    if not points:
        raise FormatError("no points in input")
    return points


def format_points(points: Sequence[RawPoint3]) -> str:
    return "".join(f"{p.x} {p.y} {p.z}\n" for p in points)


def parse_coloring(text: str) -> Coloring:
    assignment = {}
    for lineno, line in _content_lines(text):
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected 'id color'")
        try:
            assignment[int(parts[0])] = int(parts[1])
        except ValueError:
            raise FormatError(f"line {lineno}: expected integers") from None
    return Coloring(assignment)


def format_coloring(coloring: Coloring) -> str:
    return "".join(f"{i} {c}\n" for i, c in sorted(coloring.assignment.items()))


def parse_cover(text: str) -> CoverInstance:
    section = None
    apexes: list[OctantApex] = []
    targets: list[RawPoint3] = []
    for lineno, line in _content_lines(text):
        if line.startswith("["):
            if line not in ("[octants]", "[targets]"):
                raise FormatError(f"line {lineno}: unknown section {line!r}")
            section = line
            continue
        parts = line.split()
        if len(parts) != 3:
            raise FormatError(f"line {lineno}: expected 3 coordinates")
        vals = [_fraction(t, lineno) for t in parts]
        if section == "[octants]":
            apexes.append(OctantApex(*vals))
        elif section == "[targets]":
            targets.append(RawPoint3(*vals, id=len(targets)))
        else:
            raise FormatError(f"line {lineno}: data before any section header")
    if not apexes or not targets:
        raise FormatError("cover file needs nonempty [octants] and [targets]")
    return CoverInstance(apexes=tuple(apexes), targets=tuple(targets))


def format_cover(cover: CoverInstance) -> str:
    out = ["[octants]\n"]
    out += [f"{a.a1} {a.a2} {a.a3}\n" for a in cover.apexes]
    out.append("[targets]\n")
    out += [f"{t.x} {t.y} {t.z}\n" for t in cover.targets]
    return "".join(out)


def parse_triangles(
    text: str,
) -> tuple[list[TriangleHomothet], list[tuple[Fraction, Fraction]]]:
    section = None
    homothets: list[TriangleHomothet] = []
    targets: list[tuple[Fraction, Fraction]] = []
    for lineno, line in _content_lines(text):
        if line.startswith("["):
            if line not in ("[triangles]", "[targets2d]"):
                raise FormatError(f"line {lineno}: unknown section {line!r}")
            section = line
            continue
        parts = line.split()
        if section == "[triangles]":
            if len(parts) != 3:
                raise FormatError(f"line {lineno}: expected 'cu cv s'")
            cu, cv, s = (_fraction(t, lineno) for t in parts)
            if s <= 0:
                raise FormatError(f"line {lineno}: scale must be positive")
            homothets.append(TriangleHomothet(cu, cv, s))
        elif section == "[targets2d]":
            if len(parts) != 2:
                raise FormatError(f"line {lineno}: expected 'u v'")
            targets.append((_fraction(parts[0], lineno), _fraction(parts[1], lineno)))
        else:
            raise FormatError(f"line {lineno}: data before any section header")
    if not homothets or not targets:
        raise FormatError("triangle file needs nonempty [triangles] and [targets2d]")
    return homothets, targets


def format_partition(partition) -> str:
    """Dump a partition as lines ``id -> owner_id`` or ``id -> S``."""
    lines = {p.id: f"{p.id} -> S" for p in partition.important}
    lines.update({pid: f"{pid} -> {oid}" for pid, oid in partition.owner.items()})
    return "".join(lines[i] + "\n" for i in sorted(lines))


def generate(kind: str, n: int, seed: int = 0) -> list[RawPoint3]:
    """Deterministic instance generators for the CLI and the test harness."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if kind == "chain":
        return [RawPoint3(Fraction(i), Fraction(i), Fraction(i), id=i - 1) for i in range(1, n + 1)]
    if kind == "antichain":
        return [
            RawPoint3(Fraction(i), Fraction(n + 1 - i), Fraction(i), id=i - 1)
            for i in range(1, n + 1)
        ]
    if kind == "grid":
        side = math.isqrt(n - 1) + 1
        return [
            RawPoint3(Fraction(t % side), Fraction(t // side), Fraction(t), id=t)
            for t in range(n)
        ]
    if kind == "random":
        rng = random.Random(seed)
        xs = list(range(1, n + 1))
        ys = list(range(1, n + 1))
        zs = list(range(1, n + 1))
        rng.shuffle(xs)
        rng.shuffle(ys)
        rng.shuffle(zs)
        return [
            RawPoint3(Fraction(xs[i]), Fraction(ys[i]), Fraction(zs[i]), id=i)
            for i in range(n)
        ]
    raise ValueError(f"unknown instance kind {kind!r}")
