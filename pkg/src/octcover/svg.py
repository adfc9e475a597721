"""Static SVG figures: staircase partitions, colorings, and wedge graphs.

Output is deterministic plain SVG text.  Points are drawn in rank
coordinates with the y axis flipped so NE in the plane is up-right on
screen.  Wedge-graph edges between SW-NE pairs are straight segments;
NW-SE pairs get a reverse-L polyline through the top-right corner of
their bounding rectangle.
"""
from __future__ import annotations

from .core import OrderedPointSet
from .partition import Partition
from .verify import Coloring
from .wedgegraph import WedgeGraph

_SCALE = 40
_MARGIN = 30
_POINT_R = 5
_FILLS = ["#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"]


def _layout(opset: OrderedPointSet):
    xs = [p.x for p in opset.points]
    ys = [p.y for p in opset.points]
    w = (max(xs) - min(xs) + 2) * _SCALE + 2 * _MARGIN
    h = (max(ys) - min(ys) + 2) * _SCALE + 2 * _MARGIN

    def to_screen(x, y):
        sx = _MARGIN + (x - min(xs) + 1) * _SCALE
        sy = h - _MARGIN - (y - min(ys) + 1) * _SCALE
        return sx, sy

    return w, h, to_screen


def _doc(w: int, h: int, body: list[str]) -> str:
    head = (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" '
        f'viewBox="0 0 {w} {h}">\n'
    )
    return head + "".join(f"  {line}\n" for line in body) + "</svg>\n"


def _point(sx: float, sy: float, fill: str, label: str) -> list[str]:
    return [
        f'<circle cx="{sx}" cy="{sy}" r="{_POINT_R}" fill="{fill}" stroke="black"/>',
        f'<text x="{sx + 7}" y="{sy - 7}" font-size="11">{label}</text>',
    ]


def _fill_for(color, palette_order: list) -> str:
    if color not in palette_order:
        palette_order.append(color)
    return _FILLS[palette_order.index(color) % len(_FILLS)]


def render_partition_svg(opset: OrderedPointSet, partition: Partition) -> str:
    """Important points with their NE quadrant boundaries; owned points
    drawn in their owner's hue."""
    w, h, to_screen = _layout(opset)
    body = []
    hues = list()
    owner_fill = {}
    for p in partition.important:
        sx, sy = to_screen(p.x, p.y)
        fill = _fill_for(p.id, hues)
        owner_fill[p.id] = fill
        # NE quadrant boundary of the region anchored at p
        body.append(
            f'<polyline points="{sx},{_MARGIN} {sx},{sy} {w - _MARGIN},{sy}" '
            f'fill="none" stroke="{fill}" stroke-dasharray="4 3"/>'
        )
    for p in opset.points:
        sx, sy = to_screen(p.x, p.y)
        if p.id in owner_fill:
            body += _point(sx, sy, owner_fill[p.id], f"p{p.id}*")
        else:
            body += _point(sx, sy, owner_fill[partition.owner[p.id]], f"p{p.id}")
    return _doc(w, h, body)


def render_coloring_svg(opset: OrderedPointSet, coloring: Coloring) -> str:
    w, h, to_screen = _layout(opset)
    body = []
    order: list = []
    for p in opset.points:
        sx, sy = to_screen(p.x, p.y)
        body += _point(sx, sy, _fill_for(coloring[p.id], order), f"{p.id}:{coloring[p.id]}")
    return _doc(w, h, body)


def render_wedgegraph_svg(
    opset: OrderedPointSet, graph: WedgeGraph, coloring: Coloring | None = None
) -> str:
    w, h, to_screen = _layout(opset)
    pos = {p.id: (p.x, p.y) for p in opset.points}
    body = []
    for u, v in sorted(graph.edges):
        (ux, uy), (vx, vy) = pos[u], pos[v]
        su, sv = to_screen(ux, uy), to_screen(vx, vy)
        if (ux - vx) * (uy - vy) > 0:  # SW-NE pair: straight segment
            body.append(
                f'<line x1="{su[0]}" y1="{su[1]}" x2="{sv[0]}" y2="{sv[1]}" '
                f'stroke="gray"/>'
            )
        else:  # NW-SE pair: reverse-L through the top-right corner
            if uy < vy:
                (ux, uy, su), (vx, vy, sv) = (vx, vy, sv), (ux, uy, su)
            corner = to_screen(max(ux, vx), max(uy, vy))
            body.append(
                f'<polyline points="{su[0]},{su[1]} {corner[0]},{corner[1]} '
                f'{sv[0]},{sv[1]}" fill="none" stroke="gray"/>'
            )
    order: list = []
    for p in opset.points:
        sx, sy = to_screen(p.x, p.y)
        fill = _fill_for(coloring[p.id], order) if coloring else "#1f77b4"
        label = f"{p.id}" if coloring is None else f"{p.id}:{coloring[p.id]}"
        body += _point(sx, sy, fill, label)
    return _doc(w, h, body)
