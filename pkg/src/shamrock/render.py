"""Deterministic SVG rendering of regions and tilings.

Lattice point (i, j) maps to the plane via the basis (1, 0) and
(1/2, sqrt(3)/2), scaled to 40 px per unit, with the y axis flipped for
screen coordinates.  Hole cells are simply absent from the path set, so
the background shows through.  Output is byte-stable: cells are drawn in
sorted order, coordinates use a fixed format and nothing time-dependent
is emitted.
"""

from __future__ import annotations

import math

from shamrock.counting import Tiling
from shamrock.lattice import DOWN, UP, Region, TriRef

UNIT = 40.0
MARGIN = 20.0
_SQRT3_2 = math.sqrt(3.0) / 2.0

CELL_FILL = "#f7f5ef"
CELL_STROKE = "#444444"
# lozenge fill by orientation, keyed by (down.i - up.i, down.j - up.j)
LOZENGE_FILL = {(0, 0): "#8fb7d9", (-1, 0): "#a6cf9f", (0, -1): "#e8a19b"}


def _vertex(i: int, j: int) -> tuple[float, float]:
    return (i + j / 2.0) * UNIT, -j * _SQRT3_2 * UNIT


def _cell_vertices(cell: TriRef) -> list[tuple[int, int]]:
    i, j, o = cell
    if o == UP:
        return [(i, j), (i + 1, j), (i, j + 1)]
    return [(i + 1, j), (i, j + 1), (i + 1, j + 1)]


def _path(points: list[tuple[float, float]], fill: str, stroke: str) -> str:
    coords = " L ".join(f"{x:.2f} {y:.2f}" for x, y in points)
    return f'<path d="M {coords} Z" fill="{fill}" stroke="{stroke}" stroke-width="1"/>'


def _lozenge_points(up: TriRef, down: TriRef) -> list[tuple[int, int]]:
    shared = set(_cell_vertices(up)) & set(_cell_vertices(down))
    quad = [v for v in _cell_vertices(up) + _cell_vertices(down) if v not in shared]
    quad += list(shared)
    cx = sum(v[0] + v[1] / 2.0 for v in quad) / 4.0
    cy = sum(v[1] for v in quad) / 4.0
    return sorted(quad, key=lambda v: math.atan2(v[1] - cy, (v[0] + v[1] / 2.0) - cx))


def render_svg(region: Region, tiling: Tiling | None = None) -> str:
    """SVG document for the region; with a tiling, lozenges are overlaid."""
    cells = sorted(region.cells)
    xs, ys = [0.0], [0.0]
    for cell in cells:
        for i, j in _cell_vertices(cell):
            x, y = _vertex(i, j)
            xs.append(x)
            ys.append(y)
    dx, dy = MARGIN - min(xs), MARGIN - min(ys)
    width = max(xs) - min(xs) + 2 * MARGIN
    height = max(ys) - min(ys) + 2 * MARGIN

    def shifted(points: list[tuple[int, int]]) -> list[tuple[float, float]]:
        return [(px + dx, py + dy) for px, py in (_vertex(i, j) for i, j in points)]

    body = [
        _path(shifted(_cell_vertices(cell)), CELL_FILL, CELL_STROKE) for cell in cells
    ]
    if tiling is not None:
        for up, down in sorted(tiling):
            key = (down[0] - up[0], down[1] - up[1])
            body.append(_path(shifted(_lozenge_points(up, down)), LOZENGE_FILL[key], "#222222"))
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" '
        f'width="{width:.0f}" height="{height:.0f}" '
        f'viewBox="0 0 {width:.0f} {height:.0f}">\n'
        + "\n".join(body)
        + ("\n" if body else "")
        + "</svg>\n"
    )
