"""Triangular-lattice regions built from unit triangles.

Coordinates are oblique: a lattice point (i, j) sits at the Cartesian
position i*(1, 0) + j*(1/2, sqrt(3)/2).  The three families of lattice
lines are then the coordinate lines i = const, j = const and i + j = const,
so every region here is an intersection of half-planes in these three
directions, minus explicitly placed triangular holes.

Unit triangles are keyed by (i, j, orient):

    UP   (i, j): vertices (i, j), (i+1, j), (i, j+1)
    DOWN (i, j): vertices (i+1, j), (i, j+1), (i+1, j+1)

An UP and a DOWN triangle form a lozenge iff they share a full edge; each
UP triangle has the three potential partners DOWN(i, j), DOWN(i-1, j) and
DOWN(i, j-1).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator

UP = 0
DOWN = 1

TriRef = tuple[int, int, int]  # (i, j, orient)

FAMILIES = ("hexagon", "shamrock", "cored", "sc", "magnet")

# Number of integer parameters per family, in documented order:
#   hexagon: s1..s6 clockwise from top
#   shamrock: a, b, c, m
#   cored: x, y, z, m
#   sc: x, y, z, a, b, c, m
#   magnet: x, y, a, b, c, m
FAMILY_ARITY = {"hexagon": 6, "shamrock": 4, "cored": 4, "sc": 7, "magnet": 6}


@dataclass(frozen=True)
class RegionSpec:
    """Named region family plus its integer parameters."""

    family: str
    params: tuple[int, ...]

    def __post_init__(self):
        if self.family not in FAMILY_ARITY:
            raise ValueError(f"unknown region family {self.family!r}")
        if len(self.params) != FAMILY_ARITY[self.family]:
            raise ValueError(
                f"family {self.family!r} takes {FAMILY_ARITY[self.family]} "
                f"parameters, got {len(self.params)}"
            )
        if any(p < 0 for p in self.params):
            raise ValueError("region parameters must be nonnegative")


@dataclass(frozen=True)
class Region:
    """A finite set of unit triangles, optionally tagged with its family."""

    cells: frozenset[TriRef]
    spec: RegionSpec | None = None

    @property
    def cell_count(self) -> int:
        return len(self.cells)

    @property
    def up_count(self) -> int:
        return sum(1 for c in self.cells if c[2] == UP)

    @property
    def down_count(self) -> int:
        return sum(1 for c in self.cells if c[2] == DOWN)

    def is_balanced(self) -> bool:
        return self.up_count == self.down_count

    def translate(self, di: int, dj: int) -> "Region":
        return Region(
            frozenset((i + di, j + dj, o) for i, j, o in self.cells), self.spec
        )

    def to_json(self) -> str:
        """Serialize as {"family", "params", "cells"} with cells sorted."""
        family = self.spec.family if self.spec else "custom"
        params = list(self.spec.params) if self.spec else []
        cells = [[i, j, "U" if o == UP else "D"] for i, j, o in sorted(self.cells)]
        return json.dumps({"family": family, "params": params, "cells": cells})

    @staticmethod
    def from_json(text: str) -> "Region":
        data = json.loads(text)
        cells = frozenset(
            (int(i), int(j), UP if o == "U" else DOWN) for i, j, o in data["cells"]
        )
        spec = None
        if data.get("family") in FAMILY_ARITY:
            spec = RegionSpec(data["family"], tuple(int(p) for p in data["params"]))
        return Region(cells, spec)


def neighbors(cell: TriRef) -> tuple[TriRef, TriRef, TriRef]:
    """The three triangles sharing a full edge with `cell`."""
    i, j, o = cell
    if o == UP:
        return ((i, j, DOWN), (i - 1, j, DOWN), (i, j - 1, DOWN))
    return ((i, j, UP), (i + 1, j, UP), (i, j + 1, UP))


# ---------------------------------------------------------------------------
# cell enumeration helpers
# ---------------------------------------------------------------------------


def _hexagon_cells(sides: tuple[int, ...]) -> set[TriRef]:
    """Cells of the hexagon with side lengths s1..s6 clockwise from top.

    Anchored with the top-left vertex at (0, 0); the six boundary lines are
    j = 0 (top), i+j = s1 (NE), i = s1+s2 (SE), j = -s2-s3 (bottom),
    i+j = s1-s3-s4 (SW) and i = 0 (NW).
    """
    s1, s2, s3, s4, s5, s6 = sides
    jmax, kmax, imax = 0, s1, s1 + s2
    jmin, kmin, imin = -s2 - s3, s1 - s3 - s4, 0
    cells: set[TriRef] = set()
    for j in range(jmin, jmax):
        # UP(i, j) is inside iff all of (i, j), (i+1, j), (i, j+1) satisfy
        # the half-plane constraints; similarly for DOWN.
        lo = max(imin, kmin - j)
        hi = min(imax - 1, kmax - 1 - j)
        for i in range(lo, hi + 1):
            cells.add((i, j, UP))
        lo = max(imin, kmin - 1 - j)
        hi = min(imax - 1, kmax - 2 - j)
        for i in range(lo, hi + 1):
            cells.add((i, j, DOWN))
    return cells


def _up_triangle_cells(p: int, q: int, side: int) -> set[TriRef]:
    """Cells of the up-pointing triangle with corners (p,q), (p+side,q), (p,q+side)."""
    cells: set[TriRef] = set()
    for v in range(side):
        for u in range(side - v):
            cells.add((p + u, q + v, UP))
    for v in range(side - 1):
        for u in range(side - 1 - v):
            cells.add((p + u, q + v, DOWN))
    return cells


def _down_triangle_cells(p: int, q: int, side: int) -> set[TriRef]:
    """Cells of the down-pointing triangle with corners (p,q), (p+side,q), (p+side,q-side)."""
    cells: set[TriRef] = set()
    for t in range(side):
        j = q - 1 - t
        for i in range(p + t, p + side):
            cells.add((i, j, DOWN))
        for i in range(p + t + 1, p + side):
            cells.add((i, j, UP))
    return cells


# ---------------------------------------------------------------------------
# region builders
# ---------------------------------------------------------------------------


def _check_nonneg(**params: int) -> None:
    for name, value in params.items():
        if value < 0:
            raise ValueError(f"parameter {name} must be nonnegative, got {value}")


def build_hexagon(s1: int, s2: int, s3: int, s4: int, s5: int, s6: int) -> Region:
    """Hexagon with side lengths s1..s6 clockwise from the top side.

    The sides must close up: s1+s2 == s4+s5 and s2+s3 == s5+s6 (the third
    condition s3+s4 == s6+s1 follows).
    """
    sides = (s1, s2, s3, s4, s5, s6)
    _check_nonneg(**{f"s{k+1}": s for k, s in enumerate(sides)})
    if s1 + s2 != s4 + s5 or s2 + s3 != s5 + s6:
        raise ValueError(f"hexagon sides {sides} violate the closure conditions")
    return canonical(Region(frozenset(_hexagon_cells(sides)), RegionSpec("hexagon", sides)))


def _shamrock_cells(a: int, b: int, c: int, m: int, p: int, q: int) -> set[TriRef]:
    """Up-pointing core of side m at (p, q) plus down-pointing lobes.

    The lobes of sides a, b, c hang off the core's top vertex (p, q+m),
    left vertex (p, q) and right vertex (p+m, q) respectively, each the
    point reflection of a triangle of that size through the shared vertex.
    """
    cells = _up_triangle_cells(p, q, m)
    cells |= _down_triangle_cells(p - a, q + m + a, a)  # top lobe, apex at (p, q+m)
    cells |= _down_triangle_cells(p - b, q, b)  # left lobe, corner at (p, q)
    cells |= _down_triangle_cells(p + m, q, c)  # right lobe, corner at (p+m, q)
    return cells


def build_shamrock_hole(a: int, b: int, c: int, m: int, anchor: tuple[int, int] = (0, 0)) -> Region:
    """The shamrock: core triangle of side m anchored at `anchor` plus lobes a, b, c.

    `anchor` is the bottom-left lattice corner of the up-pointing core.
    Unlike the other builders this one is not re-anchored, so it can be
    positioned directly.
    """
    _check_nonneg(a=a, b=b, c=c, m=m)
    p, q = anchor
    return Region(
        frozenset(_shamrock_cells(a, b, c, m, p, q)), RegionSpec("shamrock", (a, b, c, m))
    )


def _core_position(x: int, y: int, z: int, m: int) -> tuple[int, int]:
    """Bottom-left corner of the central core triangle in C_{x,y,z}(m).

    In the frame of `_hexagon_cells((x, y+m, z, x+m, y, z+m))`.  When the
    parities of x, y, z are not all equal the centre is off-lattice and is
    shifted half a unit; the direction depends on which parameter is the
    odd one out (the three mixed cases are rotations of one another).
    """
    # Unshifted centre: 2p = x + y, 2q = -(y + z) - 2m.
    if (x - y) % 2 == 0 and (y - z) % 2 == 0:
        return (x + y) // 2, -(y + z) // 2 - m
    if (x - y) % 2 == 1 and (x - z) % 2 == 1:
        # x odd one out: shift half a unit west, towards the side of length y
        return (x + y - 1) // 2, -(y + z) // 2 - m
    if (y - x) % 2 == 1 and (y - z) % 2 == 1:
        # y odd one out: shift half a unit to the southeast
        return (x + y + 1) // 2, -(y + z + 1) // 2 - m
    # z odd one out: shift half a unit to the northeast
    return (x + y) // 2, -(y + z - 1) // 2 - m


def build_cored_hexagon(x: int, y: int, z: int, m: int) -> Region:
    """Hexagon of sides x, y+m, z, x+m, y, z+m with a central core of side m removed."""
    _check_nonneg(x=x, y=y, z=z, m=m)
    hexagon = _hexagon_cells((x, y + m, z, x + m, y, z + m))
    p, q = _core_position(x, y, z, m)
    core = _up_triangle_cells(p, q, m)
    if not core <= hexagon:
        raise ValueError(f"core of side {m} does not fit inside C_{{{x},{y},{z}}}")
    return canonical(Region(frozenset(hexagon - core), RegionSpec("cored", (x, y, z, m))))


def build_s_cored_hexagon(x: int, y: int, z: int, a: int, b: int, c: int, m: int) -> Region:
    """S-cored hexagon: pushed-out hexagon minus a shamrock grown from the core.

    Starting from the cored hexagon C_{x,y,z}(m), the six boundary lines are
    pushed outward by a (top), b (SW), c (SE), b+c (bottom), a+c (NE) and
    a+b (NW), giving the outer hexagon with sides x+a+b+c, y+m, z+a+b+c,
    x+m, y+a+b+c, z+m clockwise from top.  The hole is the shamrock with
    core at the C_{x,y,z}(m) core position and lobes a, b, c.
    """
    _check_nonneg(x=x, y=y, z=z, a=a, b=b, c=c, m=m)
    jmax, kmax, imax = a, x + a + c, x + y + m + c
    jmin, kmin, imin = -(y + z + m + b + c), -(z + m + b), -(a + b)
    cells: set[TriRef] = set()
    for j in range(jmin, jmax):
        lo, hi = max(imin, kmin - j), min(imax - 1, kmax - 1 - j)
        for i in range(lo, hi + 1):
            cells.add((i, j, UP))
        lo, hi = max(imin, kmin - 1 - j), min(imax - 1, kmax - 2 - j)
        for i in range(lo, hi + 1):
            cells.add((i, j, DOWN))
    p, q = _core_position(x, y, z, m)
    hole = _shamrock_cells(a, b, c, m, p, q)
    if not hole <= cells:
        raise ValueError(
            f"shamrock ({a},{b},{c},{m}) crosses the boundary of SC_{{{x},{y},{z}}}"
        )
    return canonical(
        Region(frozenset(cells - hole), RegionSpec("sc", (x, y, z, a, b, c, m)))
    )


def build_magnet_bar(x: int, y: int, a: int, b: int, c: int, m: int) -> Region:
    """Magnet bar region B_{x,y}(a,b,c,m).

    Hexagon of sides x+c, y+m, a+b+c, x+m, y+c, a+b+m clockwise from top,
    minus an up-pointing triangle of side m on the northwestern side (the
    portions of that side above and below it have lengths a and b) and a
    down-pointing triangle of side c whose top-left corner touches the
    m-triangle's bottom-right vertex.
    """
    _check_nonneg(x=x, y=y, a=a, b=b, c=c, m=m)
    hexagon = _hexagon_cells((x + c, y + m, a + b + c, x + m, y + c, a + b + m))
    holes = _up_triangle_cells(0, -a - m, m) | _down_triangle_cells(m, -a - m, c)
    if not holes <= hexagon:
        raise ValueError(f"holes do not fit inside B_{{{x},{y}}}({a},{b},{c},{m})")
    return canonical(
        Region(frozenset(hexagon - holes), RegionSpec("magnet", (x, y, a, b, c, m)))
    )


def build_region(family: str, params: Iterable[int]) -> Region:
    """Build a region from a RegionSpec-style (family, params) description."""
    params = tuple(params)
    spec = RegionSpec(family, params)  # validates family name and arity
    builder = {
        "hexagon": build_hexagon,
        "shamrock": build_shamrock_hole,
        "cored": build_cored_hexagon,
        "sc": build_s_cored_hexagon,
        "magnet": build_magnet_bar,
    }[spec.family]
    return builder(*params)


# ---------------------------------------------------------------------------
# isometries and statistics
# ---------------------------------------------------------------------------


def canonical(region: Region) -> Region:
    """Translate so the lexicographically smallest cell sits at (0, 0)."""
    if not region.cells:
        return region
    i0, j0, _ = min(region.cells)
    if (i0, j0) == (0, 0):
        return region
    return region.translate(-i0, -j0)


def rotate_120(region: Region) -> Region:
    """Rotate clockwise by 120 degrees and re-anchor canonically."""
    cells = frozenset(
        (j, -i - j - 1, UP) if o == UP else (j, -i - j - 2, DOWN)
        for i, j, o in region.cells
    )
    return canonical(Region(cells, region.spec))


def reflect_vertical(region: Region) -> Region:
    """Reflect across a vertical axis and re-anchor canonically."""
    cells = frozenset(
        (-i - j - 1, j, UP) if o == UP else (-i - j - 2, j, DOWN)
        for i, j, o in region.cells
    )
    return canonical(Region(cells, region.spec))


def congruent(r1: Region, r2: Region) -> bool:
    """Whether the two regions agree as cell sets after canonical anchoring."""
    return canonical(r1).cells == canonical(r2).cells


def connected_components(region: Region) -> int:
    remaining = set(region.cells)
    count = 0
    while remaining:
        count += 1
        stack = [remaining.pop()]
        while stack:
            cell = stack.pop()
            for nbr in neighbors(cell):
                if nbr in remaining:
                    remaining.remove(nbr)
                    stack.append(nbr)
    return count


def region_stats(region: Region) -> tuple[int, int, int, int]:
    """(up_count, down_count, cell_count, connected_components)."""
    return (
        region.up_count,
        region.down_count,
        region.cell_count,
        connected_components(region),
    )


def iter_cells_sorted(region: Region) -> Iterator[TriRef]:
    return iter(sorted(region.cells))
