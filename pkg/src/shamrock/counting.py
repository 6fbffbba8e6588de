"""Exact, formula-independent counting of lozenge tilings.

A lozenge tiling of a region is a perfect matching of its dual graph (one
vertex per unit triangle, edges between triangles sharing an edge).  The
main counter sweeps the region row by row, carrying a dict from "which
down-triangles of the previous row are still unmatched" bitmasks to exact
tiling counts; within a row the cells form a path graph, so the transitions
have multiplicity 0 or 1.  Everything runs over Python integers, so counts
are exact at any magnitude.

A second, deliberately naive exhaustive recursion is kept as an independent
cross-check for small regions.
"""

from __future__ import annotations

from dataclasses import dataclass

from shamrock.lattice import DOWN, UP, Region, TriRef, neighbors

DEFAULT_MAX_CELLS = 2000


class RegionTooLargeError(Exception):
    """Raised when a region exceeds the configured cell budget."""


@dataclass(frozen=True)
class DualGraph:
    """Bipartite planar dual of a region: UP cells vs DOWN cells."""

    ups: tuple[TriRef, ...]
    downs: tuple[TriRef, ...]
    edges: tuple[tuple[TriRef, TriRef], ...]


def dual_graph(region: Region) -> DualGraph:
    """Dual graph with one vertex per cell and edges between lozenge partners."""
    ups = tuple(sorted(c for c in region.cells if c[2] == UP))
    downs = tuple(sorted(c for c in region.cells if c[2] == DOWN))
    edges = []
    for up in ups:
        for nbr in neighbors(up):
            if nbr in region.cells:
                edges.append((up, nbr))
    return DualGraph(ups, downs, tuple(sorted(edges)))


def _check_budget(region: Region, max_cells: int | None) -> None:
    limit = DEFAULT_MAX_CELLS if max_cells is None else max_cells
    if region.cell_count > limit:
        raise RegionTooLargeError(
            f"region has {region.cell_count} cells, budget is {limit}"
        )


def _rotate_cells_cw(cells: frozenset[TriRef]) -> frozenset[TriRef]:
    return frozenset(
        (j, -i - j - 1, UP) if o == UP else (j, -i - j - 2, DOWN)
        for i, j, o in cells
    )


def _rows_of(cells: frozenset[TriRef]) -> dict[int, tuple[list[int], list[int]]]:
    """Map j -> (sorted i of UP cells, sorted i of DOWN cells)."""
    rows: dict[int, tuple[list[int], list[int]]] = {}
    for i, j, o in cells:
        if j not in rows:
            rows[j] = ([], [])
        rows[j][o].append(i)
    for ups, downs in rows.values():
        ups.sort()
        downs.sort()
    return rows


def _row_transitions(
    pre_matched: set[int], ups: list[int], downs: list[int]
) -> list[int]:
    """All ways to finish a row, as bitmasks of downs left for the row above.

    `pre_matched` are the i-positions of UP cells already paired with the
    row below.  Within the row, cells sit on a path: UP(i) at position 2i
    may pair with DOWN(i-1) at 2i-1 or DOWN(i) at 2i+1.  A down cell is
    either consumed in-row or handed upward via the returned bitmask.
    """
    chain: list[tuple[int, int, int]] = []  # (position, orient, i or bit index)
    for i in ups:
        chain.append((2 * i, UP, i))
    for bit, i in enumerate(downs):
        chain.append((2 * i + 1, DOWN, bit))
    chain.sort()

    results: list[int] = []
    # carry: 0 none, 1 previous cell is a still-free DOWN, 2 previous cell
    # is an UP that must pair with the next DOWN
    stack = [(0, 0, -2, 0)]  # (index, carry, previous position, mask)
    n = len(chain)
    while stack:
        idx, carry, prev_pos, mask = stack.pop()
        if idx == n:
            if carry == 0:
                results.append(mask)
            continue
        pos, orient, key = chain[idx]
        if carry and pos != prev_pos + 1:
            continue  # a pending pairing needed an adjacent cell
        if orient == UP:
            if carry == 2:
                continue  # two UPs cannot be adjacent on the chain anyway
            if key in pre_matched:
                if carry == 1:
                    continue  # the free DOWN's only taker is busy
                stack.append((idx + 1, 0, pos, mask))
            elif carry == 1:
                stack.append((idx + 1, 0, pos, mask))  # pair with DOWN on the left
            else:
                stack.append((idx + 1, 2, pos, mask))  # must pair with DOWN on the right
        else:
            if carry == 2:
                stack.append((idx + 1, 0, pos, mask))  # consumed by the pending UP
            elif carry == 1:
                continue  # unreachable: DOWN positions are never adjacent
            else:
                stack.append((idx + 1, 0, pos, mask | (1 << key)))  # hand upward
                stack.append((idx + 1, 1, pos, mask))  # offer to the next UP
    return results


def _count_by_rows(cells: frozenset[TriRef]) -> int:
    rows = _rows_of(cells)
    jmin, jmax = min(rows), max(rows)
    prev_downs: list[int] = []
    states: dict[int, int] = {0: 1}
    for j in range(jmin, jmax + 1):
        ups, downs = rows.get(j, ([], []))
        ups_set = set(ups)
        new_states: dict[int, int] = {}
        cache: dict[int, list[int]] = {}
        for mask, ways in states.items():
            outs = cache.get(mask)
            if outs is None:
                matched = {prev_downs[b] for b in range(mask.bit_length()) if mask >> b & 1}
                if matched <= ups_set:
                    outs = _row_transitions(matched, ups, downs)
                else:
                    outs = []  # an unmatched DOWN below has no partner here
                cache[mask] = outs
            for out in outs:
                new_states[out] = new_states.get(out, 0) + ways
        if not new_states:
            return 0
        states = new_states
        prev_downs = downs
    return states.get(0, 0)


def count_tilings(region: Region, max_cells: int | None = None) -> int:
    """Exact number of lozenge tilings of the region.

    The empty region counts 1; an unbalanced region counts 0.  Regions
    beyond the cell budget (default 2000) raise RegionTooLargeError.
    """
    _check_budget(region, max_cells)
    if not region.cells:
        return 1
    if region.up_count != region.down_count:
        return 0
    # The sweep cost is driven by the widest row, so count in whichever of
    # the three lattice directions keeps rows narrowest.
    best = None
    cells = region.cells
    for _ in range(3):
        width = max(len(downs) for _, downs in _rows_of(cells).values())
        if best is None or width < best[0]:
            best = (width, cells)
        cells = _rotate_cells_cw(cells)
    return _count_by_rows(best[1])


def count_tilings_exhaustive(region: Region) -> int:
    """Independent brute-force count: recursion over the first uncovered cell.

    No memoization, no transfer states; exponential, intended for regions
    of a few dozen cells as a cross-check of count_tilings.
    """
    if not region.cells:
        return 1
    if region.up_count != region.down_count:
        return 0
    remaining = set(region.cells)

    def rec() -> int:
        if not remaining:
            return 1
        cell = min(remaining)
        remaining.remove(cell)
        total = 0
        for nbr in neighbors(cell):
            if nbr in remaining:
                remaining.remove(nbr)
                total += rec()
                remaining.add(nbr)
        remaining.add(cell)
        return total

    return rec()


Tiling = frozenset  # of (up TriRef, down TriRef) pairs


def find_one_tiling(region: Region, max_cells: int | None = None) -> Tiling | None:
    """One lozenge tiling of the region, or None if there is none.

    Backtracking search with forced-move propagation: any cell with a single
    free partner is paired immediately, which resolves most of these regions
    without branching.
    """
    _check_budget(region, max_cells)
    if not region.cells:
        return frozenset()
    if region.up_count != region.down_count:
        return None
    pairs = _search_tiling(set(region.cells))
    if pairs is None:
        return None
    return frozenset(
        (a, b) if a[2] == UP else (b, a) for a, b in pairs
    )


def _search_tiling(remaining: set[TriRef]) -> list[tuple[TriRef, TriRef]] | None:
    pairs: list[tuple[TriRef, TriRef]] = []
    while remaining:
        forced = None
        for cell in remaining:
            free = [nbr for nbr in neighbors(cell) if nbr in remaining]
            if not free:
                return None
            if len(free) == 1:
                forced = (cell, free[0])
                break
        if forced is not None:
            a, b = forced
            remaining.discard(a)
            remaining.discard(b)
            pairs.append((a, b))
            continue
        cell = min(remaining)
        for nbr in neighbors(cell):
            if nbr not in remaining:
                continue
            sub = set(remaining)
            sub.discard(cell)
            sub.discard(nbr)
            rest = _search_tiling(sub)
            if rest is not None:
                return pairs + [(cell, nbr)] + rest
        return None
    return pairs
