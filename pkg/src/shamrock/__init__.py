"""Exact enumeration toolkit for lozenge tilings on the triangular lattice.

Builds hexagons, cored hexagons, S-cored hexagons and magnet bar regions as
explicit sets of unit triangles, counts their lozenge tilings with an exact
transfer-matrix oracle, evaluates the matching hyperfactorial product
formulas in exact rational arithmetic, and machine-checks the condensation
recurrences and identities relating them.
"""

from shamrock.lattice import (
    UP,
    DOWN,
    Region,
    RegionSpec,
    build_hexagon,
    build_shamrock_hole,
    build_cored_hexagon,
    build_s_cored_hexagon,
    build_magnet_bar,
    build_region,
    region_stats,
    reflect_vertical,
    rotate_120,
    canonical,
)
from shamrock.counting import (
    RegionTooLargeError,
    DualGraph,
    dual_graph,
    count_tilings,
    count_tilings_exhaustive,
    find_one_tiling,
    DEFAULT_MAX_CELLS,
)
from shamrock.formulas import (
    SqrtPiScaled,
    hyperfactorial,
    gamma_halfint,
    macmahon_P,
    sc_formula,
    magnet_bar_formula,
    shamrock_ratio,
    shamrock_ratio_factored,
    shamrock_ratio_symmetric_factored,
    omega_single,
    omega_finite,
    glaisher_ratio,
    finite_shamrock_ratio,
)

__all__ = [
    "UP",
    "DOWN",
    "Region",
    "RegionSpec",
    "build_hexagon",
    "build_shamrock_hole",
    "build_cored_hexagon",
    "build_s_cored_hexagon",
    "build_magnet_bar",
    "build_region",
    "region_stats",
    "reflect_vertical",
    "rotate_120",
    "canonical",
    "RegionTooLargeError",
    "DualGraph",
    "dual_graph",
    "count_tilings",
    "count_tilings_exhaustive",
    "find_one_tiling",
    "DEFAULT_MAX_CELLS",
    "SqrtPiScaled",
    "hyperfactorial",
    "gamma_halfint",
    "macmahon_P",
    "sc_formula",
    "magnet_bar_formula",
    "shamrock_ratio",
    "shamrock_ratio_factored",
    "shamrock_ratio_symmetric_factored",
    "omega_single",
    "omega_finite",
    "glaisher_ratio",
    "finite_shamrock_ratio",
]
