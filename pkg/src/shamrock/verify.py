"""Machine checks: formulas vs the oracle, recurrences, identities, base cases.

Every check produces a VerificationReport; sweeps are streamed so callers
can emit JSON lines as results arrive.  Oracle-backed sweeps skip regions
over the cell budget rather than truncating parameter ranges, so elongated
regions show up as SKIP with a reason instead of silently vanishing.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from shamrock.counting import count_tilings
from shamrock.formulas import (
    cancellation_lhs,
    finite_shamrock_ratio,
    gamma_halfint,
    macmahon_P,
    magnet_bar_formula,
    sc_formula,
    sc_rhs,
    shamrock_ratio,
)
from shamrock.lattice import (
    Region,
    build_cored_hexagon,
    build_hexagon,
    build_magnet_bar,
    build_s_cored_hexagon,
)


@dataclass(frozen=True)
class VerificationReport:
    check: str
    params: tuple[int, ...]
    expected: str
    actual: str
    status: str  # "PASS", "FAIL" or "SKIP(reason)"

    @property
    def passed(self) -> bool:
        return self.status == "PASS"

    @property
    def failed(self) -> bool:
        return self.status == "FAIL"

    def to_json(self) -> str:
        import json

        return json.dumps(
            {
                "check": self.check,
                "params": list(self.params),
                "expected": self.expected,
                "actual": self.actual,
                "status": self.status,
            }
        )


def _compare(check: str, params: Sequence[int], expected, actual) -> VerificationReport:
    status = "PASS" if expected == actual else "FAIL"
    return VerificationReport(check, tuple(params), str(expected), str(actual), status)


def _skip(check: str, params: Sequence[int], reason: str) -> VerificationReport:
    return VerificationReport(check, tuple(params), "", "", f"SKIP({reason})")


def _oversized(regions: Iterable[Region], max_cells: int | None) -> int | None:
    if max_cells is None:
        return None
    worst = max((r.cell_count for r in regions), default=0)
    return worst if worst > max_cells else None


# ---------------------------------------------------------------------------
# closed formulas against the oracle
# ---------------------------------------------------------------------------

_FORMULA_CASES = {
    "hexagon": (lambda a, b, c: build_hexagon(a, b, c, a, b, c), macmahon_P, 3),
    "cored": (build_cored_hexagon, lambda x, y, z, m: sc_formula(x, y, z, 0, 0, 0, m), 4),
    "sc": (build_s_cored_hexagon, sc_formula, 7),
    "magnet": (build_magnet_bar, magnet_bar_formula, 6),
}


def verify_formula_vs_oracle(
    family: str,
    ranges: Sequence[Iterable[int]],
    max_cells: int | None = None,
) -> Iterator[VerificationReport]:
    """Compare the closed-form count to the oracle over a parameter grid."""
    builder, formula, arity = _FORMULA_CASES[family]
    if len(ranges) != arity:
        raise ValueError(f"family {family!r} takes {arity} parameter ranges")
    check = f"formula_vs_oracle[{family}]"
    for params in itertools.product(*ranges):
        region = builder(*params)
        if max_cells is not None and region.cell_count > max_cells:
            yield _skip(check, params, f"cells={region.cell_count}>{max_cells}")
            continue
        yield _compare(check, params, formula(*params), count_tilings(region))


# ---------------------------------------------------------------------------
# Kuo condensation recurrences, all counts from the oracle
# ---------------------------------------------------------------------------


def check_kuo_magnet(
    x: int, y: int, a: int, b: int, c: int, m: int, max_cells: int | None = None
) -> VerificationReport:
    """Condensation for magnet bars:

    M(B_{x,y}(a,b,c,m)) M(B_{x-1,y}(a,b-1,c,m))
      = M(B_{x,y}(a,b-1,c,m)) M(B_{x-1,y}(a,b,c,m))
      + M(B_{x-1,y+1}(a,b-1,c,m)) M(B_{x,y-1}(a,b,c,m))
    """
    if x < 1 or y < 1 or b < 1:
        raise ValueError("requires x, y, b >= 1")
    params = (x, y, a, b, c, m)
    regions = [
        build_magnet_bar(x, y, a, b, c, m),
        build_magnet_bar(x - 1, y, a, b - 1, c, m),
        build_magnet_bar(x, y, a, b - 1, c, m),
        build_magnet_bar(x - 1, y, a, b, c, m),
        build_magnet_bar(x - 1, y + 1, a, b - 1, c, m),
        build_magnet_bar(x, y - 1, a, b, c, m),
    ]
    worst = _oversized(regions, max_cells)
    if worst is not None:
        return _skip("kuo_magnet", params, f"cells={worst}>{max_cells}")
    n = [count_tilings(r) for r in regions]
    return _compare("kuo_magnet", params, n[0] * n[1], n[2] * n[3] + n[4] * n[5])


def check_kuo_sc_mixed(
    x: int, y: int, z: int, a: int, b: int, c: int, m: int, max_cells: int | None = None
) -> VerificationReport:
    """Condensation for S-cored hexagons, x of parity opposite to y and z:

    M(SC_{x,y,z}(a,b,c,m)) M(SC_{x,y-1,z-1}(a,b,c,m))
      = M(SC_{y,x,z-1}(b,a,c,m)) M(SC_{z,y-1,x}(c,b,a,m))
      + M(SC_{x-1,y,z}(a,b,c,m)) M(SC_{x+1,y-1,z-1}(a,b,c,m))
    """
    if x < 1 or y < 1 or z < 1:
        raise ValueError("requires x, y, z >= 1")
    if (x - y) % 2 == 0 or (y - z) % 2 != 0:
        raise ValueError("requires x of parity opposite to y and z")
    params = (x, y, z, a, b, c, m)
    regions = [
        build_s_cored_hexagon(x, y, z, a, b, c, m),
        build_s_cored_hexagon(x, y - 1, z - 1, a, b, c, m),
        build_s_cored_hexagon(y, x, z - 1, b, a, c, m),
        build_s_cored_hexagon(z, y - 1, x, c, b, a, m),
        build_s_cored_hexagon(x - 1, y, z, a, b, c, m),
        build_s_cored_hexagon(x + 1, y - 1, z - 1, a, b, c, m),
    ]
    worst = _oversized(regions, max_cells)
    if worst is not None:
        return _skip("kuo_sc_mixed", params, f"cells={worst}>{max_cells}")
    n = [count_tilings(r) for r in regions]
    return _compare("kuo_sc_mixed", params, n[0] * n[1], n[2] * n[3] + n[4] * n[5])


def check_kuo_sc_same(
    x: int, y: int, z: int, a: int, b: int, c: int, m: int, max_cells: int | None = None
) -> VerificationReport:
    """Condensation for S-cored hexagons, x, y, z of the same parity:

    M(SC_{x,y,z}(a,b,c,m)) M(SC_{x,z-1,y-1}(a,c,b,m))
      = M(SC_{z-1,x,y}(c,a,b,m)) M(SC_{y-1,z,x}(b,c,a,m))
      + M(SC_{x-1,z,y}(a,c,b,m)) M(SC_{x+1,y-1,z-1}(a,b,c,m))
    """
    if x < 1 or y < 1 or z < 1:
        raise ValueError("requires x, y, z >= 1")
    if (x - y) % 2 != 0 or (y - z) % 2 != 0:
        raise ValueError("requires x, y, z of the same parity")
    params = (x, y, z, a, b, c, m)
    regions = [
        build_s_cored_hexagon(x, y, z, a, b, c, m),
        build_s_cored_hexagon(x, z - 1, y - 1, a, c, b, m),
        build_s_cored_hexagon(z - 1, x, y, c, a, b, m),
        build_s_cored_hexagon(y - 1, z, x, b, c, a, m),
        build_s_cored_hexagon(x - 1, z, y, a, c, b, m),
        build_s_cored_hexagon(x + 1, y - 1, z - 1, a, b, c, m),
    ]
    worst = _oversized(regions, max_cells)
    if worst is not None:
        return _skip("kuo_sc_same", params, f"cells={worst}>{max_cells}")
    n = [count_tilings(r) for r in regions]
    return _compare("kuo_sc_same", params, n[0] * n[1], n[2] * n[3] + n[4] * n[5])


def check_kuo_sc(
    x: int, y: int, z: int, a: int, b: int, c: int, m: int, max_cells: int | None = None
) -> VerificationReport:
    """Dispatch to the same- or mixed-parity condensation check."""
    if (x - y) % 2 == 0 and (y - z) % 2 == 0:
        return check_kuo_sc_same(x, y, z, a, b, c, m, max_cells)
    return check_kuo_sc_mixed(x, y, z, a, b, c, m, max_cells)


# ---------------------------------------------------------------------------
# identities in exact arithmetic (no regions, no oracle)
# ---------------------------------------------------------------------------


def check_R_identity(
    x: int, y: int, z: int, a: int, b: int, c: int, m: int
) -> VerificationReport:
    """The recurrence satisfied by the closed-form products themselves.

    Verified purely in rational * sqrt(pi)**k arithmetic; the parity of
    (x, y, z) selects which of the two printed identities applies.
    """
    if x < 1 or y < 1 or z < 1:
        raise ValueError("requires x, y, z >= 1")
    params = (x, y, z, a, b, c, m)
    if (x - y) % 2 == 0 and (y - z) % 2 == 0:
        lhs = sc_rhs(x, y, z, a, b, c, m) * sc_rhs(x, z - 1, y - 1, a, c, b, m)
        rhs = sc_rhs(z - 1, x, y, c, a, b, m) * sc_rhs(y - 1, z, x, b, c, a, m) + sc_rhs(
            x - 1, z, y, a, c, b, m
        ) * sc_rhs(x + 1, y - 1, z - 1, a, b, c, m)
        return _compare("r_identity_same", params, lhs, rhs)
    if (y - z) % 2 != 0:
        raise ValueError("requires x, y, z of the same parity, or y and z of equal parity")
    lhs = sc_rhs(x, y, z, a, b, c, m) * sc_rhs(x, y - 1, z - 1, a, b, c, m)
    rhs = sc_rhs(y, x, z - 1, b, a, c, m) * sc_rhs(z, y - 1, x, c, b, a, m) + sc_rhs(
        x - 1, y, z, a, b, c, m
    ) * sc_rhs(x + 1, y - 1, z - 1, a, b, c, m)
    return _compare("r_identity_mixed", params, lhs, rhs)


def check_cancellation(twice_x: int, twice_y: int) -> VerificationReport:
    """The hyperfactorial cancellation rule at x = twice_x/2, y = twice_y/2.

    H(ceil(x+y)) H(floor(x+y)) / (H(ceil(x-1/2)+y) H(floor(x-1/2)+y))
    equals Gamma(ceil(x+y)).  The rule holds for x an integer or
    half-integer and y an integer; half-integer y mixes integer and
    half-integer hyperfactorials and leaves stray sqrt(pi) powers, so such
    pairs are reported as out of domain.  Arguments that would require a
    negative hyperfactorial are likewise skipped.
    """
    params = (twice_x, twice_y)
    x, y = Fraction(twice_x, 2), Fraction(twice_y, 2)
    if y.denominator != 1:
        return _skip("cancellation", params, "y must be an integer")
    low = min(x + y, math.floor(x - Fraction(1, 2)) + y)
    if low < 0 or math.ceil(x + y) < 1:
        return _skip("cancellation", params, "argument out of range")
    return _compare(
        "cancellation", params, gamma_halfint(math.ceil(x + y)), cancellation_lhs(x, y)
    )


# ---------------------------------------------------------------------------
# base-case factorizations, oracle on both sides
# ---------------------------------------------------------------------------


def check_base_cases(
    limit: int = 2, even_limit: int | None = None, max_cells: int | None = None
) -> Iterator[VerificationReport]:
    """Factorization checks pinning the hole geometry.

    base_disjoint_hexagons: M(SC_{0,0,0}(a,b,c,m)) = P(a,b,m) P(a,c,m) P(b,c,m)
    base_magnet_split:      M(B_{0,y}(a,b,c,m)) = P(a,c,m) P(b,y+c,m)
    base_sc_even:   M(SC_{x,y,0}) = P(m, x/2+b, y/2+a) M(B_{x/2,y/2}(a,b,c,m)),
                    x, y even
    base_sc_x0_odd: M(SC_{0,y,z}) = P(m, (y+1)/2+c, (z-1)/2+b)
                    M(B_{(y-1)/2,(z+1)/2}(b,c,a,m)), y, z odd
    base_sc_z0_odd: M(SC_{x,y,0}) = P(m, (x-1)/2+b, y/2+a)
                    M(B_{(x+1)/2,y/2}(a,b,c,m)), x odd, y even
    """
    rng = range(limit + 1)
    evens = range(0, (even_limit if even_limit is not None else limit) + 1, 2)
    odds = range(1, limit + 1, 2)

    def counted(check, params, region, factors):
        if max_cells is not None and region.cell_count > max_cells:
            return _skip(check, params, f"cells={region.cell_count}>{max_cells}")
        return _compare(check, params, factors, count_tilings(region))

    for a, b, c, m in itertools.product(rng, repeat=4):
        yield counted(
            "base_disjoint_hexagons",
            (a, b, c, m),
            build_s_cored_hexagon(0, 0, 0, a, b, c, m),
            macmahon_P(a, b, m) * macmahon_P(a, c, m) * macmahon_P(b, c, m),
        )
    for y, a, b, c, m in itertools.product(rng, repeat=5):
        yield counted(
            "base_magnet_split",
            (y, a, b, c, m),
            build_magnet_bar(0, y, a, b, c, m),
            macmahon_P(a, c, m) * macmahon_P(b, y + c, m),
        )
    for x, y in itertools.product(evens, repeat=2):
        for a, b, c, m in itertools.product(rng, repeat=4):
            yield counted(
                "base_sc_even",
                (x, y, a, b, c, m),
                build_s_cored_hexagon(x, y, 0, a, b, c, m),
                macmahon_P(m, x // 2 + b, y // 2 + a)
                * count_tilings(build_magnet_bar(x // 2, y // 2, a, b, c, m)),
            )
    for y, z in itertools.product(odds, repeat=2):
        for a, b, c, m in itertools.product(rng, repeat=4):
            yield counted(
                "base_sc_x0_odd",
                (y, z, a, b, c, m),
                build_s_cored_hexagon(0, y, z, a, b, c, m),
                macmahon_P(m, (y + 1) // 2 + c, (z - 1) // 2 + b)
                * count_tilings(build_magnet_bar((y - 1) // 2, (z + 1) // 2, b, c, a, m)),
            )
    for x in odds:
        for y in evens:
            for a, b, c, m in itertools.product(rng, repeat=4):
                yield counted(
                    "base_sc_z0_odd",
                    (x, y, a, b, c, m),
                    build_s_cored_hexagon(x, y, 0, a, b, c, m),
                    macmahon_P(m, (x - 1) // 2 + b, y // 2 + a)
                    * count_tilings(build_magnet_bar((x + 1) // 2, y // 2, a, b, c, m)),
                )


# ---------------------------------------------------------------------------
# asymptotic ratios
# ---------------------------------------------------------------------------


def ratio_convergence(
    a: int, b: int, c: int, m: int, n_values: Iterable[int]
) -> Iterator[tuple[int, float, float]]:
    """Stream (N, finite ratio, |finite/limit - 1|) along increasing N.

    The finite ratio M(SC_{N,N,N}(a,b,c,m)) / M(SC_{N,N,N}(a+b+c,0,0,m)) is
    evaluated in log-space; the limit is the exact shamrock ratio.
    """
    limit = float(shamrock_ratio(a, b, c, m))
    for n in n_values:
        value = finite_shamrock_ratio(a, b, c, m, n)
        yield n, value, abs(value / limit - 1.0)


# ---------------------------------------------------------------------------
# default suites for the command line
# ---------------------------------------------------------------------------

SUITES = ("formulas", "kuo", "identities", "bases", "all")


def _iter_formula_suite(max_cells: int | None) -> Iterator[VerificationReport]:
    yield from verify_formula_vs_oracle("hexagon", [range(4)] * 3, max_cells)
    yield from verify_formula_vs_oracle("cored", [range(4)] * 3 + [range(3)], max_cells)
    yield from verify_formula_vs_oracle(
        "sc", [range(3)] * 3 + [range(2)] * 4, max_cells
    )
    yield from verify_formula_vs_oracle("magnet", [range(2)] * 6, max_cells)


def _iter_kuo_suite(max_cells: int | None) -> Iterator[VerificationReport]:
    for x, y, b in itertools.product(range(1, 3), repeat=3):
        for a, c, m in itertools.product(range(2), repeat=3):
            yield check_kuo_magnet(x, y, a, b, c, m, max_cells)
    for x, y, z in itertools.product(range(1, 3), repeat=3):
        if (y - z) % 2 != 0:
            continue
        for a, b, c, m in itertools.product(range(2), repeat=4):
            yield check_kuo_sc(x, y, z, a, b, c, m, max_cells)


def _iter_identity_suite() -> Iterator[VerificationReport]:
    for x, y, z in itertools.product(range(1, 5), repeat=3):
        if (y - z) % 2 != 0:
            continue
        for a, b, c, m in itertools.product(range(3), repeat=4):
            yield check_R_identity(x, y, z, a, b, c, m)
    for twice_x in range(0, 21):
        for twice_y in range(0, 21):
            yield check_cancellation(twice_x, twice_y)


def iter_suite(suite: str, max_cells: int | None = None) -> Iterator[VerificationReport]:
    """Reports for one named verification suite (or 'all')."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {SUITES}")
    if suite in ("formulas", "all"):
        yield from _iter_formula_suite(max_cells)
    if suite in ("kuo", "all"):
        yield from _iter_kuo_suite(max_cells)
    if suite in ("identities", "all"):
        yield from _iter_identity_suite()
    if suite in ("bases", "all"):
        yield from check_base_cases(2, max_cells=max_cells)
