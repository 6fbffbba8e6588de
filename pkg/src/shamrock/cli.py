"""Command-line front end.

Subcommands:
    count    oracle tiling count of a region
    formula  closed-form count for the same families
    verify   stream JSON-line reports for a verification suite
    ratio    exact shamrock-exterior ratio, factored into hexagon counts
    omega    correlation of S(m,0,0,m), in the limit or at finite size
    render   write a region (optionally with one tiling) as SVG

Counts are printed as exact decimal strings.  Exit codes: 0 success,
1 verification failure or unsatisfiable request, 2 usage error.  The
environment variable SHAMROCK_MAX_CELLS overrides the oracle cell budget.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from shamrock.counting import (
    DEFAULT_MAX_CELLS,
    RegionTooLargeError,
    count_tilings,
    find_one_tiling,
)
from shamrock.formulas import (
    macmahon_P,
    magnet_bar_formula,
    omega_finite,
    omega_single,
    sc_formula,
    shamrock_ratio,
    shamrock_ratio_factored,
)
from shamrock.lattice import FAMILIES, FAMILY_ARITY, build_region
from shamrock.render import render_svg
from shamrock.verify import SUITES, iter_suite


def _budget(args: argparse.Namespace) -> int:
    if getattr(args, "max_cells", None) is not None:
        return args.max_cells
    env = os.environ.get("SHAMROCK_MAX_CELLS")
    if env is not None:
        return int(env)
    return DEFAULT_MAX_CELLS


def _parse_params(parser: argparse.ArgumentParser, family: str, text: str) -> tuple[int, ...]:
    try:
        params = tuple(int(p) for p in text.split(","))
    except ValueError:
        parser.error(f"--params must be a comma list of integers, got {text!r}")
    if len(params) != FAMILY_ARITY[family]:
        parser.error(
            f"family {family!r} takes {FAMILY_ARITY[family]} parameters "
            f"(got {len(params)})"
        )
    if any(p < 0 for p in params):
        parser.error("parameters must be nonnegative")
    return params


def _closed_form(family: str, params: tuple[int, ...]) -> int:
    if family == "hexagon":
        s1, s2, s3, s4, s5, s6 = params
        if s1 + s2 != s4 + s5 or s2 + s3 != s5 + s6:
            raise ValueError(f"hexagon sides {params} violate the closure conditions")
        if (s1, s2, s3) != (s4, s5, s6):
            return 0  # unbalanced hexagon, no tilings
        return macmahon_P(s1, s2, s3)
    if family == "shamrock":
        return 1 if not any(params) else 0  # a nonempty shamrock has no tilings
    if family == "cored":
        x, y, z, m = params
        return sc_formula(x, y, z, 0, 0, 0, m)
    if family == "sc":
        return sc_formula(*params)
    return magnet_bar_formula(*params)


def _emit_count(args: argparse.Namespace, value: int) -> None:
    if args.json:
        print(
            json.dumps(
                {"family": args.family, "params": list(args.params), "count": str(value)}
            )
        )
    else:
        print(value)


def _cmd_count(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    try:
        region = build_region(args.family, args.params)
        value = count_tilings(region, _budget(args))
    except RegionTooLargeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        parser.error(str(exc))
    _emit_count(args, value)
    return 0


def _cmd_formula(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    try:
        value = _closed_form(args.family, args.params)
    except ValueError as exc:
        parser.error(str(exc))
    _emit_count(args, value)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    failed = False
    for report in iter_suite(args.suite, _budget(args)):
        print(report.to_json())
        failed = failed or report.failed
    return 1 if failed else 0


def _cmd_ratio(args: argparse.Namespace) -> int:
    a, b, c, m = args.a, args.b, args.c, args.m
    if args.N is not None:
        from shamrock.formulas import finite_shamrock_ratio

        print(f"{finite_shamrock_ratio(a, b, c, m, args.N):.12g}")
        return 0
    value = shamrock_ratio(a, b, c, m)
    p1, p2 = shamrock_ratio_factored(a, b, c, m)
    print(f"{value} = P({a},{b},{m})*P({a + b},{c},{m})")
    return 0 if value == p1 * p2 else 1


def _cmd_omega(args: argparse.Namespace) -> int:
    if args.x is not None:
        print(f"{omega_finite(args.m, args.x):.12g}")
    else:
        print(f"{omega_single(args.m):.12g}")
    return 0


def _cmd_render(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    try:
        region = build_region(args.family, args.params)
    except ValueError as exc:
        parser.error(str(exc))
    tiling = None
    if args.tiling:
        try:
            tiling = find_one_tiling(region, _budget(args))
        except RegionTooLargeError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
        if tiling is None:
            print("error: region has no lozenge tiling", file=sys.stderr)
            return 1
    with open(args.out, "w", encoding="utf-8") as handle:
        handle.write(render_svg(region, tiling))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shamrock",
        description="Exact lozenge-tiling counts, formulas and verification sweeps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_region_args(p: argparse.ArgumentParser) -> None:
        p.add_argument("--family", required=True, choices=FAMILIES)
        p.add_argument(
            "--params",
            required=True,
            help="comma list, e.g. hexagon: s1..s6; cored: x,y,z,m; "
            "sc: x,y,z,a,b,c,m; magnet: x,y,a,b,c,m; shamrock: a,b,c,m",
        )

    p_count = sub.add_parser("count", help="oracle tiling count")
    add_region_args(p_count)
    p_count.add_argument("--json", action="store_true")
    p_count.add_argument("--max-cells", type=int, default=None)

    p_formula = sub.add_parser("formula", help="closed-form tiling count")
    add_region_args(p_formula)
    p_formula.add_argument("--json", action="store_true")

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("--suite", required=True, choices=SUITES)
    p_verify.add_argument("--max-cells", type=int, default=None)

    p_ratio = sub.add_parser("ratio", help="shamrock exterior count ratio")
    for flag in "abcm":
        p_ratio.add_argument(f"--{flag}", type=int, required=True)
    p_ratio.add_argument("--N", type=int, default=None, help="finite-size ratio at N")

    p_omega = sub.add_parser("omega", help="correlation of S(m,0,0,m)")
    p_omega.add_argument("--m", type=int, required=True)
    p_omega.add_argument("--x", type=int, default=None, help="finite-size value at x")

    p_render = sub.add_parser("render", help="write the region as SVG")
    add_region_args(p_render)
    p_render.add_argument("--out", required=True)
    p_render.add_argument("--tiling", action="store_true", help="overlay one tiling")
    p_render.add_argument("--max-cells", type=int, default=None)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if hasattr(args, "family"):
        args.params = _parse_params(parser, args.family, args.params)
        if any(p < 0 for p in args.params):
            parser.error("parameters must be nonnegative")
    if args.command == "count":
        return _cmd_count(parser, args)
    if args.command == "formula":
        return _cmd_formula(parser, args)
    if args.command == "verify":
        return _cmd_verify(args)
    if args.command == "ratio":
        return _cmd_ratio(args)
    if args.command == "omega":
        return _cmd_omega(args)
    return _cmd_render(parser, args)


if __name__ == "__main__":
    sys.exit(main())
