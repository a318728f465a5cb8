"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 parse error, 3 invalid
region, 4 invalid shuffle, 5 bad argument.
"""

from __future__ import annotations

import argparse
import json
import sys
from itertools import islice
from typing import Optional, Sequence

from . import formulas, oracle, shuffle
from .descriptors import loads, region_from_obj, region_to_obj, shuffle_from_obj
from .errors import DomainError, ParseError, RegionError, ShuffleError
from .exact import coeff_strings, evaluate
from .regions import DentedHexagon, build_cells, is_centrally_symmetric
from .render import render_ascii, render_svg
from .verify import run_suites, summarize

EXIT_OK, EXIT_VERIFY, EXIT_PARSE, EXIT_REGION, EXIT_SHUFFLE, EXIT_ARG = 0, 1, 2, 3, 4, 5

# Regions up to this many unit triangles are cross-checked by enumeration by default.
CELL_BUDGET = 60


class CliError(Exception):
    def __init__(self, code: int, message: str, clause: Optional[str] = None):
        super().__init__(message)
        self.code, self.clause = code, clause


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise CliError(EXIT_ARG, f"cannot read {path}: {exc.strerror}") from None


def _load_region(path: str):
    try:
        return region_from_obj(loads(_read(path)))
    except NotImplementedError as exc:
        raise CliError(EXIT_PARSE, str(exc)) from None
    except ParseError as exc:
        raise CliError(EXIT_PARSE, str(exc)) from None
    except RegionError as exc:
        raise CliError(EXIT_REGION, str(exc), exc.clause) from None


def _load_shuffle(path: str) -> shuffle.ShuffleInstance:
    try:
        source, Xp, Yp = shuffle_from_obj(loads(_read(path)))
    except NotImplementedError as exc:
        raise CliError(EXIT_PARSE, str(exc)) from None
    except ParseError as exc:
        raise CliError(EXIT_PARSE, str(exc)) from None
    except RegionError as exc:
        raise CliError(EXIT_REGION, str(exc), exc.clause) from None
    except ShuffleError as exc:
        raise CliError(EXIT_SHUFFLE, str(exc)) from None
    try:
        return shuffle.make_shuffle(source, Xp, Yp)
    except ShuffleError as exc:
        raise CliError(EXIT_SHUFFLE, str(exc)) from None
    except RegionError as exc:
        raise CliError(EXIT_SHUFFLE, f"target region invalid: {exc}", exc.clause) from None


def _method(requested: str, grid) -> str:
    if requested != "auto":
        return requested
    return "both" if len(grid) <= CELL_BUDGET else "formula"


def _emit(report: dict) -> None:
    sys.stdout.write(json.dumps(report, indent=2, sort_keys=True) + "\n")


def _formula_count(region) -> int:
    if isinstance(region, DentedHexagon):
        return formulas.hex_count(region)
    return formulas.clp_count(region)


def _formula_gf(region):
    if isinstance(region, DentedHexagon):
        return formulas.hex_count_q(region)
    S = region.S
    return formulas.schur_principal(S).shift(sum(S) - region.n * (region.n + 1) // 2)


def _compare(method: str, formula_fn, oracle_fn):
    """Run the requested paths; returns (value, agree-or-None)."""
    values = []
    if method in ("formula", "both"):
        values.append(formula_fn())
    if method in ("oracle", "both"):
        values.append(oracle_fn())
    agree = values[0] == values[1] if len(values) == 2 else None
    return values[0], agree


def cmd_count(args) -> int:
    region = _load_region(args.region)
    grid = build_cells(region)
    method = _method(args.method, grid)
    value, agree = _compare(method, lambda: _formula_count(region),
                            lambda: oracle.count_tilings(grid))
    _emit({"region": region_to_obj(region), "count": str(value), "method": method,
           "agree": agree})
    return EXIT_VERIFY if agree is False else EXIT_OK


def cmd_count_q(args) -> int:
    region = _load_region(args.region)
    grid = build_cells(region)
    method = _method(args.method, grid)
    gf, agree = _compare(method, lambda: _formula_gf(region),
                         lambda: oracle.generating_function_q(grid))
    _emit({"region": region_to_obj(region), "coeffs": coeff_strings(gf),
           "count": str(evaluate(gf, 1)), "method": method, "agree": agree})
    return EXIT_VERIFY if agree is False else EXIT_OK


def cmd_sym_count(args) -> int:
    region = _load_region(args.region)
    if not isinstance(region, DentedHexagon) or not is_centrally_symmetric(region):
        raise CliError(EXIT_REGION, "region is not centrally symmetric", "central symmetry")
    grid = build_cells(region)
    method = _method(args.method, grid)
    value, agree = _compare(method, lambda: formulas.sym_count(region),
                            lambda: oracle.count_centrally_symmetric(grid))
    _emit({"region": region_to_obj(region), "count": str(value), "method": method,
           "agree": agree})
    return EXIT_VERIFY if agree is False else EXIT_OK


def _shuffle_header(s: shuffle.ShuffleInstance, mode: str) -> dict:
    return {"mode": mode, "source": region_to_obj(s.source), "target": region_to_obj(s.target),
            "d": s.d, "u": s.u}


def cmd_ratio(args) -> int:
    s = _load_shuffle(args.shuffle)
    report = _shuffle_header(s, args.mode)
    if args.mode == "plain":
        src, tgt = formulas.hex_count(s.source), formulas.hex_count(s.target)
        ratio = shuffle.ratio_unweighted(s)
        verified = shuffle.unweighted_identity(s, src, tgt)
        report.update(ratio=str(ratio), source_count=str(src), target_count=str(tgt))
    elif args.mode == "weighted":
        R = shuffle.ratio_weighted(s)
        verified = R.relates(formulas.hex_count_q(s.source), formulas.hex_count_q(s.target))
        verified = verified and R.at_one() == shuffle.ratio_unweighted(s)
        report.update({"alpha": R.shift, "num-coeffs": coeff_strings(R.numerator),
                       "den-coeffs": coeff_strings(R.denominator), "at_one": str(R.at_one())})
    else:
        try:
            ratio = shuffle.ratio_symmetric(s)
        except (RegionError, ShuffleError) as exc:
            raise CliError(EXIT_SHUFFLE, str(exc)) from None
        src, tgt = formulas.sym_count(s.source), formulas.sym_count(s.target)
        squared = ratio ** 2 == shuffle.ratio_unweighted(s)
        verified = shuffle.symmetric_identity(s, src, tgt) and squared
        report.update(ratio=str(ratio), source_sym_count=str(src), target_sym_count=str(tgt),
                      squared_equals_plain=squared, both_zero=(src == 0 and tgt == 0))
    report["verified"] = verified
    _emit(report)
    return EXIT_OK if verified else EXIT_VERIFY


def cmd_verify(args) -> int:
    if args.max_size < 0 or args.cases < 0:
        raise CliError(EXIT_ARG, "--max-size and --cases must be nonnegative")
    summary = summarize(run_suites(args.max_size, args.seed, args.cases))
    summary.update(max_size=args.max_size, seed=args.seed, cases=args.cases)
    _emit(summary)
    return EXIT_OK if summary["passed"] else EXIT_VERIFY


def cmd_render(args) -> int:
    region = _load_region(args.region)
    grid = build_cells(region)
    tiling = None
    if args.tiling is not None:
        if args.tiling < 0:
            raise CliError(EXIT_ARG, f"tiling index {args.tiling} is negative")
        tiling = next(islice(oracle.enumerate_tilings(grid), args.tiling, None), None)
        if tiling is None:
            raise CliError(EXIT_ARG, f"tiling index {args.tiling} out of range")
    title = str(region) + ("" if tiling is None else f" tiling {args.tiling}")
    draw = render_svg if args.format == "svg" else render_ascii
    sys.stdout.write(draw(grid, tiling, title))
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_ARG)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="lozenge-shuffle", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    methods = ("auto", "formula", "oracle", "both")
    for name, fn, help_ in (("count", cmd_count, "number of tilings"),
                            ("count-q", cmd_count_q, "q-weighted tiling generating function"),
                            ("sym-count", cmd_sym_count, "centrally symmetric tilings")):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("region", nargs="?", default="-", help="region JSON file, '-' for stdin")
        sp.add_argument("--method", choices=methods, default="auto",
                        help=f"'auto' uses both paths up to {CELL_BUDGET} cells")
        sp.set_defaults(func=fn)

    sp = sub.add_parser("ratio", help="shuffling ratio")
    sp.add_argument("shuffle", nargs="?", default="-", help="shuffle JSON file, '-' for stdin")
    sp.add_argument("--mode", choices=("plain", "weighted", "symmetric"), default="plain")
    sp.set_defaults(func=cmd_ratio)

    sp = sub.add_parser("verify", help="run the property suites")
    sp.add_argument("--max-size", type=int, default=4)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--cases", type=int, default=100)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("render", help="draw a region or one of its tilings")
    sp.add_argument("region", nargs="?", default="-")
    sp.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    sp.add_argument("--tiling", type=int, default=None, help="index in enumeration order")
    sp.set_defaults(func=cmd_render)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        err = {"error": str(exc), "exit": exc.code}
        if exc.clause:
            err["clause"] = exc.clause
        sys.stderr.write(json.dumps(err, sort_keys=True) + "\n")
        return exc.code
    except DomainError as exc:
        sys.stderr.write(json.dumps({"error": str(exc), "exit": EXIT_ARG}) + "\n")
        return EXIT_ARG


if __name__ == "__main__":
    sys.exit(main())
