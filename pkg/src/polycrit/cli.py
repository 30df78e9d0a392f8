"""Command-line front end.

Subcommands: gamma, variance, check, search, bounds-table.  Input
polynomials arrive as JSON documents with exactly one of "roots" or
"coeffs" (complex numbers as [re, im] pairs; coefficients ascending and
monic).  Output is a JSON report (or CSV for the table commands) with
17-significant-digit floats and no timestamps unless requested, so
repeated runs are byte-identical.

Exit codes: 0 all asserted checks pass, 1 proven-theorem violation
(an implementation bug), 2 usage or input error.
"""

from __future__ import annotations

import argparse
import datetime
import json
import math
import os
import sys

from . import __version__
from .checks import (
    bounds_table,
    bounds_table_csv,
    lower_asymptote,
    lower_bound,
    pawlowski_asymptote,
    pawlowski_upper,
    refined_upper,
)
from .errors import ConvergenceError, InputError
from .fuzz import ALL_SUITES, CONJECTURE_SUITES, run_suite
from .geometry import gamma, sigma_p
from .poly import RootSet
from .report import dump_json, to_jsonable
from .rootfind import DEFAULT_CONFIG, STRICT_CONFIG, find_roots
from .search import SearchConfig, maximize_gamma, sharpness_csv_line, sharpness_row, SHARPNESS_CSV_HEADER

CLI_MAX_DEGREE = 64


def _tol_profile(name: str):
    return STRICT_CONFIG if name == "strict" else DEFAULT_CONFIG


def _pairs_to_complex(raw, what: str) -> list[complex]:
    if not isinstance(raw, list) or not raw:
        raise InputError(f"{what} must be a non-empty list of [re, im] pairs")
    out = []
    for item in raw:
        if (
            not isinstance(item, list)
            or len(item) != 2
            or not all(isinstance(v, (int, float)) and math.isfinite(v) for v in item)
        ):
            raise InputError(f"{what} entries must be finite [re, im] pairs, got {item!r}")
        out.append(complex(item[0], item[1]))
    return out


def load_polynomial_spec(path: str, cfg) -> tuple[RootSet, dict]:
    """Parse a PolynomialSpec JSON file into a RootSet (from coefficients
    via the root-finder when needed) plus the input echo."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise InputError("polynomial spec must be a JSON object")
    unknown = set(data) - {"roots", "coeffs"}
    if unknown:
        raise InputError(f"unknown spec fields: {sorted(unknown)}")
    if ("roots" in data) == ("coeffs" in data):
        raise InputError("spec must contain exactly one of 'roots' or 'coeffs'")
    if "roots" in data:
        roots = _pairs_to_complex(data["roots"], "roots")
        if not (2 <= len(roots) <= CLI_MAX_DEGREE):
            raise InputError(f"degree must be between 2 and {CLI_MAX_DEGREE}, got {len(roots)}")
        return RootSet(tuple(roots)), {"roots": data["roots"]}
    coeffs = _pairs_to_complex(data["coeffs"], "coeffs")
    degree = len(coeffs) - 1
    if not (2 <= degree <= CLI_MAX_DEGREE):
        raise InputError(f"degree must be between 2 and {CLI_MAX_DEGREE}, got {degree}")
    if coeffs[-1] != 1:
        raise InputError("coeffs must be monic: last pair must be [1, 0]")
    res = find_roots(coeffs, cfg)
    if not res.converged:
        raise InputError(f"could not recover roots from coeffs (residual {res.residual:.3e})")
    return res.roots, {"coeffs": data["coeffs"]}


def _make_report(command: str, input_echo, results, seed, timestamps: bool) -> dict:
    report = {
        "command": command,
        "input": input_echo,
        "results": results,
        "seed": seed,
        "tool_version": __version__,
    }
    if timestamps:
        report["timestamp"] = datetime.datetime.now(datetime.timezone.utc).isoformat()
    return report


def _emit(text: str, out_path: str | None, append: bool = False) -> None:
    if out_path:
        mode = "a" if append else "w"
        with open(out_path, mode, encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse_degrees(text: str) -> tuple[int, ...]:
    text = text.strip()
    try:
        if ".." in text:
            lo_s, hi_s = text.split("..", 1)
            lo, hi = int(lo_s), int(hi_s)
            if lo > hi:
                raise ValueError
            degrees = tuple(range(lo, hi + 1))
        else:
            degrees = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise InputError(f"cannot parse degrees {text!r}; use '2..8' or '3,5,7'") from None
    for d in degrees:
        if not (2 <= d <= CLI_MAX_DEGREE):
            raise InputError(f"degrees must be between 2 and {CLI_MAX_DEGREE}, got {d}")
    return degrees


def _parse_p(text: str) -> float:
    if text.strip().lower() in ("inf", "infinity"):
        return math.inf
    try:
        p = float(text)
    except ValueError:
        raise InputError(f"cannot parse p={text!r}") from None
    if not (p >= 1.0):
        raise InputError(f"p must be >= 1 or 'inf', got {text!r}")
    return p


def cmd_gamma(args) -> int:
    if args.format == "csv":
        raise InputError("gamma emits a JSON report; csv is for table commands")
    cfg = _tol_profile(args.tol_profile)
    roots, echo = load_polynomial_spec(args.spec, cfg)
    rep = gamma(roots, cfg)
    results = {
        "degree": roots.n,
        "centroid": rep.centroid,
        "critical_points": rep.critical_points,
        "distances": list(rep.distances),
        "gamma": rep.gamma,
        "argmin_index": rep.argmin_index,
        "in_unit_disk": roots.in_disk(),
    }
    if roots.in_disk():
        results["bounds"] = {
            "theorem_1_1": 1.0,
            "refined_upper": refined_upper(roots.n),
            "pawlowski_upper": pawlowski_upper(roots.n),
        }
    _emit(dump_json(_make_report("gamma", echo, results, None, args.timestamps)), args.out)
    return 0


def cmd_variance(args) -> int:
    if args.format == "csv":
        raise InputError("variance emits a JSON report; csv is for table commands")
    cfg = _tol_profile(args.tol_profile)
    p = _parse_p(args.p)
    roots, echo = load_polynomial_spec(args.spec, cfg)
    res = sigma_p(roots, p)
    results = {
        "degree": roots.n,
        "p": res.p,
        "center": res.center,
        "value": res.value,
        "solver": res.solver,
        "iterations": res.iterations,
    }
    _emit(dump_json(_make_report("variance", echo, results, None, args.timestamps)), args.out)
    return 0


def cmd_check(args) -> int:
    if args.format == "csv":
        raise InputError("check emits a JSON report; csv is for table commands")
    suites = ALL_SUITES if args.suite == "all" else (args.suite,)
    degrees = _parse_degrees(args.degrees)
    cfg = _tol_profile(args.tol_profile)
    report = run_suite(
        suites,
        degrees,
        args.trials,
        seed=args.seed,
        generator=args.generator,
        radius=args.radius,
        p=_parse_p(args.p),
        workers=args.workers,
        cfg=cfg,
    )
    conjecture_flags = [f for f in report.anomalies if f.kind == "conjecture"]
    results = {
        "suites": list(report.suites),
        "degrees": list(report.degrees),
        "trials_per_degree": report.trials_per_degree,
        "generator": report.generator,
        "radius": report.radius,
        "p": report.p,
        "stats": report.stats,
        "violations": report.violations,
        "anomalies": report.anomalies,
        "errors": report.errors,
        "ok": report.ok(),
    }
    _emit(dump_json(_make_report("check", None, results, args.seed, args.timestamps)), args.out)
    if not report.ok():
        return 1
    if args.strict_conjectures and conjecture_flags:
        return 1
    return 0


def cmd_search(args) -> int:
    if not (3 <= args.n <= CLI_MAX_DEGREE):
        raise InputError(f"search degree must be between 3 and {CLI_MAX_DEGREE}")
    cfg = SearchConfig(
        n=args.n,
        restarts=args.restarts,
        local_iters=args.local_iters,
        seed=args.seed,
    )
    result = maximize_gamma(cfg, workers=args.workers)
    results = {
        "n": result.n,
        "best_gamma": result.best_gamma,
        "best_roots": result.best_roots,
        "lower_bound": result.lower_bound,
        "refined_upper": result.refined_upper,
        "restarts_run": result.restarts_run,
        "evaluations": result.evaluations,
        "history": [[i, g] for i, g in result.history],
    }
    sys.stdout.write(dump_json(_make_report("search", None, results, args.seed, args.timestamps)))
    if args.out:
        row = sharpness_csv_line(sharpness_row(result))
        need_header = not os.path.exists(args.out) or os.path.getsize(args.out) == 0
        with open(args.out, "a", encoding="utf-8", newline="\n") as fh:
            if need_header:
                fh.write(SHARPNESS_CSV_HEADER + "\n")
            fh.write(row + "\n")
    return 0


def cmd_bounds_table(args) -> int:
    if args.n_list:
        try:
            n_values = [int(tok) for tok in args.n_list.split(",")]
        except ValueError:
            raise InputError(f"cannot parse --n-list {args.n_list!r}") from None
    else:
        try:
            lo_s, hi_s = args.n_range.split("..", 1)
            n_values = list(range(int(lo_s), int(hi_s) + 1))
        except ValueError:
            raise InputError(f"cannot parse --n-range {args.n_range!r}") from None
    if not n_values or any(n < 2 for n in n_values):
        raise InputError("bounds-table requires n >= 2")
    rows = bounds_table(n_values)

    # Proven ordering: the refined bound strictly improves Pawlowski's for n >= 3.
    comparison_ok = all(row.refined_upper < row.pawlowski_upper for row in rows if row.n >= 3)
    if args.format == "csv":
        _emit(bounds_table_csv(rows), args.out)
        return 0 if comparison_ok else 1
    ratios = []
    for row in rows:
        ln_over = math.log(row.n) / row.n
        ratios.append(
            {
                "n": row.n,
                "lower_gap_ratio": (1.0 - row.lower) / ln_over,
                "pawlowski_gap_ratio": (1.0 - row.pawlowski_upper) / (0.5 * ln_over**2),
            }
        )
    results = {
        "rows": rows,
        "refined_below_pawlowski": comparison_ok,
        "asymptotic_ratios": ratios,
    }
    _emit(dump_json(_make_report("bounds-table", None, results, None, args.timestamps)), args.out)
    return 0 if comparison_ok else 1


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--out", default=None, help="write output to this path instead of stdout")
    sub.add_argument("--format", choices=("json", "csv"), default="json")
    sub.add_argument("--tol-profile", choices=("default", "strict"), default="default")
    sub.add_argument("--timestamps", action="store_true", help="include a timestamp (breaks byte-reproducibility)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polycrit",
        description="Zero/critical-point geometry of complex polynomials: "
        "variances, centroid-disk radii, inequality fuzzing, extremal search.",
    )
    parser.add_argument("--version", action="version", version=f"polycrit {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_gamma = sub.add_parser("gamma", help="centroid-to-critical-point distances for one polynomial")
    p_gamma.add_argument("spec", help="PolynomialSpec JSON file")
    _add_common(p_gamma)
    p_gamma.set_defaults(func=cmd_gamma)

    p_var = sub.add_parser("variance", help="p-variance of the zeros of one polynomial")
    p_var.add_argument("spec", help="PolynomialSpec JSON file")
    p_var.add_argument("--p", default="2", help="exponent >= 1, or 'inf'")
    _add_common(p_var)
    p_var.set_defaults(func=cmd_variance)

    p_check = sub.add_parser("check", help="run seeded fuzz suites over random configurations")
    p_check.add_argument(
        "--suite",
        choices=("schoenberg", "thm11", "thm-mt", "thm-mt1", "pawlowski", "borcea", "averaging", "all"),
        default="all",
    )
    p_check.add_argument("--trials", type=int, default=1000, help="trials per degree")
    p_check.add_argument("--degrees", default="2..8", help="'2..8' or '3,5,7'")
    p_check.add_argument("--seed", type=int, default=0)
    p_check.add_argument("--p", default="2", help="exponent for the borcea suite")
    p_check.add_argument("--generator", choices=("disk", "collinear"), default="disk")
    p_check.add_argument("--radius", type=float, default=1.0)
    p_check.add_argument("--workers", type=int, default=1)
    p_check.add_argument(
        "--strict-conjectures",
        action="store_true",
        help="exit 1 on surviving conjecture counterexample candidates",
    )
    _add_common(p_check)
    p_check.set_defaults(func=cmd_check)

    p_search = sub.add_parser("search", help="estimate sup gamma over in-disk configurations")
    p_search.add_argument("--n", type=int, required=True)
    p_search.add_argument("--restarts", type=int, default=64)
    p_search.add_argument("--local-iters", type=int, default=2000)
    p_search.add_argument("--seed", type=int, default=0)
    p_search.add_argument("--workers", type=int, default=1)
    _add_common(p_search)
    p_search.set_defaults(func=cmd_search)

    p_bounds = sub.add_parser("bounds-table", help="evaluate the degree-n bound formulas")
    group = p_bounds.add_mutually_exclusive_group(required=True)
    group.add_argument("--n-list", default=None, help="'2,3,10'")
    group.add_argument("--n-range", default=None, help="'2..64'")
    _add_common(p_bounds)
    p_bounds.set_defaults(func=cmd_bounds_table)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ConvergenceError as exc:
        print(f"error: solver failed to converge: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
