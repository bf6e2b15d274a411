"""Command-line interface: verify identities, dump field strengths,
apply gauge transformations.

Subcommands
    verify     run named exactness checks and emit a deterministic report
    curvature  dump field-strength components (generic and closed form)
    gauge      dump a gauge-transformed potential

Defaults can be overridden with ``QYM_``-prefixed environment variables
(``QYM_SEED``, ``QYM_KMIN``, ``QYM_KMAX``, ``QYM_SOLUTION``, ``QYM_FORMAT``,
``QYM_OUT``); explicit flags win over the environment.

Exit codes: 0 success, 1 check failure, 2 invalid configuration,
3 unknown check name, 4 unwritable output path, 5 singular gauge.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import __version__
from .chains import AXES
from .checks import RunConfig, check_names, run_checks
from .forms import SingularCoefficientError, Window
from .gauge import PAIRS, GaugeTransform, curvature, gauge_transform
from .quaternion import Quaternion
from .report import build_report, render_csv, render_json, render_rows_csv
from .sampling import random_su2_connection
from .scalars import rat_str
from .solutions import (VARIANTS, build_connection, closed_field_strength,
                        coordinate_inverse_form, flat_connection,
                        gauge_at_infinity_forms, pure_gauge_connection)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_BAD_CONFIG = 2
EXIT_UNKNOWN_CHECK = 3
EXIT_OUTPUT_ERROR = 4
EXIT_SINGULAR_GAUGE = 5

_SOLUTIONS = VARIANTS + ("flat", "pure-gauge", "random")


def _env(name: str, default):
    return os.environ.get(f"QYM_{name}", default)


def _env_bounds(name: str, default):
    raw = os.environ.get(f"QYM_{name}")
    if raw is None:
        return default
    return [int(v) for v in raw.split()]


def _bounds(values, flag: str) -> tuple:
    if values is None:
        raise ValueError(f"missing {flag}")
    vals = [int(v) for v in values]
    if len(vals) == 1:
        vals = vals * 4
    if len(vals) != 4:
        raise ValueError(f"{flag} takes one or four integers")
    return tuple(vals)


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--kmin", nargs="+", default=_env_bounds("KMIN", [-3]),
                        metavar="K", help="lower window bound (one or four ints)")
    parser.add_argument("--kmax", nargs="+", default=_env_bounds("KMAX", [3]),
                        metavar="K", help="upper window bound (one or four ints)")
    parser.add_argument("--solution", default=_env("SOLUTION", "anti-instanton"),
                        choices=_SOLUTIONS)
    parser.add_argument("--seed", type=int, default=int(_env("SEED", 7)))
    parser.add_argument("--format", dest="out_format",
                        default=_env("FORMAT", "json"), choices=("json", "csv"))
    parser.add_argument("--out", default=_env("OUT", None),
                        help="write the report here instead of stdout")


def _make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qym",
        description="exact verification of discrete quaternionic gauge identities")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run exactness checks")
    _add_common(verify)
    verify.add_argument("--check", action="append", default=[],
                        metavar="NAME",
                        help=f"check to run (repeatable); one of: "
                             f"{', '.join(check_names())}")
    verify.add_argument("--all", action="store_true",
                        help="run every registered check")
    verify.add_argument("--list", action="store_true",
                        help="list available checks and exit")

    curv = sub.add_parser("curvature", help="dump field-strength components")
    _add_common(curv)
    curv.add_argument("--k", nargs=4, type=int, metavar="K",
                      help="dump a single lattice point instead of the window")

    gauge = sub.add_parser("gauge", help="dump a transformed potential")
    _add_common(gauge)
    gauge.add_argument("--g", default="identity",
                       choices=("identity", "inverse-x"),
                       help="gauge transformation to apply")
    return parser


def _config_from_args(args) -> RunConfig:
    return RunConfig(
        kmin=_bounds(args.kmin, "--kmin"),
        kmax=_bounds(args.kmax, "--kmax"),
        solution=args.solution,
        seed=args.seed,
        checks=tuple(getattr(args, "check", ()) or ()),
        out_format=args.out_format,
        out_path=args.out,
    )


def _emit(text: str, path: str | None) -> int:
    if path is None:
        sys.stdout.write(text)
        return EXIT_OK
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: cannot write report to {path}: {exc}", file=sys.stderr)
        return EXIT_OUTPUT_ERROR
    return EXIT_OK


def _solution_connection(config: RunConfig):
    if config.solution in VARIANTS:
        return build_connection(config.solution)
    if config.solution == "flat":
        return flat_connection()
    if config.solution == "pure-gauge":
        return pure_gauge_connection()
    from random import Random
    window = Window(config.kmin, tuple(h + 1 for h in config.kmax))
    return random_su2_connection(Random(f"{config.seed}:solution"), window)


def _cmd_verify(args) -> int:
    config = _config_from_args(args)
    if args.list:
        for name in check_names():
            print(name)
        return EXIT_OK
    names = check_names() if (args.all or not config.checks) else config.checks
    try:
        results = run_checks(config, names)
    except KeyError as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return EXIT_UNKNOWN_CHECK
    for r in sorted(results, key=lambda r: r.name):
        status = "PASS" if r.passed else "FAIL"
        print(f"{status} {r.name}: {r.points_checked} points, "
              f"worst residual {rat_str(r.worst_residual)}, "
              f"{r.elapsed_s:.2f}s [{r.region}]", file=sys.stderr)
    text = render_json(build_report(config, results)) \
        if config.out_format == "json" else render_csv(results)
    code = _emit(text, config.out_path)
    if code != EXIT_OK:
        return code
    return EXIT_OK if all(r.passed for r in results) else EXIT_CHECK_FAILED


_CURVATURE_FIELDS = ("k1", "k2", "k3", "k4", "i", "j",
                     "generic_1", "generic_i", "generic_j", "generic_k",
                     "closed_1", "closed_i", "closed_j", "closed_k",
                     "difference")


def _quaternion_cols(prefix: str, q: Quaternion | None) -> dict:
    units = ("1", "i", "j", "k")
    if q is None:
        return {f"{prefix}_{u}": "" for u in units}
    return {f"{prefix}_{u}": rat_str(c)
            for u, c in zip(units, q.components())}


def _cmd_curvature(args) -> int:
    config = _config_from_args(args)
    window = Window(args.k, args.k) if args.k else config.window()
    conn = _solution_connection(config)
    generic = curvature(conn).form
    has_closed = config.solution in VARIANTS or config.solution == "flat"
    rows = []
    try:
        for k in window.indices():
            closed = closed_field_strength(config.solution, k) \
                if config.solution in VARIANTS else None
            for (i, j) in PAIRS:
                g = generic.coefficient(k, (i, j))
                if config.solution == "flat":
                    c = Quaternion.ZERO
                elif closed is not None:
                    c = closed[(i, j)]
                else:
                    c = None
                row = {"k1": k[0], "k2": k[1], "k3": k[2], "k4": k[3],
                       "i": i, "j": j}
                row.update(_quaternion_cols("generic", g))
                row.update(_quaternion_cols("closed", c))
                row["difference"] = rat_str((g - c).norm_sq()) \
                    if c is not None else ""
                rows.append(row)
    except SingularCoefficientError as exc:
        print(f"error: singular gauge at index {exc.index}", file=sys.stderr)
        return EXIT_SINGULAR_GAUGE
    if config.out_format == "csv":
        text = render_rows_csv(_CURVATURE_FIELDS, rows)
    else:
        text = render_json({"tool_version": __version__,
                            "config": {"solution": config.solution,
                                       "kmin": list(window.lo),
                                       "kmax": list(window.hi),
                                       "seed": config.seed},
                            "rows": rows})
    if has_closed and any(row["difference"] not in ("", "0/1") for row in rows):
        _emit(text, config.out_path)
        print("error: generic and closed-form field strengths disagree",
              file=sys.stderr)
        return EXIT_CHECK_FAILED
    return _emit(text, config.out_path)


_GAUGE_FIELDS = ("k1", "k2", "k3", "k4", "axis",
                 "component_1", "component_i", "component_j", "component_k")


def _cmd_gauge(args) -> int:
    config = _config_from_args(args)
    window = config.window()
    conn = _solution_connection(config)
    if args.g == "identity":
        transform = GaugeTransform.identity()
    else:
        transform = GaugeTransform.general(coordinate_inverse_form())
    try:
        transformed = gauge_transform(conn, transform)
        rows = []
        for k in window.indices():
            for axis in AXES:
                row = {"k1": k[0], "k2": k[1], "k3": k[2], "k4": k[3],
                       "axis": axis}
                row.update(_quaternion_cols(
                    "component", transformed.potential.coefficient(k, (axis,))))
                rows.append(row)
        verdict = None
        if args.g == "inverse-x" and config.solution == "anti-instanton":
            lhs, rhs = gauge_at_infinity_forms()
            verdict = lhs.equals_on(rhs, window)
    except SingularCoefficientError as exc:
        print(f"error: singular gauge at index {exc.index}", file=sys.stderr)
        return EXIT_SINGULAR_GAUGE
    if config.out_format == "csv":
        text = render_rows_csv(_GAUGE_FIELDS, rows)
    else:
        document = {"tool_version": __version__,
                    "config": {"solution": config.solution, "g": args.g,
                               "kmin": list(window.lo),
                               "kmax": list(window.hi)},
                    "rows": rows}
        if verdict is not None:
            document["inversion_identity_holds"] = verdict
        text = render_json(document)
    if verdict is not None:
        print(f"inversion identity on {window.lo}..{window.hi}: "
              f"{'PASS' if verdict else 'FAIL'}", file=sys.stderr)
        if not verdict:
            _emit(text, config.out_path)
            return EXIT_CHECK_FAILED
    return _emit(text, config.out_path)


def main(argv=None) -> int:
    parser = _make_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "curvature":
            return _cmd_curvature(args)
        return _cmd_gauge(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_CONFIG


if __name__ == "__main__":
    sys.exit(main())
