"""Command-line entry point.

Subcommands: count-zeros, detect-special, construct, count-coplanar,
count-collinear, count-circles, fit-exponent.  Exit codes: 0 success,
1 domain error (reported as `error:<code>: message` on stderr), 2 usage
error.  All randomness flows from --seed (default 1729), so runs are
reproducible by default.  A flat key=value file passed via --config supplies
defaults that explicit flags override.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import constructions, fileio, geometry, harness, separability, zerocount
from .polynomials import PolyParseError, parse_poly
from .separability import DegenerateSurfaceError

DEFAULT_SEED = 1729

_VARS = ("x", "y", "s", "t")


class DomainError(Exception):
    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


def _read_text(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_poly(source: str, variables: tuple[str, ...]):
    text = _read_text(source) if os.path.isfile(source) else source
    try:
        return parse_poly(text, variables)
    except PolyParseError as exc:
        raise DomainError("parse", str(exc)) from exc


def _emit(payload: dict, args) -> None:
    if args.out == "json":
        payload.pop("_csv", None)
        text = json.dumps(payload, indent=2) + "\n"
    else:
        text = payload.pop("_csv", None)
        if text is None:
            # generic one-record CSV: header row then value row
            keys = [k for k, v in payload.items() if not isinstance(v, (dict, list))]
            text = ",".join(keys) + "\n" + ",".join(str(payload[k]) for k in keys) + "\n"
    if args.out_path:
        with open(args.out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def _parse_ns(text: str) -> list[int]:
    try:
        return [int(p) for p in text.split(",") if p.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad n list: {text!r}") from exc


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quadcount",
        description="Count polynomial zeros on product grids, coplanar quadruples, "
                    "collinear triples, and four-point circles; fit growth exponents.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--seed", type=int, default=None, help=f"PRNG seed (default {DEFAULT_SEED})")
        p.add_argument("--out", choices=("json", "csv"), default=None, help="output format")
        p.add_argument("--out-path", default=None, help="write output to a file instead of stdout")
        p.add_argument("--config", default=None, help="flat key=value file with defaults")

    p = sub.add_parser("count-zeros", help="count zeros of a 4-variable polynomial on A x B x C x D")
    p.add_argument("--poly", required=True, help="polynomial text or a file containing it")
    p.add_argument("--sets", required=True, help="CSV file with lines A:...,B:...,C:...,D:...")
    p.add_argument("--vars", default=",".join(_VARS), help="comma-separated variable names")
    p.add_argument("--method", choices=("naive", "fiber"), default=None)
    p.add_argument("--solve-var", default=None, help="variable solved per fiber (fiber method)")
    p.add_argument("--threads", type=int, default=None, help="worker count for the fiber loop")
    common(p)

    p = sub.add_parser("detect-special", help="classify a polynomial as special / non-special")
    p.add_argument("--poly", required=True)
    p.add_argument("--vars", default=",".join(_VARS))
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--box", type=float, default=None)
    p.add_argument("--ratio-pass", type=float, default=None)
    p.add_argument("--ratio-fail", type=float, default=None)
    p.add_argument("--grad-floor", type=float, default=None)
    p.add_argument("--g-pass", type=float, default=None)
    common(p)

    p = sub.add_parser("construct", help="emit an extremal or control configuration")
    p.add_argument("--kind", required=True,
                   choices=("ap-additive", "ap-multiplicative", "elliptic", "moment"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=_parse_fraction, default=None, help="curve coefficient a (elliptic)")
    p.add_argument("--b", type=_parse_fraction, default=None, help="curve coefficient b (elliptic)")
    p.add_argument("--spacing", type=_parse_fraction, default=None, help="moment curve step")
    common(p)

    for name, help_text in (
        ("count-coplanar", "count coplanar 4-subsets of a 3D point set"),
        ("count-collinear", "count collinear 3-subsets of a 2D point set"),
        ("count-circles", "count four-point circles of a 2D point set"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--points", required=True, help="CSV file of points")
        if name == "count-coplanar":
            p.add_argument("--method", choices=("naive", "fast"), default=None)
            p.add_argument("--tol", type=float, default=None, help="float-mode tolerance")
        common(p)

    p = sub.add_parser("fit-exponent", help="run a growth experiment and fit the slope")
    p.add_argument("--experiment", required=True, choices=sorted(harness.EXPERIMENTS))
    p.add_argument("--ns", type=_parse_ns, required=True, help="comma list, e.g. 16,32,64,128")
    common(p)
    return parser


_DEFAULTS = {
    "seed": DEFAULT_SEED,
    "out": "json",
    "method": None,
    "threads": 1,
    "trials": 50,
    "box": separability.SAMPLING_BOX,
    "ratio_pass": separability.RATIO_PASS,
    "ratio_fail": separability.RATIO_FAIL,
    "grad_floor": separability.GRADIENT_FLOOR,
    "g_pass": separability.G_VANISH,
    "tol": 1e-7,
    "a": Fraction(1),
    "b": Fraction(1),
    "spacing": Fraction(1),
    "solve_var": None,
}


def _apply_config(args: argparse.Namespace) -> argparse.Namespace:
    """Fill unset options from --config, then from built-in defaults."""
    file_values: dict[str, str] = {}
    if getattr(args, "config", None):
        for lineno, raw in enumerate(_read_text(args.config).splitlines(), 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            key, sep, value = line.partition("=")
            if not sep:
                raise DomainError("config", f"line {lineno}: expected key=value")
            file_values[key.strip().replace("-", "_")] = value.strip()
    for key, value in vars(args).items():
        if value is not None:
            continue
        if key in file_values:
            raw = file_values[key]
            default = _DEFAULTS.get(key)
            if isinstance(default, bool):
                parsed = raw.lower() in ("1", "true", "yes")
            elif isinstance(default, int) and not isinstance(default, bool):
                parsed = int(raw)
            elif isinstance(default, float):
                parsed = float(raw)
            elif isinstance(default, Fraction):
                parsed = Fraction(raw)
            else:
                parsed = raw
            setattr(args, key, parsed)
        elif key in _DEFAULTS:
            setattr(args, key, _DEFAULTS[key])
    return args


# -- subcommand handlers --------------------------------------------------------


def _cmd_count_zeros(args) -> dict:
    variables = tuple(v.strip() for v in args.vars.split(","))
    poly = _load_poly(args.poly, variables)
    try:
        sets = fileio.sets_from_csv(_read_text(args.sets))
    except ValueError as exc:
        raise DomainError("sets", str(exc)) from exc
    method = args.method or "fiber"
    try:
        if method == "naive":
            report = zerocount.count_naive(poly, sets)
        else:
            report = zerocount.count_fiber(poly, sets, args.solve_var, workers=args.threads)
    except ValueError as exc:
        raise DomainError("count", str(exc)) from exc
    out = {"command": "count-zeros", "poly": str(poly)}
    out.update(report.to_json())
    return out


def _cmd_detect_special(args) -> dict:
    variables = tuple(v.strip() for v in args.vars.split(","))
    poly = _load_poly(args.poly, variables)
    try:
        verdict = separability.classify(
            poly,
            seed=args.seed,
            trials=args.trials,
            box=args.box,
            grad_floor=args.grad_floor,
            ratio_pass=args.ratio_pass,
            ratio_fail=args.ratio_fail,
            g_vanish=args.g_pass,
        )
    except (ValueError, DegenerateSurfaceError) as exc:
        raise DomainError("detect", str(exc)) from exc
    out = {"command": "detect-special", "poly": str(poly), "seed": args.seed}
    out.update(verdict.to_json())
    return out


def _cmd_construct(args) -> dict:
    if args.n < 1:
        raise DomainError("construct", "n must be >= 1")
    kind = args.kind
    try:
        if kind in ("ap-additive", "ap-multiplicative"):
            grid = constructions.ap_grid(kind.removeprefix("ap-"), args.n)
            csv = f"# poly: {grid.poly}\n# expected-count: {grid.expected}\n"
            csv += fileio.sets_to_csv(grid.sets)
            return {
                "command": "construct", "kind": kind, "n": args.n,
                "poly": str(grid.poly), "expected_count": grid.expected,
                "sets": {l: [str(v) for v in s] for l, s in zip("ABCD", grid.sets.sets)},
                "_csv": csv,
            }
        if kind == "elliptic":
            cfg = constructions.make_curve(args.a, args.b)
            points = constructions.torsion_points(cfg, args.n)[1:]
            embedded = constructions.embed_quartic(cfg, points)
            return {
                "command": "construct", "kind": kind, "n": args.n,
                "curve": {"a": str(cfg.a), "b": str(cfg.b), "period": cfg.period},
                "points": [list(p) for p in embedded.points],
                "_csv": fileio.points_to_csv(embedded),
            }
        points = constructions.moment_curve_points(args.n, args.spacing)
        return {
            "command": "construct", "kind": kind, "n": args.n,
            "points": [[str(v) for v in p] for p in points.points],
            "_csv": fileio.points_to_csv(points),
        }
    except (ValueError, RuntimeError) as exc:
        raise DomainError("construct", str(exc)) from exc


def _load_points(path: str, dimension: int):
    try:
        return fileio.points_from_csv(_read_text(path), dimension)
    except ValueError as exc:
        raise DomainError("points", str(exc)) from exc


def _cmd_count_coplanar(args) -> dict:
    points = _load_points(args.points, 3)
    method = args.method or ("fast" if points.kind == "exact" else "naive")
    try:
        if method == "fast":
            report = geometry.coplanar_fast(points)
        else:
            report = geometry.coplanar_naive(points, tol=args.tol)
    except ValueError as exc:
        raise DomainError("count", str(exc)) from exc
    out = {"command": "count-coplanar", "points": len(points), "kind": points.kind}
    out.update(report.to_json())
    return out


def _cmd_count_collinear(args) -> dict:
    points = _load_points(args.points, 2)
    try:
        report = geometry.collinear_triples(points)
    except ValueError as exc:
        raise DomainError("count", str(exc)) from exc
    out = {"command": "count-collinear", "points": len(points), "kind": points.kind}
    out.update(report.to_json())
    return out


def _cmd_count_circles(args) -> dict:
    points = _load_points(args.points, 2)
    try:
        report = geometry.four_point_circles(points)
    except ValueError as exc:
        raise DomainError("count", str(exc)) from exc
    out = {"command": "count-circles", "points": len(points), "kind": points.kind}
    out.update(report.to_json())
    return out


def _cmd_fit_exponent(args) -> dict:
    generator, counter = harness.EXPERIMENTS[args.experiment]
    try:
        series = harness.run_series(generator, counter, args.ns, seed=args.seed)
    except ValueError as exc:
        raise DomainError("experiment", str(exc)) from exc
    out = {"command": "fit-exponent", "name": args.experiment}
    out.update(series.to_json())
    out["_csv"] = series.to_csv()
    return out


_HANDLERS = {
    "count-zeros": _cmd_count_zeros,
    "detect-special": _cmd_detect_special,
    "construct": _cmd_construct,
    "count-coplanar": _cmd_count_coplanar,
    "count-collinear": _cmd_count_collinear,
    "count-circles": _cmd_count_circles,
    "fit-exponent": _cmd_fit_exponent,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        args = _apply_config(args)
        payload = _HANDLERS[args.command](args)
    except DomainError as exc:
        print(f"error:{exc.code}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error:io: {exc}", file=sys.stderr)
        return 1
    _emit(payload, args)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
