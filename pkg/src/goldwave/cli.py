"""Command-line interface: reproducible experiments with JSON/CSV reports.

Exit statuses: 0 success, 1 usage error, 2 numerical failure (rank
deficiency or non-convergence).  Reports embed the fully resolved
configuration and a schema version; identical flags and seed produce
byte-identical JSON.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import re
import sys
from fractions import Fraction

from .covering import audit_cover, beta_for_delta
from .framelab import (
    RankDeficiencyError,
    comparison_to_csv,
    compare_schemes,
    dyadic_sample_set,
    estimate_bounds,
    golden_sample_set,
    guard_band,
)
from .goldenring import ALPHA_FLOAT
from .lattice import LatticeSpec, Rect, audit_max_count, audit_min_count, enumerate_in_rect
from .wavelet import (
    SignalModel,
    admissibility_constant,
    cauchy_wavelet,
    decay_condition_report,
    gaussian_bump_wavelet,
    normalize_tight,
)

SCHEMA_VERSION = 1

# symbolic area aliases, evaluated in double precision from the exact forms
_AREA_ALIASES = {
    "golden2": 2.0 + ALPHA_FLOAT,  # 2 + alpha
    "inv3p2a": 1.0 / (3.0 + 2.0 * ALPHA_FLOAT),  # 1 / (3 + 2*alpha)
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def __init__(self, *a, **kw):
        super().__init__(*a, **kw)
        # accept values like "-0.5,0.5,-0.5,0.5" and "-20:20" after flags
        self._negative_number_matcher = re.compile(r"^-\d")

    def error(self, message):
        raise UsageError(message)


def _parse_floats(text: str, n: int, flag: str) -> list[float]:
    parts = text.split(",")
    if len(parts) != n:
        raise UsageError(f"{flag} expects {n} comma-separated values, got {text!r}")
    try:
        return [float(p) for p in parts]
    except ValueError as exc:
        raise UsageError(f"{flag}: {exc}") from None


def _parse_range(text: str, flag: str) -> tuple[int, int]:
    try:
        lo, hi = text.split(":")
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise UsageError(f"{flag} expects lo:hi integers, got {text!r}") from None
    if lo > hi:
        raise UsageError(f"{flag}: empty range {text!r}")
    return lo, hi


def _parse_area(text: str) -> float:
    if text in _AREA_ALIASES:
        return _AREA_ALIASES[text]
    try:
        area = float(text)
    except ValueError:
        raise UsageError(
            f"area must be a number or one of {sorted(_AREA_ALIASES)}, got {text!r}"
        ) from None
    if area <= 0:
        raise UsageError(f"area must be positive, got {area}")
    return area


def _add_global_flags(p: argparse.ArgumentParser, suppress: bool) -> None:
    d = argparse.SUPPRESS if suppress else None

    def default(value):
        return argparse.SUPPRESS if suppress else value

    p.add_argument("--seed", type=int, default=default(0), help="RNG seed (default 0)")
    p.add_argument("--output", default=d, help="write the report here instead of stdout")
    p.add_argument("--format", choices=["json", "csv"], default=default("json"),
                   help="csv is available for tabular reports only")
    p.add_argument("--config", default=d, help="key = value file; flags override")
    p.add_argument("--threads", type=int, default=d, help="cap BLAS worker threads")
    p.add_argument("-v", "--verbose", action="count", default=default(0))


def build_parser() -> _Parser:
    p = _Parser(prog="goldwave", description=__doc__)
    _add_global_flags(p, suppress=False)
    # same flags accepted after the subcommand, without clobbering values
    shared = _Parser(add_help=False)
    _add_global_flags(shared, suppress=True)
    sub = p.add_subparsers(dest="command", required=True)

    lat = sub.add_parser("lattice", help="golden lattice counting and audits")
    latsub = lat.add_subparsers(dest="subcommand", required=True)
    c = latsub.add_parser("count", parents=[shared],
                          help="count lattice points in a rectangle")
    c.add_argument("--rect", required=True, help="a,b,c,d (half-open [a,b) x [c,d))")
    c.add_argument("--beta", required=True, help="lattice scale (float or p/q)")
    a = latsub.add_parser("audit", parents=[shared], help="randomized minimum/maximum count audit")
    a.add_argument("--mode", choices=["min", "max"], required=True)
    a.add_argument("--area", required=True,
                   help=f"rectangle area; aliases: {sorted(_AREA_ALIASES)}")
    a.add_argument("--trials", type=int, default=10000)
    a.add_argument("--aspect", default="0.001:1000", help="log-uniform aspect range lo:hi")
    a.add_argument("--window", type=float, default=1000.0, help="center placement half-width")

    cov = sub.add_parser("cover", help="phase-space covering audits")
    covsub = cov.add_subparsers(dest="subcommand", required=True)
    ca = covsub.add_parser("audit", parents=[shared], help="per-cell lattice counts over an index window")
    ca.add_argument("--delta", type=float, required=True)
    ca.add_argument("--beta", type=float, default=None,
                    help="defaults to delta / sqrt(2 + alpha)")
    ca.add_argument("--k", default="-200:200", help="k index range lo:hi")
    ca.add_argument("--l", default="-20:20", help="l index range lo:hi")

    wav = sub.add_parser("wavelet", help="wavelet hypothesis checks")
    wavsub = wav.add_subparsers(dest="subcommand", required=True)
    wc = wavsub.add_parser("check", parents=[shared], help="admissibility and decay conditions")
    wc.add_argument("--family", required=True)
    wc.add_argument("--order", type=float, default=6.0, help="cauchy order p")
    wc.add_argument("--center", type=float, default=1.0, help="gaussian_bump center")
    wc.add_argument("--width", type=float, default=0.1, help="gaussian_bump width")
    wc.add_argument("--threshold", type=float, default=1e-8, help="decay tail threshold")

    fr = sub.add_parser("frame", help="frame-bound estimation")
    frsub = fr.add_subparsers(dest="subcommand", required=True)

    def add_model_flags(q):
        q.add_argument("--n", type=int, default=4096, help="model length (power of two)")
        q.add_argument("--duration", type=float, default=None, help="defaults to n")
        q.add_argument("--smax", type=float, default=0.06, help="top of the scale band")
        q.add_argument("--octaves", type=float, default=6.0, help="scale band depth")
        q.add_argument("--guard", type=float, default=2.0, help="guard margin in octaves")
        q.add_argument("--iters", type=int, default=5000)

    fe = frsub.add_parser("estimate", parents=[shared], help="frame bounds for one sample set")
    fe.add_argument("--scheme", choices=["golden", "dyadic"], required=True)
    fe.add_argument("--delta", type=float, default=0.35)
    fe.add_argument("--beta", type=float, default=None)
    fe.add_argument("--a", type=float, default=2.0, help="dyadic scale base")
    fe.add_argument("--b", type=float, default=1.0, help="dyadic translation step")
    add_model_flags(fe)
    fc = frsub.add_parser("compare", parents=[shared], help="golden vs density-matched dyadic table")
    fc.add_argument("--deltas", required=True, help="comma-separated delta values")
    add_model_flags(fc)
    return p


def _load_config(path: str, args: argparse.Namespace, argv: list[str]) -> None:
    """Apply key = value pairs from a file; explicit flags keep priority."""
    explicit = {tok.split("=", 1)[0] for tok in argv if tok.startswith("--")}
    try:
        with open(path) as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise UsageError(f"cannot read config file: {exc}") from None
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{lineno}: expected key = value, got {line!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        attr = key.replace("-", "_")
        if not hasattr(args, attr):
            raise UsageError(f"{path}:{lineno}: unknown config key {key!r}")
        if "--" + key.replace("_", "-") in explicit:
            continue
        current = getattr(args, attr)
        if isinstance(current, bool):
            value = value.lower() in ("1", "true", "yes")
        elif isinstance(current, int):
            value = int(value)
        elif isinstance(current, float):
            value = float(value)
        setattr(args, attr, value)


def _resolved_config(args: argparse.Namespace) -> dict:
    skip = {"command", "subcommand", "output", "config", "verbose"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def _emit(args: argparse.Namespace, report: dict) -> None:
    text = json.dumps(report, sort_keys=True, indent=2) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# subcommand handlers: return (result dict, exit status)


def _cmd_lattice_count(args) -> tuple[dict, int]:
    a, b, c, d = _parse_floats(args.rect, 4, "--rect")
    if not (b > a and d > c):
        raise UsageError(f"degenerate rectangle {args.rect!r}: need b > a and d > c")
    try:
        beta = Fraction(args.beta)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"--beta: not a number: {args.beta!r}") from None
    if beta <= 0:
        raise UsageError(f"--beta must be positive, got {args.beta}")
    pts = enumerate_in_rect(LatticeSpec(beta=beta), Rect(a, b, c, d))
    result = {"count": len(pts)}
    if len(pts) <= 100:
        fb = float(beta)
        result["points"] = [
            {"n": p.n, "m": p.m, "x": p.x.to_float() * fb, "s": p.s.to_float() * fb}
            for p in pts
        ]
    return result, 0


def _cmd_lattice_audit(args) -> tuple[dict, int]:
    area = _parse_area(args.area)
    if args.trials < 1:
        raise UsageError(f"--trials must be >= 1, got {args.trials}")
    lo, hi = (float(t) for t in args.aspect.split(":"))
    fn = audit_min_count if args.mode == "min" else audit_max_count
    audit = fn(area, args.trials, seed=args.seed,
               aspect_range=(lo, hi), center_range=args.window)
    if args.mode == "min":
        passed = audit.min_count >= 1
        threshold = {"area_at_least": _AREA_ALIASES["golden2"], "min_count": 1}
    else:
        passed = audit.max_count <= 1
        threshold = {"area_at_most": _AREA_ALIASES["inv3p2a"], "max_count": 1}
    return {
        "area": area,
        "trials": audit.trials,
        "min_count": audit.min_count,
        "max_count": audit.max_count,
        "witness_min": list(audit.witness_min.edges()),
        "witness_max": list(audit.witness_max.edges()),
        "histogram": {str(k): v for k, v in sorted(audit.histogram.items())},
        "threshold": threshold,
        "passed": passed,
    }, 0


def _cmd_cover_audit(args) -> tuple[dict, int]:
    if not args.delta > 0:
        raise UsageError(f"--delta must be positive, got {args.delta}")
    if args.beta is not None and not args.beta > 0:
        raise UsageError(f"--beta must be positive, got {args.beta}")
    audit = audit_cover(
        args.delta,
        beta=args.beta,
        k_range=_parse_range(args.k, "--k"),
        l_range=_parse_range(args.l, "--l"),
    )
    return {
        "delta": audit.delta,
        "beta": audit.beta,
        "k_range": list(audit.k_range),
        "l_range": list(audit.l_range),
        "cells_checked": audit.cells_checked,
        "min_count": audit.min_count,
        "max_count": audit.max_count,
        "histogram": {str(k): v for k, v in sorted(audit.histogram.items())},
        "empty_cells": [list(c) for c in audit.empty_cells[:100]],
        "empty_cell_total": len(audit.empty_cells),
        "passed": audit.min_count >= 1 and audit.max_count <= 12,
    }, 0


def _cmd_wavelet_check(args) -> tuple[dict, int]:
    if args.family == "cauchy":
        try:
            w = cauchy_wavelet(args.order, normalize=False)
        except ValueError as exc:
            return {
                "family": args.family,
                "order": args.order,
                "constructible": False,
                "reason": str(exc),
                "passed": False,
            }, 0
    elif args.family == "gaussian_bump":
        w = gaussian_bump_wavelet(args.center, args.width)
    else:
        raise UsageError(f"unknown wavelet family {args.family!r}")
    normalized = normalize_tight(w)
    c_psi = admissibility_constant(normalized)
    rep = decay_condition_report(normalized, threshold=args.threshold)
    return {
        "family": args.family,
        "constructible": True,
        "admissibility_constant": c_psi,
        "conditions": [
            {
                "name": c.name,
                "tail_sup_low": c.tail_sup_low,
                "tail_sup_high": c.tail_sup_high,
                "threshold": c.threshold,
                "passed": c.passed,
            }
            for c in rep.conditions
        ],
        "l2_weighted": rep.l2_weighted,
        "l2_passed": rep.l2_passed,
        "passed": rep.all_passed and abs(c_psi - 1.0) < 1e-6,
    }, 0


def _frame_setup(args):
    if args.n < 4 or args.n & (args.n - 1):
        raise UsageError(f"--n must be a power of two >= 4, got {args.n}")
    duration = args.duration if args.duration is not None else float(args.n)
    if not (duration > 0 and args.smax > 0 and args.octaves > 0):
        raise UsageError("--duration, --smax and --octaves must be positive")
    model = SignalModel.zeros(args.n, duration)
    region = Rect(0.0, duration, args.smax / 2.0**args.octaves, args.smax)
    w = cauchy_wavelet(6.0)
    band = guard_band(w, region, model, guard_octaves=args.guard)
    return w, model, region, band


def _cmd_frame_estimate(args) -> tuple[dict, int]:
    w, model, region, band = _frame_setup(args)
    if args.scheme == "golden":
        if not args.delta > 0:
            raise UsageError(f"--delta must be positive, got {args.delta}")
        sset = golden_sample_set(args.delta, region, beta=args.beta)
    else:
        sset = dyadic_sample_set(args.a, args.b, region)
    base = {
        "scheme": args.scheme,
        "provenance": {k: v for k, v in sset.provenance.items()},
        "points": len(sset),
        "band": list(band),
        "band_dim": band[1] - band[0] + 1,
    }
    try:
        est = estimate_bounds(sset, w, model, band, iters=args.iters, seed=args.seed)
    except RankDeficiencyError as exc:
        base.update({"error": "rank-deficient", "detail": str(exc), "A": 0.0})
        return base, 2
    base.update({
        "A": est.lower,
        "B": est.upper,
        "ratio": est.ratio,
        "iterations": est.iterations,
        "converged": est.converged,
        "diagnostics": est.residuals,
    })
    return base, 0 if est.converged else 2


def _cmd_frame_compare(args) -> tuple[dict, int]:
    try:
        deltas = [float(d) for d in args.deltas.split(",")]
    except ValueError:
        raise UsageError(f"--deltas: not a number list: {args.deltas!r}") from None
    if not deltas or any(d <= 0 for d in deltas):
        raise UsageError(f"--deltas must be positive, got {args.deltas!r}")
    w, model, region, band = _frame_setup(args)
    rows = compare_schemes(
        deltas, w, model, region, band, iters=args.iters, seed=args.seed
    )
    return {"band": list(band), "rows": rows}, 0


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.config:
            _load_config(args.config, args, argv)
        if args.threads is not None:
            if args.threads < 1:
                raise UsageError(f"--threads must be >= 1, got {args.threads}")
            for var in ("OMP_NUM_THREADS", "OPENBLAS_NUM_THREADS", "MKL_NUM_THREADS"):
                os.environ[var] = str(args.threads)
        handlers = {
            ("lattice", "count"): _cmd_lattice_count,
            ("lattice", "audit"): _cmd_lattice_audit,
            ("cover", "audit"): _cmd_cover_audit,
            ("wavelet", "check"): _cmd_wavelet_check,
            ("frame", "estimate"): _cmd_frame_estimate,
            ("frame", "compare"): _cmd_frame_compare,
        }
        result, status = handlers[(args.command, args.subcommand)](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": f"{args.command} {args.subcommand}",
        "config": _resolved_config(args),
        "result": _sanitize(result),
    }
    if args.format == "csv":
        if (args.command, args.subcommand) != ("frame", "compare"):
            print("usage error: --format csv is only available for frame compare",
                  file=sys.stderr)
            return 1
        path = args.output or "/dev/stdout"
        comparison_to_csv(result["rows"], path)
    else:
        _emit(args, report)
    return status


def _sanitize(obj):
    """JSON-safe copy: infinities and NaN become strings."""
    if isinstance(obj, dict):
        return {k: _sanitize(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_sanitize(v) for v in obj]
    if isinstance(obj, float) and not math.isfinite(obj):
        return repr(obj)
    return obj


if __name__ == "__main__":
    sys.exit(main())
