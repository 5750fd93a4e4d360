"""Command-line front end.

Exit codes: 0 success, 1 a computation reported failure (a verify check,
a missing boundary crossing), 2 invalid arguments, 3 I/O errors.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from . import _kernel
from .chebmap import build_map, critical_points, fixed_points
from .dynamics import OrbitPolicy, classify_orbit, line_dynamics, phi_eval, phi_return_time
from .errors import ChebError, NoCrossing
from .numeric import INF
from .raster import Window, emit_ppm, probe_boundary, render
from .verify import run_suite

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3

SIG_DIGITS = 9
# options whose values may legitimately start with '-'
_DASH_VALUED = ("--window", "--z0", "--ys", "--y", "--return-time")


class UsageError(Exception):
    pass


def _num(x):
    """Round to SIG_DIGITS significant digits for stable JSON."""
    if x is INF:
        return "Infinity"
    if isinstance(x, complex):
        return [_num(x.real), _num(x.imag)]
    if isinstance(x, (bool, np.bool_)):
        return bool(x)
    if isinstance(x, (int, np.integer)):
        return int(x)
    if isinstance(x, (float, np.floating)):
        x = float(x)
        if not math.isfinite(x):
            return "Infinity" if x > 0 else "-Infinity" if x < 0 else "NaN"
        return float(f"{x:.{SIG_DIGITS}g}") + 0.0
    if isinstance(x, dict):
        return {k: _num(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_num(v) for v in x]
    return x


def dumps(obj, **kw) -> str:
    return json.dumps(_num(obj), **kw)


def _out(obj):
    sys.stdout.write(dumps(obj) + "\n")


def _positive_int(name, value):
    if value is None or value < 1:
        raise UsageError(f"{name} must be a positive integer, got {value}")
    return value


def _map_from(args):
    _positive_int("--k", args.k)
    _positive_int("--m", args.m)
    try:
        return build_map(args.k, args.m)
    except (ValueError, OverflowError) as exc:
        raise UsageError(str(exc)) from exc


def _parse_complex(text):
    parts = text.split(",")
    if len(parts) != 2:
        raise UsageError(f"expected RE,IM, got {text!r}")
    try:
        z = complex(float(parts[0]), float(parts[1]))
    except ValueError as exc:
        raise UsageError(f"expected RE,IM, got {text!r}") from exc
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise UsageError("z0 must be finite")
    return z


def _parse_ys(text):
    parts = text.split(":")
    try:
        a, b, n = float(parts[0]), float(parts[1]), int(parts[2])
    except (ValueError, IndexError) as exc:
        raise UsageError(f"--ys must be a:b:n, got {text!r}") from exc
    if len(parts) != 3 or n < 1 or not (math.isfinite(a) and math.isfinite(b)):
        raise UsageError(f"--ys must be a:b:n with n >= 1, got {text!r}")
    return np.linspace(a, b, n)


def _policy(args):
    try:
        return OrbitPolicy(max_iter=args.max_iter)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


# --------------------------------------------------------------------------
# subcommands


def cmd_render(args) -> int:
    cmap = _map_from(args)
    try:
        window = Window.parse(args.window, args.px)
        policy = _policy(args).check(cmap)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    raster = render(cmap, window, policy)
    emit_ppm(raster, args.out)
    _out({"k": cmap.k, "m": cmap.m, "out": args.out, "fractions": raster.fractions()})
    return EXIT_OK


def cmd_points(args) -> int:
    cmap = _map_from(args)
    fixed = [
        {"location": p.location, "kind": p.kind.value, "multiplier": p.multiplier, "stability": p.stability.value}
        for p in fixed_points(cmap)
    ]
    crit = [{"location": z, "multiplicity": mult} for z, mult in critical_points(cmap).finite_points()]
    _out({"k": cmap.k, "m": cmap.m, "fixed_points": fixed, "critical_points": crit})
    return EXIT_OK


def cmd_orbit(args) -> int:
    cmap = _map_from(args)
    z0 = _parse_complex(args.z0)
    try:
        policy = _policy(args).check(cmap)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    res = classify_orbit(cmap, z0, policy, trace=args.trace)
    doc = {"verdict": res.verdict.label, "iterations": res.iterations, "terminal": res.terminal}
    if args.trace:
        doc["trace"] = list(res.trace)
    _out(doc)
    return EXIT_OK


def cmd_phi(args) -> int:
    _positive_int("--m", args.m)
    line = line_dynamics(args.m)
    if args.zeta:
        _out({"m": args.m, "zeta": line.zeta})
    elif args.y is not None:
        if args.y == 0 or not math.isfinite(args.y):
            raise UsageError("--y must be finite and non-zero")
        _out({"m": args.m, "y": args.y, "phi": phi_eval(line, args.y)})
    else:
        y = args.return_time
        if not (math.isfinite(y) and y > line.zeta):
            raise UsageError(f"--return-time needs y > zeta = {line.zeta:.9g}")
        _positive_int("--cap", args.cap)
        _out({"m": args.m, "y": y, "return_time": phi_return_time(line, y, args.cap)})
    return EXIT_OK


def cmd_boundary(args) -> int:
    cmap = _map_from(args)
    ys = _parse_ys(args.ys)
    if not args.tol > 0:
        raise UsageError("--tol must be positive")
    try:
        est = probe_boundary(cmap, ys, args.tol)
    except NoCrossing as exc:
        sys.stderr.write(f"no crossing: {exc}\n")
        return EXIT_FAILED
    doc = {"points": [complex(p) for p in est.points], "max_deviation_from_L": est.max_deviation_from_L}
    text = dumps(doc)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    sys.stdout.write(text + "\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    _positive_int("--kmax", args.kmax)
    _positive_int("--mmax", args.mmax)
    report = run_suite(range(1, args.kmax + 1), range(1, args.mmax + 1), seed=args.seed)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(dumps(report.to_dict(), indent=1) + "\n")
    failures = report.failures()
    _out({"checks": len(report.results), "failed": len(failures), "all_passed": report.all_passed})
    for r in failures:
        sys.stderr.write(f"FAIL {r.lemma_id} {tuple(r.params)}: {r.detail}\n")
    return EXIT_OK if report.all_passed else EXIT_FAILED


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="chebtwo", description="Chebyshev's method for z^k (z-1)^m.")
    sub = ap.add_subparsers(dest="command", required=True)

    def km(p):
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--m", type=int, required=True)

    p = sub.add_parser("render", help="basin raster to a PPM file")
    km(p)
    p.add_argument("--window", required=True, help="remin:remax:immin:immax")
    p.add_argument("--px", required=True, help="WxH")
    p.add_argument("--out", required=True)
    p.add_argument("--max-iter", type=int, default=2000)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("points", help="fixed and critical points as JSON")
    km(p)
    p.set_defaults(func=cmd_points)

    p = sub.add_parser("orbit", help="classify one orbit")
    km(p)
    p.add_argument("--z0", required=True, help="RE,IM")
    p.add_argument("--trace", action="store_true")
    p.add_argument("--max-iter", type=int, default=2000)
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("phi", help="the map induced on the pole line (k = m)")
    p.add_argument("--m", type=int, required=True)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--y", type=float)
    g.add_argument("--zeta", action="store_true")
    g.add_argument("--return-time", type=float)
    p.add_argument("--cap", type=int, default=100000)
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("boundary", help="bisect horizontal segments for the basin boundary")
    km(p)
    p.add_argument("--ys", required=True, help="a:b:n")
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--out")
    p.set_defaults(func=cmd_boundary)

    p = sub.add_parser("verify", help="run the structural check suite")
    p.add_argument("--kmax", type=int, default=6)
    p.add_argument("--mmax", type=int, default=6)
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)
    return ap


def _join_dash_values(argv):
    """Turn '--window -1:2:...' into '--window=-1:2:...' so argparse keeps the value."""
    out = []
    it = iter(argv)
    for a in it:
        if a in _DASH_VALUED:
            nxt = next(it, None)
            out.append(a if nxt is None else f"{a}={nxt}")
        else:
            out.append(a)
    return out


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(_join_dash_values(argv))
    try:
        _kernel.configure_threads()
    except ValueError:
        sys.stderr.write("error: CHEB_THREADS must be an integer\n")
        return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_IO
    except ChebError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
