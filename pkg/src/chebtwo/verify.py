"""Numerical checks of the structural facts about the two-root Chebyshev map.

Each check runs for one (k, m) and records a CheckResult; failures are
collected, never raised.  ``run_suite`` sweeps a grid and assembles a
self-describing report that can be re-run from its own header.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field
from typing import Optional

import numpy as np
from scipy import ndimage

from .chebmap import (
    ChebyshevMap,
    build_map,
    critical_points,
    eval_derivative,
    evaluate,
    extraneous_multiplier_closed_forms,
    extraneous_points,
    infinity_multiplier,
    inverse_coordinate_derivative,
    root_multiplier,
)
from .dynamics import (
    EXPECTED_SIGN,
    INTERVALS,
    Verdict,
    classify_many,
    line_dynamics,
    phi_eval,
    phi_return_time,
    real_line_facts,
)
from .errors import CoverageError, NoCrossing
from .numeric import INF, RealPoly, poly_eval
from .raster import BasinRaster, Window, probe_boundary, render

ANCHORS = {
    "a.quartic_sign": "F(x) > 0 for x < 0; F(1+x) > 1 for x > 0 when m >= 2 and F(1+x) > 0 when m = 1",
    "b.derivative_sign": "C'(x) > 0 on (-inf,0) and (1,inf)",
    "c.extraneous": "0 < e1 < xi < e2 < 1, both multipliers > 1 and equal to the closed form",
    "d.sign_table": "sign of C(x) - x on each interval cut by 0, e1, xi, e2, 1",
    "e.real_mapping": "C(x) < 0 for x < 0 and C(x) > 1 for x > 1",
    "f.basin_intervals": "(-inf,e1) lies in the basin of 0 and (e2,inf) in the basin of 1",
    "g.critical_set": "critical points closed under conjugation, none real outside [0,1], total multiplicity 6",
    "h.immediate_basins": "each immediate basin holds two of the four free critical points",
    "i.pole_line": "phi_m odd and increasing, zeta its positive zero, returns to (0,zeta], pole line is the common boundary",
    "j.multipliers": "multipliers (k-1)(2k-1)/(2k^2), (m-1)(2m-1)/(2m^2) at the roots and 2d^2/(2d^2-3d+1) at infinity",
    "k.k_equals_one": "for k = 1, F = z^2 (m(m+1)^2(2m+1) z^2 - 4m(m+1)(2m+1) z + 9m^2 + 3m)",
}

DEFAULT_TOLERANCES = {
    "extraneous_multiplier_rel": 1e-6,
    "root_multiplier_abs": 1e-10,
    "finite_difference_rel": 1e-6,
    "infinity_multiplier_rel": 1e-8,
    "zeta_residual": 1e-12,
    "zeta_bisection": 1e-10,
    "line_map_rel": 1e-10,
    "boundary_probe_tol": 1e-10,
    "boundary_on_line": 1e-9,
    "k1_coefficient_rel": 1e-9,
    "k1_extraneous_abs": 1e-10,
    "conjugate_pairing": 1e-9,
    "real_root_imag": 1e-9,
}

SAMPLES_PER_INTERVAL = 200
BASIN_SEEDS = 20
SPLIT_RESOLUTIONS = (300, 600, 1200)
PROBE_HEIGHTS = (-1.5, -0.7, 0.0, 0.3, 1.1)
FD_STEP = 1e-6


@dataclass
class CheckResult:
    lemma_id: str
    params: tuple
    passed: bool
    detail: str
    witness: Optional[object] = None
    anchor: str = ""

    def __post_init__(self):
        if not self.anchor:
            self.anchor = ANCHORS[self.lemma_id]
        if not self.passed and self.witness is None:
            raise ValueError("a failed check must carry a witness")


@dataclass
class VerificationReport:
    results: list
    grid: dict
    seed: int
    tolerances: dict = field(default_factory=dict)
    notes: dict = field(default_factory=dict)

    @property
    def all_passed(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self) -> list:
        return [r for r in self.results if not r.passed]

    def to_dict(self) -> dict:
        return {
            "grid": self.grid,
            "seed": self.seed,
            "tolerances": self.tolerances,
            "notes": self.notes,
            "all_passed": self.all_passed,
            "results": [_result_dict(r) for r in self.results],
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)


def _jsonable(x):
    if isinstance(x, complex):
        return [x.real, x.imag]
    if isinstance(x, (np.floating, np.integer)):
        return x.item()
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if x is INF:
        return "Infinity"
    return x


def _result_dict(r: CheckResult) -> dict:
    d = asdict(r)
    d["params"] = list(r.params)
    if r.witness is None:
        d.pop("witness")
    else:
        d["witness"] = _jsonable(r.witness)
    return d


# --------------------------------------------------------------------------
# samplers


def _left_tail(rng, n):
    return -(10.0 ** rng.uniform(-6, 3, n))


def _right_tail(rng, n):
    return 1.0 + 10.0 ** rng.uniform(-6, 3, n)


def _inside(rng, lo, hi, n, margin=1e-6):
    w = hi - lo
    return rng.uniform(lo + margin * w, hi - margin * w, n)


def _interval_samples(rng, cmap, tag, n):
    e1, e2 = extraneous_points(cmap.k, cmap.m)
    bounds = {
        "(0,e1)": (0.0, e1),
        "(e1,xi)": (e1, cmap.xi),
        "(xi,e2)": (cmap.xi, e2),
        "(e2,1)": (e2, 1.0),
    }
    if tag == "(-inf,0)":
        return _left_tail(rng, n)
    if tag == "(1,inf)":
        return _right_tail(rng, n)
    return _inside(rng, *bounds[tag], n)


def _central_difference(f, x, h=FD_STEP):
    return (f(x + h) - f(x - h)) / (2 * h)


def _complex_step(f, x, h=1e-20):
    """Derivative of a real-analytic f at real x, free of subtractive cancellation."""
    return f(complex(x, h)).imag / h


def _rel(a, b):
    return abs(a - b) / max(abs(b), 1e-300)


# --------------------------------------------------------------------------
# individual checks


def check_quartic_sign(cmap, rng, tol):
    """F > 0 on (-inf, 0) and F(1+x) > 1 on (0, inf).

    The shifted coefficients of F(x+1) are all non-negative with constant
    term m^2 (m-1)(2m-1).  For m >= 2 that term is at least 12 and F(1+x) > 1
    follows; for m = 1 the constant and linear terms vanish, F(1+x) ~ c x^2
    near 0 and the strongest true statement is F(1+x) > 0, which is what is
    checked there.
    """
    km = (cmap.k, cmap.m)
    f = cmap.fquartic
    for x in np.concatenate([_left_tail(rng, SAMPLES_PER_INTERVAL // 2), -rng.uniform(0, 100, SAMPLES_PER_INTERVAL // 2)]):
        if not poly_eval(f, x) > 0:
            return CheckResult("a.quartic_sign", km, False, "F(x) <= 0 for some x < 0", float(x))
    shifted = taylor_shift(cmap.fquartic_int, 1)
    if any(c < 0 for c in shifted) or not shifted[2] > 1:
        return CheckResult("a.quartic_sign", km, False, "F(x+1) has a negative coefficient", shifted)
    floor = 1.0 if shifted[0] > 1 else 0.0
    xs = np.concatenate([10.0 ** rng.uniform(-6, 2, SAMPLES_PER_INTERVAL // 2), rng.uniform(0, 100, SAMPLES_PER_INTERVAL // 2)])
    for x in xs:
        # evaluate in the shifted basis so small x keeps full relative accuracy
        if not x > 0:
            continue
        if not poly_eval(RealPoly(shifted), x) > floor:
            return CheckResult("a.quartic_sign", km, False, f"F(1+x) <= {floor:g} for some x > 0", float(x))
    odd_neg = all(c <= 0 for c in cmap.fquartic_int[1::2])
    even_pos = all(c >= 0 for c in cmap.fquartic_int[0::2])
    if not (odd_neg and even_pos):
        return CheckResult("a.quartic_sign", km, False, "F coefficient signs do not alternate", cmap.fquartic_int)
    detail = f"sampled {len(xs) + SAMPLES_PER_INTERVAL} points; F(x+1) coefficients {shifted}"
    if floor < 1:
        # F(1+x) = x^2 (c2 + c3 x + c4 x^2) drops below 1 near x = 0
        c2, c3, c4 = shifted[2:]
        lo, hi = 0.0, 1.0
        for _ in range(100):
            mid = (lo + hi) / 2
            lo, hi = (mid, hi) if mid * mid * (c2 + mid * (c3 + mid * c4)) < 1 else (lo, mid)
        detail += f"; m = 1: F(1+x) > 0 only, F(1+x) < 1 for 0 < x < {hi:.6g}"
    return CheckResult("a.quartic_sign", km, True, detail)


def taylor_shift(coeffs, a):
    """Ascending integer coefficients of q(x) = p(x + a)."""
    n = len(coeffs)
    out = [0] * n
    for i, c in enumerate(coeffs):
        for j in range(i + 1):
            out[j] += c * math.comb(i, j) * a ** (i - j)
    return out


def check_derivative_sign(cmap, rng, tol):
    km = (cmap.k, cmap.m)
    xs = np.concatenate([_left_tail(rng, SAMPLES_PER_INTERVAL), _right_tail(rng, SAMPLES_PER_INTERVAL)])
    for x in xs:
        d = eval_derivative(cmap, x)
        if not d.real > 0:
            return CheckResult("b.derivative_sign", km, False, f"C'(x) = {d}", float(x))
    return CheckResult("b.derivative_sign", km, True, f"C' > 0 at {len(xs)} sampled points")


def check_extraneous(cmap, rng, tol):
    km = (cmap.k, cmap.m)
    e1, e2 = extraneous_points(*km)
    if not (0 < e1 < cmap.xi < e2 < 1):
        return CheckResult("c.extraneous", km, False, "ordering 0 < e1 < xi < e2 < 1 fails", [e1, cmap.xi, e2])
    closed = extraneous_multiplier_closed_forms(*km)
    lam = []
    for e in (e1, e2):
        if abs(evaluate(cmap, e) - e) > 1e-10 * (1 + abs(e)):
            return CheckResult("c.extraneous", km, False, "not a fixed point", e)
        fd = _complex_step(lambda x: evaluate(cmap, x), e)
        exact = eval_derivative(cmap, e).real
        best = min(closed, key=lambda c: abs(c - fd))
        if _rel(fd, best) > tol["extraneous_multiplier_rel"] or _rel(exact, best) > tol["extraneous_multiplier_rel"]:
            return CheckResult("c.extraneous", km, False, f"multiplier mismatch fd={fd} exact={exact} closed={best}", e)
        if not abs(exact) > 1:
            return CheckResult("c.extraneous", km, False, f"|C'(e)| = {abs(exact)} <= 1", e)
        lam.append(exact)
    detail = (
        f"e1={e1:.9g} e2={e2:.9g} multipliers={lam[0]:.9g},{lam[1]:.9g}; "
        f"root multipliers {root_multiplier(cmap.k):.9g}, {root_multiplier(cmap.m):.9g}"
    )
    return CheckResult("c.extraneous", km, True, detail)


def check_sign_table(cmap, rng, tol):
    km = (cmap.k, cmap.m)
    for tag in INTERVALS:
        for x in _interval_samples(rng, cmap, tag, SAMPLES_PER_INTERVAL):
            facts = real_line_facts(cmap, x)
            want = EXPECTED_SIGN[tag]
            if facts.interval_tag != tag or facts.sign_of_Cx_minus_x != want or facts.predicted_sign != want:
                return CheckResult("d.sign_table", km, False, f"on {tag}: observed {facts}", float(x))
    return CheckResult("d.sign_table", km, True, f"{SAMPLES_PER_INTERVAL} samples on each of {len(INTERVALS)} intervals")


def shifted_offset_numerator(cmap: ChebyshevMap) -> list:
    """Ascending integer coefficients of N(t), where C(1+t) - 1 = N(t) / (2 (m + d t)^3)."""
    numer = taylor_shift(list(cmap.numer_int), 1)
    d, m = cmap.d, cmap.m
    cube = [m**3, 3 * m * m * d, 3 * m * d * d, d**3]
    out = numer + [0] * (4 - len(numer) + 1)
    for i, c in enumerate(cube):
        out[i] -= 2 * c
    return out


def check_real_mapping(cmap, rng, tol):
    """C(x) < 0 for x < 0 and C(x) > 1 for x > 1.

    C(x) - 1 is evaluated from the numerator shifted to t = x - 1; at a
    super-attracting root (m = 1) C(1+t) - 1 = O(t^3) and would round to 0.
    """
    km = (cmap.k, cmap.m)
    for x in _left_tail(rng, SAMPLES_PER_INTERVAL):
        if not evaluate(cmap, x).real < 0:
            return CheckResult("e.real_mapping", km, False, "C(x) >= 0 for x < 0", float(x))
    num = RealPoly(shifted_offset_numerator(cmap))
    for t in 10.0 ** rng.uniform(-6, 3, SAMPLES_PER_INTERVAL):
        if not poly_eval(num, t) > 0 or not evaluate(cmap, 1 + t).real > 1 - 1e-12:
            return CheckResult("e.real_mapping", km, False, "C(x) <= 1 for x > 1", float(1 + t))
    return CheckResult("e.real_mapping", km, True, f"{2 * SAMPLES_PER_INTERVAL} samples")


def check_basin_intervals(cmap, rng, tol):
    km = (cmap.k, cmap.m)
    e1, e2 = extraneous_points(*km)
    left = np.concatenate([_left_tail(rng, BASIN_SEEDS // 2), _inside(rng, 0.0, e1, BASIN_SEEDS - BASIN_SEEDS // 2)])
    right = np.concatenate([_right_tail(rng, BASIN_SEEDS // 2), _inside(rng, e2, 1.0, BASIN_SEEDS - BASIN_SEEDS // 2)])
    for seeds, want in ((left, Verdict.TO_ROOT0), (right, Verdict.TO_ROOT1)):
        verdicts, _, _ = classify_many(cmap, seeds.astype(complex))
        bad = np.nonzero(verdicts != want)[0]
        if bad.size:
            return CheckResult("f.basin_intervals", km, False, f"seed not attracted to {want.label}", float(seeds[bad[0]]))
    return CheckResult("f.basin_intervals", km, True, f"{BASIN_SEEDS} seeds on each side")


def check_critical_set(cmap, rng, tol):
    km = (cmap.k, cmap.m)
    crit = critical_points(cmap)
    if crit.total_multiplicity != 6:
        return CheckResult("g.critical_set", km, False, "critical multiplicity is not 6", crit.total_multiplicity)
    roots = crit.quartic_roots.locations()
    for r in roots:
        if min(abs(r.conjugate() - s) for s in roots) > tol["conjugate_pairing"]:
            return CheckResult("g.critical_set", km, False, "conjugate missing", r)
        if abs(r.imag) <= tol["real_root_imag"] and (r.real < -tol["real_root_imag"] or r.real > 1 + tol["real_root_imag"]):
            return CheckResult("g.critical_set", km, False, "real critical point outside [0,1]", r)
    return CheckResult("g.critical_set", km, True, "quartic roots " + ", ".join(f"{r:.6g}" for r in roots))


def auto_window(cmap: ChebyshevMap, size: int) -> Window:
    """Square window around 0, 1 and every free critical point."""
    pts = [0j, 1 + 0j] + crit_locations(cmap)
    re = [p.real for p in pts]
    im = [abs(p.imag) for p in pts]
    half = max(max(re) - min(re), 2 * max(im)) / 2 + 0.3
    c = (max(re) + min(re)) / 2
    return Window(c - half, c + half, -half, half, size, size)


def crit_locations(cmap: ChebyshevMap) -> list:
    return [r for r, _ in critical_points(cmap).quartic_roots.roots]


def immediate_basin_split(cmap: ChebyshevMap, raster: BasinRaster) -> tuple:
    """Free critical points (with multiplicity) in the immediate basins of 0 and 1.

    Immediate basins are the 4-connected pixel components holding the pixels
    nearest 0 and 1.
    """
    win = raster.window
    crit = critical_points(cmap).quartic_roots.roots
    cells = []
    for r, mult in crit:
        pix = win.pixel_of(r)
        if pix is None:
            raise CoverageError(f"critical point {r} outside the window")
        cells.append((pix, mult))
    counts = []
    for root, verdict in ((0j, Verdict.TO_ROOT0), (1 + 0j, Verdict.TO_ROOT1)):
        seed = win.pixel_of(root)
        if seed is None:
            raise CoverageError(f"root {root} outside the window")
        labels, _ = ndimage.label(raster.verdicts == verdict)
        comp = labels[seed]
        n = sum(mult for pix, mult in cells if comp and labels[pix] == comp)
        counts.append(n)
    return tuple(counts)


def check_immediate_basins(cmap, rng, tol):
    km = (cmap.k, cmap.m)
    split = None
    for size in SPLIT_RESOLUTIONS:
        raster = render(cmap, auto_window(cmap, size))
        split = immediate_basin_split(cmap, raster)
        if split == (2, 2):
            return CheckResult("h.immediate_basins", km, True, f"split (2, 2) at {size}x{size}")
    return CheckResult(
        "h.immediate_basins", km, False, f"split {split} up to {SPLIT_RESOLUTIONS[-1]}px", {"split": list(split)}
    )


def _bisect_zeta(m, lo=1e-6, hi=10.0):
    line = line_dynamics(m)
    for _ in range(200):
        mid = (lo + hi) / 2
        if phi_eval(line, mid) > 0:
            hi = mid
        else:
            lo = mid
    return (lo + hi) / 2


def check_pole_line(cmap, rng, tol):
    km = (cmap.k, cmap.m)
    m = cmap.m
    line = line_dynamics(m)
    ys = np.sort(10.0 ** rng.uniform(-3, 3, SAMPLES_PER_INTERVAL))
    phis = np.array([phi_eval(line, y) for y in ys])
    for y, p in zip(ys, phis):
        if phi_eval(line, -y) != -p:
            return CheckResult("i.pole_line", km, False, "phi not odd", float(y))
        if not p < y:
            return CheckResult("i.pole_line", km, False, "phi(y) >= y", float(y))
    if not np.all(np.diff(phis) > 0):
        return CheckResult("i.pole_line", km, False, "phi not increasing on (0, inf)", ys.tolist())
    residual = abs(line.quartic(line.zeta))
    if residual > tol["zeta_residual"]:
        return CheckResult("i.pole_line", km, False, f"zeta residual {residual}", line.zeta)
    if abs(_bisect_zeta(m) - line.zeta) > tol["zeta_bisection"]:
        return CheckResult("i.pole_line", km, False, "zeta disagrees with bisection", line.zeta)
    for y in line.zeta * (1 + 10.0 ** rng.uniform(-6, 2, 10)):
        n = phi_return_time(line, y, 100000)
        if n is None:
            return CheckResult("i.pole_line", km, False, "no return to (0, zeta]", float(y))
    for y in rng.uniform(0.05, 5.0, 20):
        c = evaluate(cmap, complex(0.5, y))
        want = complex(0.5, phi_eval(line, y))
        if abs(c - want) > tol["line_map_rel"] * (1 + abs(want)):
            return CheckResult("i.pole_line", km, False, f"C(1/2 + iy) = {c}, expected {want}", float(y))
    try:
        est = probe_boundary(cmap, PROBE_HEIGHTS, tol["boundary_probe_tol"])
    except NoCrossing as exc:
        return CheckResult("i.pole_line", km, False, str(exc), list(PROBE_HEIGHTS))
    if est.max_deviation_from_L > tol["boundary_on_line"]:
        return CheckResult("i.pole_line", km, False, "boundary crossing off the pole line", [list(map(_jsonable, est.points))])
    return CheckResult("i.pole_line", km, True, f"zeta={line.zeta:.9g}; {len(PROBE_HEIGHTS)} probes on the line")


def check_multipliers(cmap, rng, tol):
    km = (cmap.k, cmap.m)
    for root, mult in ((0.0, cmap.k), (1.0, cmap.m)):
        want = root_multiplier(mult)
        exact = eval_derivative(cmap, root).real
        fd = _central_difference(lambda x: evaluate(cmap, x).real, root)
        if abs(exact - want) > tol["root_multiplier_abs"]:
            return CheckResult("j.multipliers", km, False, f"C'({root}) = {exact}, closed form {want}", root)
        if abs(fd - want) > tol["finite_difference_rel"] * max(1.0, abs(want)):
            return CheckResult("j.multipliers", km, False, f"finite difference {fd} at {root} vs {want}", root)
    want = infinity_multiplier(cmap.d)
    coeff = inverse_coordinate_derivative(cmap)

    def inverse_map(w):
        return (1 / evaluate(cmap, 1 / w)).real

    fd = _central_difference(inverse_map, 0.0, 1e-5)
    if _rel(coeff, want) > tol["infinity_multiplier_rel"] or _rel(fd, want) > tol["finite_difference_rel"]:
        return CheckResult("j.multipliers", km, False, f"infinity: {coeff} / {fd} vs {want}", "infinity")
    return CheckResult("j.multipliers", km, True, f"root multipliers {root_multiplier(cmap.k):.9g}, {root_multiplier(cmap.m):.9g}; infinity {want:.9g}")


def k1_quartic(m: int) -> RealPoly:
    return RealPoly([0, 0, 9 * m * m + 3 * m, -4 * m * (m + 1) * (2 * m + 1), m * (m + 1) ** 2 * (2 * m + 1)])


def k1_extraneous(m: int) -> tuple:
    r = math.sqrt(m / (3 * m + 2))
    return (1 - r) / (m + 1), (1 + r) / (m + 1)


def check_k_equals_one(cmap, rng, tol):
    km = (cmap.k, cmap.m)
    m = cmap.m
    want = k1_quartic(m).coeffs
    got = cmap.fquartic.coeffs
    scale = max(abs(c) for c in want)
    if len(want) != len(got) or any(abs(a - b) > tol["k1_coefficient_rel"] * scale for a, b in zip(got, want)):
        return CheckResult("k.k_equals_one", km, False, "F differs from the k = 1 factorisation", list(got))
    e = extraneous_points(1, m)
    for a, b in zip(e, k1_extraneous(m)):
        if abs(a - b) > tol["k1_extraneous_abs"]:
            return CheckResult("k.k_equals_one", km, False, f"extraneous point {a} vs {b}", a)
    for x in rng.uniform(-50, 50, SAMPLES_PER_INTERVAL):
        if poly_eval(cmap.fquartic, x) < 0:
            return CheckResult("k.k_equals_one", km, False, "F negative on the real line", float(x))
    return CheckResult("k.k_equals_one", km, True, "factorisation and extraneous points match")


GENERAL_CHECKS = (
    ("a.quartic_sign", check_quartic_sign),
    ("b.derivative_sign", check_derivative_sign),
    ("c.extraneous", check_extraneous),
    ("d.sign_table", check_sign_table),
    ("e.real_mapping", check_real_mapping),
    ("f.basin_intervals", check_basin_intervals),
    ("g.critical_set", check_critical_set),
    ("h.immediate_basins", check_immediate_basins),
    ("j.multipliers", check_multipliers),
)


def check_pair(k: int, m: int, seed: int, tolerances: dict) -> list:
    cmap = build_map(k, m)
    rng = np.random.default_rng([seed, k, m])
    checks = list(GENERAL_CHECKS)
    if k == m:
        checks.append(("i.pole_line", check_pole_line))
    if k == 1:
        checks.append(("k.k_equals_one", check_k_equals_one))
    out = []
    for lemma, check in checks:
        try:
            out.append(check(cmap, rng, tolerances))
        except Exception as exc:  # a crash is a failed check, not a crashed suite
            out.append(CheckResult(lemma, (k, m), False, f"{type(exc).__name__}: {exc}", {"error": str(exc)}))
    return out


def run_suite(k_range=range(1, 7), m_range=range(1, 7), seed: int = 7, tolerances: Optional[dict] = None) -> VerificationReport:
    tol = dict(DEFAULT_TOLERANCES)
    if tolerances:
        tol.update(tolerances)
    ks, ms = list(k_range), list(m_range)
    results = []
    for k in ks:
        for m in ms:
            results.extend(check_pair(k, m, seed, tol))
    grid = {"k": [min(ks), max(ks)], "m": [min(ms), max(ms)]}
    notes = {
        "samples_per_interval": SAMPLES_PER_INTERVAL,
        "basin_seeds": BASIN_SEEDS,
        "split_resolutions": list(SPLIT_RESOLUTIONS),
        "probe_heights": list(PROBE_HEIGHTS),
        "anchors": ANCHORS,
    }
    return VerificationReport(results, grid, seed, tol, notes)
