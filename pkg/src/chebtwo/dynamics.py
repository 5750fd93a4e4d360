"""Orbit classification, real-line behaviour and the dynamics on the pole line."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import _kernel
from .chebmap import ChebyshevMap, evaluate, extraneous_points
from .errors import BoundaryInput, DomainError, ZeroInput
from .numeric import INF, XComplex, as_xcomplex


class Verdict(enum.IntEnum):
    TO_ROOT0 = 0
    TO_ROOT1 = 1
    UNDECIDED = 2

    @property
    def label(self) -> str:
        return ("ToRoot0", "ToRoot1", "Undecided")[self]


def verdicts_from_codes(codes: np.ndarray) -> np.ndarray:
    """Collapse kernel exit codes to Verdict values (all non-capture exits are Undecided)."""
    return np.minimum(codes, Verdict.UNDECIDED).astype(np.int8)


@dataclass(frozen=True)
class OrbitPolicy:
    capture_radius: float = 1e-8
    max_iter: int = 2000
    pole_guard: float = 1e-14

    def __post_init__(self):
        if not self.capture_radius > 0:
            raise ValueError("capture_radius must be positive")
        if self.max_iter < 0:
            raise ValueError("max_iter must be >= 0")
        if not self.pole_guard > 0:
            raise ValueError("pole_guard must be positive")

    def check(self, cmap: ChebyshevMap) -> "OrbitPolicy":
        """Ensure the capture disks lie inside the real basin intervals of this map."""
        e1, e2 = extraneous_points(cmap.k, cmap.m)
        bound = min(e1, 1 - e2, abs(e1 - cmap.xi)) / 4
        if self.capture_radius >= bound:
            raise ValueError(
                f"capture_radius {self.capture_radius} too large for k={cmap.k}, m={cmap.m} (limit {bound:.3g})"
            )
        return self


DEFAULT_POLICY = OrbitPolicy()


@dataclass(frozen=True)
class OrbitResult:
    verdict: Verdict
    iterations: int
    terminal: XComplex
    trace: Optional[tuple] = None


def _kernel_args(cmap: ChebyshevMap, policy: OrbitPolicy):
    return (
        np.asarray(cmap.laurent, dtype=np.float64),
        cmap.xi,
        policy.capture_radius,
        policy.max_iter,
        policy.pole_guard,
        cmap.symmetric,
    )


def classify_orbit(
    cmap: ChebyshevMap, z0, policy: OrbitPolicy = DEFAULT_POLICY, trace: bool = False
) -> OrbitResult:
    """Iterate until the orbit is captured by 0 or 1, or give up.

    For k == m a seed on the pole line Re z = 1/2 is Undecided without
    iterating: the line is invariant and lies in the Julia set.  Landing on
    the pole sends the orbit to the fixed point at infinity, which is also
    reported as Undecided.
    """
    policy.check(cmap)
    z0 = as_xcomplex(z0)
    if z0 is INF:
        return OrbitResult(Verdict.UNDECIDED, 0, INF, (INF,) if trace else None)
    coef, xi, cap, max_iter, guard, line_rule = _kernel_args(cmap, policy)
    ur, ui = z0.real - xi, z0.imag
    code, n, tr, ti = _kernel.orbit_u(ur, ui, coef, xi, cap, max_iter, guard, line_rule)
    terminal = INF if code == _kernel.HIT_POLE else complex(tr + xi, ti)
    verdict = Verdict(min(code, Verdict.UNDECIDED))
    path = None
    if trace:
        pts = [complex(ur + xi, ui)]
        for _ in range(n):
            ur, ui = _kernel.step_u(ur, ui, *coef)
            pts.append(complex(ur + xi, ui))
        if code == _kernel.HIT_POLE:
            pts.append(INF)
        path = tuple(pts)
    return OrbitResult(verdict, int(n), terminal, path)


def classify_many(cmap: ChebyshevMap, seeds, policy: OrbitPolicy = DEFAULT_POLICY):
    """Vectorised classify_orbit.  Returns (verdicts, iterations, terminals)."""
    policy.check(cmap)
    seeds = np.asarray(seeds, dtype=np.complex128).ravel()
    coef, xi, cap, max_iter, guard, line_rule = _kernel_args(cmap, policy)
    codes, iters, tr, ti = _kernel.orbit_many(
        np.ascontiguousarray(seeds.real - xi), np.ascontiguousarray(seeds.imag), coef, xi, cap, max_iter, guard, line_rule
    )
    terminals = (tr + xi) + 1j * ti
    terminals[codes == _kernel.HIT_POLE] = np.inf
    return verdicts_from_codes(codes), iters, terminals


# --------------------------------------------------------------------------
# the real line


INTERVALS = ("(-inf,0)", "(0,e1)", "(e1,xi)", "(xi,e2)", "(e2,1)", "(1,inf)")
# sign of C(x) - x on each interval
EXPECTED_SIGN = {"(-inf,0)": 1, "(0,e1)": -1, "(e1,xi)": 1, "(xi,e2)": -1, "(e2,1)": 1, "(1,inf)": -1}

_BOUNDARY_TOL = 1e-12


@dataclass(frozen=True)
class RealLineFacts:
    sign_of_Cx_minus_x: int
    interval_tag: str
    predicted_sign: int
    value: float


def _sign(v: float) -> int:
    return (v > 0) - (v < 0)


def real_line_facts(cmap: ChebyshevMap, x: float) -> RealLineFacts:
    """Observed sign of C(x) - x next to the sign predicted by its factorisation.

    C(x) - x = -x (x-1) E(x) / (2 ((k+m) x - k)^3) with E > 0 outside [e1, e2].
    """
    x = float(x)
    e1, e2 = extraneous_points(cmap.k, cmap.m)
    marks = (0.0, e1, cmap.xi, e2, 1.0)
    for p in marks:
        if abs(x - p) <= _BOUNDARY_TOL:
            raise BoundaryInput(f"x = {x} is a distinguished point ({p})")
    idx = sum(x > p for p in marks)
    tag = INTERVALS[idx]
    e_sign = -1 if e1 < x < e2 else 1
    predicted = _sign(-x) * _sign(x - 1) * e_sign * _sign(cmap.d * x - cmap.k)
    value = evaluate(cmap, x)
    observed = 1 if value is INF else _sign(value.real - x)
    return RealLineFacts(observed, tag, predicted, math.inf if value is INF else value.real)


# --------------------------------------------------------------------------
# the pole line Re z = 1/2 for k == m


@dataclass(frozen=True)
class LineDynamics:
    m: int
    zeta: float

    def quartic(self, y: float) -> float:
        """16(2m-1)(4m-1) y^4 - 24 m y^2 - 1, whose positive root is zeta."""
        m = self.m
        return 16 * (2 * m - 1) * (4 * m - 1) * y**4 - 24 * m * y * y - 1


def compute_zeta(m: int) -> float:
    """Unique positive zero of phi_m, from the quadratic in y^2."""
    if m < 1:
        raise ValueError("m must be >= 1")
    a = 16 * (2 * m - 1) * (4 * m - 1)
    b = 24 * m
    # positive root of a t^2 - b t - 1 = 0
    t = (b + math.sqrt(b * b + 4 * a)) / (2 * a)
    return math.sqrt(t)


def line_dynamics(m: int) -> LineDynamics:
    return LineDynamics(m, compute_zeta(m))


def phi_eval(line: LineDynamics, y: float) -> float:
    """phi_m(y), where C_m(1/2 + i y) = 1/2 + i phi_m(y)."""
    if abs(y) < 1e-300:
        raise ZeroInput("phi is undefined at 0")
    m = line.m
    return (16 * (2 * m - 1) * (4 * m - 1) * y**4 - 24 * m * y * y - 1) / (128 * m * m * y**3)


def phi_return_time(line: LineDynamics, y: float, cap: int) -> Optional[int]:
    """Smallest n <= cap with phi^n(y) in (0, zeta]; None if the cap runs out."""
    if y <= line.zeta:
        raise DomainError(f"y = {y} must exceed zeta = {line.zeta}")
    if cap < 1:
        raise ValueError("cap must be >= 1")
    for n in range(1, cap + 1):
        y = phi_eval(line, y)
        if 0 < y <= line.zeta:
            return n
    return None


def phi_orbit(line: LineDynamics, y: float, n: int) -> list:
    out = [y]
    for _ in range(n):
        y = phi_eval(line, y)
        out.append(y)
    return out
