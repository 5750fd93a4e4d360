"""Extended complex numbers, real polynomials and a simultaneous root finder.

The root finder is an Aberth-Ehrlich iteration started from points on a
circle, followed by a clustering pass that turns tight groups of
approximations into multiple roots.  Multiple roots are re-located as simple
roots of the appropriate derivative, which restores full double precision
where plain simultaneous iteration would stall at ``eps ** (1/multiplicity)``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Sequence, Union

from .errors import NoConvergence

EPS = 2.220446049250313e-16


class _Infinity:
    """The point at infinity of the Riemann sphere.  Use the ``INF`` singleton."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "Infinity"

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()

XComplex = Union[complex, _Infinity]


def is_inf(z) -> bool:
    return z is INF


def as_xcomplex(z) -> XComplex:
    """Coerce a number to an extended complex value.

    Any infinite component collapses to the unsigned ``INF``; NaN is rejected.
    """
    if z is INF:
        return INF
    z = complex(z)
    if math.isnan(z.real) or math.isnan(z.imag):
        raise ValueError("NaN is not a point of the extended plane")
    if math.isinf(z.real) or math.isinf(z.imag):
        return INF
    return z


@dataclass(frozen=True)
class RealPoly:
    """Polynomial with real coefficients stored in ascending degree order."""

    coeffs: tuple

    def __init__(self, coeffs: Sequence[float]):
        cs = [float(c) for c in coeffs]
        if any(math.isnan(c) for c in cs):
            raise ValueError("NaN coefficient")
        if any(math.isinf(c) for c in cs):
            raise ValueError("infinite coefficient")
        while len(cs) > 1 and cs[-1] == 0.0:
            cs.pop()
        if not cs:
            cs = [0.0]
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> float:
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return self.coeffs == (0.0,)

    def __call__(self, z):
        return poly_eval(self, z)

    def __len__(self):
        return len(self.coeffs)


def poly_eval(p: RealPoly, z):
    """Horner evaluation.  Works on scalars and on numpy arrays alike."""
    if z is INF:
        return INF if p.degree >= 1 else p.coeffs[0]
    acc = p.coeffs[-1]
    for c in reversed(p.coeffs[:-1]):
        acc = acc * z + c
    if p.degree == 0:
        # keep the result the same shape/type as z
        return acc + 0 * z
    return acc


def poly_abs_bound(p: RealPoly, z) -> float:
    """sum |a_i| |z|^i, the scale against which Horner rounding is measured."""
    r = abs(z)
    acc = 0.0
    for c in reversed(p.coeffs):
        acc = acc * r + abs(c)
    return acc


def poly_derivative(p: RealPoly) -> RealPoly:
    if p.degree == 0:
        return RealPoly([0.0])
    return RealPoly([i * c for i, c in enumerate(p.coeffs)][1:])


def poly_nth_derivative(p: RealPoly, n: int) -> RealPoly:
    for _ in range(n):
        p = poly_derivative(p)
    return p


@dataclass(frozen=True)
class RootSet:
    """Distinct roots with multiplicities plus the worst residual |p(r)|."""

    roots: tuple  # of (complex, int)
    residual: float

    @property
    def total_multiplicity(self) -> int:
        return sum(mult for _, mult in self.roots)

    def locations(self) -> list:
        """Roots repeated according to multiplicity."""
        out = []
        for r, mult in self.roots:
            out.extend([r] * mult)
        return out


# --------------------------------------------------------------------------
# root finding

MAX_SWEEPS = 500
ANGLE_OFFSET = 0.4
CLUSTER_TOL = 1e-8
_GROUP_RADIUS = 5e-3  # relative; groups are validated before merging


def _aberth(coeffs: list, tol: float) -> list:
    """Aberth-Ehrlich iteration on a polynomial with nonzero constant term."""
    p = RealPoly(coeffs)
    dp = poly_derivative(p)
    n = p.degree
    lead = p.leading
    radius = 1.0 + max(abs(c / lead) for c in p.coeffs[:-1])
    z = [radius * cmath.exp(1j * (2 * math.pi * j / n + ANGLE_OFFSET)) for j in range(n)]
    done = [False] * n
    slack = 4 * (n + 1) * EPS
    for _ in range(MAX_SWEEPS):
        for i in range(n):
            if done[i]:
                continue
            zi = z[i]
            pv = poly_eval(p, zi)
            if abs(pv) <= slack * poly_abs_bound(p, zi):
                done[i] = True
                continue
            ratio = pv / poly_eval(dp, zi)
            repel = sum(1.0 / (zi - z[j]) for j in range(n) if j != i)
            step = ratio / (1.0 - ratio * repel)
            z[i] = zi - step
            if abs(step) <= tol * (1.0 + abs(z[i])):
                done[i] = True
        if all(done):
            return z
    raise NoConvergence(f"root iteration did not settle after {MAX_SWEEPS} sweeps")


def _newton(q: RealPoly, z: complex, iters: int = 60) -> complex:
    dq = poly_derivative(q)
    for _ in range(iters):
        d = poly_eval(dq, z)
        if d == 0:
            break
        step = poly_eval(q, z) / d
        z = z - step
        if abs(step) <= 2 * EPS * (1.0 + abs(z)):
            break
    return z


def _vanishes(p: RealPoly, z: complex, order: int) -> bool:
    """True when p and its first ``order - 1`` derivatives vanish at z to rounding level."""
    q = p
    for _ in range(order):
        if abs(poly_eval(q, z)) > 1e3 * (q.degree + 1) * EPS * poly_abs_bound(q, z):
            return False
        q = poly_derivative(q)
    return True


def _single_linkage(points: list, radius: float) -> list:
    groups = []
    unassigned = list(range(len(points)))
    while unassigned:
        group = [unassigned.pop(0)]
        grew = True
        while grew:
            grew = False
            for j in list(unassigned):
                if any(abs(points[j] - points[g]) <= radius for g in group):
                    group.append(j)
                    unassigned.remove(j)
                    grew = True
        groups.append(group)
    return groups


def find_roots(p: RealPoly, tol: float = 1e-12, cluster_tol: float = CLUSTER_TOL) -> RootSet:
    """All complex roots of ``p`` with multiplicities.

    ``cluster_tol`` is relative to the largest root modulus: final roots
    closer than that are reported as one root.  Raises ``NoConvergence``
    when the simultaneous iteration exceeds its sweep cap.
    """
    if p.is_zero():
        raise ValueError("the zero polynomial has no finite root set")
    if tol <= 0:
        raise ValueError("tol must be positive")
    if p.degree == 0:
        return RootSet((), 0.0)

    coeffs = list(p.coeffs)
    zero_mult = 0
    while coeffs[0] == 0.0:
        coeffs.pop(0)
        zero_mult += 1

    found: list = []  # (location, multiplicity)
    if zero_mult:
        found.append((0j, zero_mult))

    if len(coeffs) > 1:
        approx = _aberth(coeffs, tol)
        scale = max(1.0, max(abs(z) for z in approx))
        radius = _GROUP_RADIUS * scale
        for group in _single_linkage(approx, radius):
            members = [approx[i] for i in group]
            mult = len(members)
            if mult == 1:
                found.append((members[0], 1))
                continue
            centre = sum(members) / mult
            if abs(centre.imag) <= radius:
                centre = complex(centre.real, 0.0)
            located = _newton(poly_nth_derivative(p, mult - 1), centre)
            if abs(located - centre) <= radius and _vanishes(p, located, mult):
                found.append((located, mult))
            else:
                found.extend((z, 1) for z in members)

    found = _merge_close(found, cluster_tol)
    found = _symmetrize(found, cluster_tol)
    found.sort(key=lambda rm: (round(rm[0].real, 12), rm[0].imag))
    residual = max(abs(poly_eval(p, r)) for r, _ in found)
    return RootSet(tuple(found), float(residual))


def _merge_close(found: list, cluster_tol: float) -> list:
    if len(found) < 2:
        return found
    scale = max(1.0, max(abs(r) for r, _ in found))
    out: list = []
    for r, mult in found:
        for idx, (s, smult) in enumerate(out):
            if abs(r - s) <= cluster_tol * scale:
                w = smult + mult
                out[idx] = ((s * smult + r * mult) / w, w)
                break
        else:
            out.append((r, mult))
    return out


def _symmetrize(found: list, cluster_tol: float) -> list:
    """Make the root list closed under conjugation (coefficients are real).

    Upper- and lower-half roots of equal multiplicity are paired closest
    first.  A root left without a partner must be real and is snapped to the
    axis; inside tight clusters rounding can leave a real root slightly off it.
    """
    scale = max(1.0, max(abs(r) for r, _ in found))
    snap = max(cluster_tol, 1e-10) * scale
    out = []
    upper, lower = [], []
    for r, mult in found:
        if abs(r.imag) <= snap:
            out.append((complex(r.real, 0.0), mult))
        elif r.imag > 0:
            upper.append((r, mult))
        else:
            lower.append((r, mult))
    candidates = sorted(
        (abs(u - l.conjugate()), i, j)
        for i, (u, um) in enumerate(upper)
        for j, (l, lm) in enumerate(lower)
        if um == lm
    )
    used_u, used_l = set(), set()
    for _, i, j in candidates:
        if i in used_u or j in used_l:
            continue
        used_u.add(i)
        used_l.add(j)
        r = (upper[i][0] + lower[j][0].conjugate()) / 2
        out.append((r, upper[i][1]))
        out.append((r.conjugate(), upper[i][1]))
    leftover = [upper[i] for i in range(len(upper)) if i not in used_u]
    leftover += [lower[j] for j in range(len(lower)) if j not in used_l]
    out.extend((complex(r.real, 0.0), mult) for r, mult in leftover)
    return _merge_close(out, cluster_tol)
