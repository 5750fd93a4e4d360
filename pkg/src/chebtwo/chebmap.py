"""Chebyshev's root-finding map for polynomials with two distinct roots.

After an affine change of variables every such polynomial becomes
``p(z) = z**k * (z - 1)**m`` and Chebyshev's method becomes the quartic

    C(z) = (A0 z^4 + A1 z^3 + A2 z^2 + A3 z) / (2 ((k+m) z - k)^3)

with a single triple pole at ``xi = k / (k+m)``.  All coefficients are
computed in exact integer arithmetic and converted to float once.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .errors import MapOverflow, PoleInput
from .numeric import EPS, INF, RealPoly, RootSet, XComplex, as_xcomplex, find_roots, poly_abs_bound, poly_eval

MAX_DEGREE_SUM = 10**6
_INT128 = 2**127

POLE_RADIUS = 1e-8  # evaluate() returns INF this close to the pole
ASYMPTOTIC_RADIUS = 1e150
_SCALED_RADIUS = 1e50
DERIVATIVE_POLE_GUARD = 1e-300
NEUTRAL_TOL = 1e-12


def numerator_coefficients(k: int, m: int) -> tuple:
    """Integers (A0, A1, A2, A3) of the numerator, highest degree first."""
    d = k + m
    a0 = d * (d - 1) * (2 * d - 1)
    a1 = (3 - 6 * k) * d * d + (6 * k - 1) * d - 2 * k
    a2 = 3 * k * (k - 1) * (2 * d - 1)
    a3 = -k * (k - 1) * (2 * k - 1)
    return a0, a1, a2, a3


def derivative_quartic_coefficients(k: int, m: int) -> tuple:
    """Integer coefficients of F, ascending, where C'(z) = F(z) / (2 ((k+m) z - k)^4)."""
    d = k + m
    return (
        k * k * (k - 1) * (2 * k - 1),
        -2 * k * (k - 1) * ((4 * k + 1) * d - 3 * k),
        3 * k * (k * (d - 1) * (3 * d - 2) + (k - 1) * d * d),
        4 * k * d * (d - 1) * (-2 * d + 1),
        d * d * (d - 1) * (2 * d - 1),
    )


def extraneous_quadratic_coefficients(k: int, m: int) -> tuple:
    """Ascending integer coefficients of E, whose roots are the extraneous fixed points."""
    d = k + m
    return (3 * k * k - k, -2 * k * (3 * d - 1), d * (3 * d - 1))


def _check_int128(values, what):
    for v in values:
        if abs(v) >= _INT128:
            raise MapOverflow(f"{what} coefficient {v} exceeds the 128-bit range")


def _pole_laurent(k: int, m: int) -> tuple:
    """(c0, c1, c2, c3, c4) with C(xi + u) - xi = c4 u + c3 + c2/u + c1/u^2 + c0/u^3.

    Exact in rationals, so for k == m the odd-index entries are exactly 0
    and the float map is exactly odd in u.
    """
    d = k + m
    xi = Fraction(k, d)
    a0, a1, a2, a3 = numerator_coefficients(k, m)
    shifted = [Fraction(0)] * 5
    for power, a in ((4, a0), (3, a1), (2, a2), (1, a3)):
        for j in range(power + 1):
            shifted[j] += a * comb(power, j) * xi ** (power - j)
    scale = 2 * d**3
    shifted[3] -= xi * scale
    return tuple(float(c / scale) for c in shifted)


@dataclass(frozen=True)
class ChebyshevMap:
    k: int
    m: int
    numer: RealPoly
    xi: float
    denom_scale: float
    fquartic: RealPoly
    numer_int: tuple = field(repr=False)
    fquartic_int: tuple = field(repr=False)
    laurent: tuple = field(repr=False)

    @property
    def d(self) -> int:
        return self.k + self.m

    @property
    def symmetric(self) -> bool:
        return self.k == self.m

    @property
    def asymptotic_factor(self) -> float:
        """C(z) ~ factor * z as z -> infinity; the reciprocal of the multiplier at infinity."""
        d = self.d
        return (2 * d * d - 3 * d + 1) / (2 * d * d)

    def __call__(self, z):
        return evaluate(self, z)

    def derivative(self, z):
        return eval_derivative(self, z)


def build_map(k: int, m: int) -> ChebyshevMap:
    if isinstance(k, bool) or isinstance(m, bool) or int(k) != k or int(m) != m:
        raise ValueError("multiplicities must be integers")
    k, m = int(k), int(m)
    if k < 1 or m < 1:
        raise ValueError(f"multiplicities must be >= 1, got k={k}, m={m}")
    if k + m > MAX_DEGREE_SUM:
        raise ValueError(f"k + m must not exceed {MAX_DEGREE_SUM}")
    a0, a1, a2, a3 = numerator_coefficients(k, m)
    fq = derivative_quartic_coefficients(k, m)
    _check_int128((a0, a1, a2, a3), "numerator")
    _check_int128(fq, "derivative quartic")
    d = k + m
    return ChebyshevMap(
        k=k,
        m=m,
        numer=RealPoly([0, a3, a2, a1, a0]),
        xi=k / d,
        denom_scale=float(2 * d**3),
        fquartic=RealPoly(fq),
        numer_int=(0, a3, a2, a1, a0),
        fquartic_int=fq,
        laurent=_pole_laurent(k, m),
    )


def evaluate(cmap: ChebyshevMap, z) -> XComplex:
    z = as_xcomplex(z)
    if z is INF:
        return INF
    if abs(z - cmap.xi) < POLE_RADIUS:
        return INF
    r = abs(z)
    if r > ASYMPTOTIC_RADIUS:
        return z * cmap.asymptotic_factor
    k, d = cmap.k, cmap.d
    if r > _SCALED_RADIUS:
        # same rational function divided through by z^3, free of overflow
        _, a3, a2, a1, a0 = cmap.numer.coeffs
        w = 1 / z
        return ((a0 * z + a1) + w * (a2 + w * a3)) / (2 * (d - k * w) ** 3)
    return poly_eval(cmap.numer, z) / (2 * (d * z - k) ** 3)


def eval_derivative(cmap: ChebyshevMap, z) -> complex:
    z = as_xcomplex(z)
    if z is INF:
        raise PoleInput("derivative at infinity is taken in the inverse coordinate")
    if abs(z - cmap.xi) <= DERIVATIVE_POLE_GUARD:
        raise PoleInput(f"z = {z} is the pole of the map")
    return poly_eval(cmap.fquartic, z) / (2 * (cmap.d * z - cmap.k) ** 4)


def inverse_coordinate_derivative(cmap: ChebyshevMap) -> float:
    """S'(0) for S(w) = 1 / C(1/w), from the map coefficients.

    S(w) = 2 w (d - k w)^3 / (A0 + A1 w + A2 w^2 + A3 w^3), hence
    S'(0) = 2 d^3 / A0.  Computed from the stored numerator, not from the
    multiplier closed form.
    """
    a0 = cmap.numer.coeffs[4]
    return 2 * cmap.d**3 / a0


class FixedPointKind(enum.Enum):
    ROOT = "RootOfP"
    EXTRANEOUS = "Extraneous"
    INFINITY = "Infinity"


class Stability(enum.Enum):
    SUPER_ATTRACTING = "SuperAttracting"
    ATTRACTING = "Attracting"
    NEUTRAL = "Neutral"
    REPELLING = "Repelling"

    @classmethod
    def from_multiplier(cls, lam) -> "Stability":
        a = abs(lam)
        if a == 0:
            return cls.SUPER_ATTRACTING
        if abs(a - 1) <= NEUTRAL_TOL:
            return cls.NEUTRAL
        return cls.ATTRACTING if a < 1 else cls.REPELLING


@dataclass(frozen=True)
class FixedPointInfo:
    location: XComplex
    multiplier: float
    kind: FixedPointKind
    stability: Stability


def root_multiplier(mult: int) -> float:
    """Multiplier of Chebyshev's method at a root of multiplicity ``mult``."""
    return float(Fraction((mult - 1) * (2 * mult - 1), 2 * mult * mult))


def infinity_multiplier(degree: int) -> float:
    d = degree
    return float(Fraction(2 * d * d, 2 * d * d - 3 * d + 1))


def extraneous_points(k: int, m: int) -> tuple:
    """(e1, e2), the two real extraneous fixed points, e1 < e2."""
    d = k + m
    s = 3 * d - 1
    half_gap = math.sqrt(k * m * s) / (d * s)
    xi = k / d
    return xi - half_gap, xi + half_gap


def extraneous_multiplier_closed_forms(k: int, m: int) -> tuple:
    """The two extraneous multipliers, for the '+' and '-' choices of sign.

    Which sign belongs to e1 is not fixed by the formula itself.
    """
    d = k + m
    s = 3 * d - 1
    base = k * m * (s - 1) / s
    skew = (k - m) * math.sqrt(k * m / s)
    factor = s * s / (k * m * d * d)
    return 1 + factor * (base + skew), 1 + factor * (base - skew)


def match_extraneous_multipliers(cmap: ChebyshevMap) -> tuple:
    """Pair each extraneous point with its closed-form multiplier.

    Returns ((e1, numeric1, closed1), (e2, numeric2, closed2)).  The pairing
    minimising the mismatch is chosen; a mismatch beyond rounding raises.
    """
    e1, e2 = extraneous_points(cmap.k, cmap.m)
    n1 = eval_derivative(cmap, e1).real
    n2 = eval_derivative(cmap, e2).real
    plus, minus = extraneous_multiplier_closed_forms(cmap.k, cmap.m)
    straight = abs(n1 - plus) / abs(plus) + abs(n2 - minus) / abs(minus)
    crossed = abs(n1 - minus) / abs(minus) + abs(n2 - plus) / abs(plus)
    c1, c2 = (plus, minus) if straight <= crossed else (minus, plus)
    for e, n, c in ((e1, n1, c1), (e2, n2, c2)):
        cond = poly_abs_bound(cmap.fquartic, e) / abs(poly_eval(cmap.fquartic, e))
        allowed = max(1e-8, 100 * EPS * cond)
        if abs(n - c) > allowed * abs(c):
            raise ArithmeticError(
                f"extraneous multiplier at {e}: derivative {n} vs closed form {c}"
            )
    return (e1, n1, c1), (e2, n2, c2)


def fixed_points(cmap: ChebyshevMap) -> list:
    """Five fixed points: 0, 1, infinity, e1, e2."""
    k, m = cmap.k, cmap.m
    out = []
    for loc, mult in ((0j, k), (1 + 0j, m)):
        lam = root_multiplier(mult)
        out.append(FixedPointInfo(loc, lam, FixedPointKind.ROOT, Stability.from_multiplier(lam)))
    lam_inf = infinity_multiplier(cmap.d)
    out.append(FixedPointInfo(INF, lam_inf, FixedPointKind.INFINITY, Stability.from_multiplier(lam_inf)))
    for e, numeric, _ in match_extraneous_multipliers(cmap):
        out.append(
            FixedPointInfo(complex(e, 0.0), numeric, FixedPointKind.EXTRANEOUS, Stability.from_multiplier(numeric))
        )
    return out


@dataclass(frozen=True)
class CriticalPointSet:
    pole: tuple  # (xi, 2)
    quartic_roots: RootSet

    @property
    def total_multiplicity(self) -> int:
        return self.pole[1] + self.quartic_roots.total_multiplicity

    def finite_points(self) -> list:
        """All critical points with multiplicity, pole included."""
        return [(complex(self.pole[0]), self.pole[1])] + list(self.quartic_roots.roots)


def critical_points(cmap: ChebyshevMap, tol: float = 1e-12) -> CriticalPointSet:
    if tol <= 0:
        raise ValueError("tol must be positive")
    return CriticalPointSet(pole=(cmap.xi, 2), quartic_roots=find_roots(cmap.fquartic, tol))


# --------------------------------------------------------------------------
# general two-root polynomials


@dataclass(frozen=True)
class TwoRootPolynomial:
    """leading * (z - root_a)**mult_k * (z - root_b)**mult_m"""

    root_a: complex
    root_b: complex
    mult_k: int
    mult_m: int
    leading: complex = 1.0

    def __post_init__(self):
        if self.root_a == self.root_b:
            raise ValueError("the two roots must be distinct")
        if self.mult_k < 1 or self.mult_m < 1:
            raise ValueError("multiplicities must be >= 1")
        if self.leading == 0:
            raise ValueError("leading coefficient must be nonzero")

    def __call__(self, z):
        return self.leading * (z - self.root_a) ** self.mult_k * (z - self.root_b) ** self.mult_m

    def chebyshev_step(self, z):
        """One step of Chebyshev's method, written with logarithmic derivatives."""
        da = z - self.root_a
        db = z - self.root_b
        if da == 0 or db == 0:
            return z
        g = self.mult_k / da + self.mult_m / db  # p'/p
        if g == 0:
            return INF
        h = g * g - self.mult_k / da**2 - self.mult_m / db**2  # p''/p
        newton = 1 / g
        return z - (1 + 0.5 * h * newton * newton) * newton


@dataclass(frozen=True)
class AffineMap:
    alpha: complex
    beta: complex

    def __call__(self, z):
        if z is INF:
            return INF
        return self.alpha * z + self.beta

    def inverse(self, w):
        if w is INF:
            return INF
        return (w - self.beta) / self.alpha


def conjugate_from_general(q: TwoRootPolynomial) -> tuple:
    """Normalised map and the affine T with T(0) = root_a, T(1) = root_b.

    Chebyshev's method for q equals T o C o T^-1.
    """
    a, b = complex(q.root_a), complex(q.root_b)
    return build_map(q.mult_k, q.mult_m), AffineMap(b - a, a)


def newton_map_eval(k: int, m: int, z) -> XComplex:
    """Newton's method for z^k (z-1)^m, kept for comparison."""
    z = as_xcomplex(z)
    if z is INF:
        return INF
    denom = (k + m) * z - k
    if denom == 0:
        return INF
    return z - z * (z - 1) / denom
