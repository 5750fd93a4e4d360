import math
from fractions import Fraction

import numpy as np
import pytest
import sympy as sp

from chebtwo.chebmap import (
    AffineMap,
    FixedPointKind,
    Stability,
    TwoRootPolynomial,
    build_map,
    conjugate_from_general,
    critical_points,
    derivative_quartic_coefficients,
    eval_derivative,
    evaluate,
    extraneous_multiplier_closed_forms,
    extraneous_points,
    extraneous_quadratic_coefficients,
    fixed_points,
    infinity_multiplier,
    inverse_coordinate_derivative,
    match_extraneous_multipliers,
    newton_map_eval,
    numerator_coefficients,
    root_multiplier,
)
from chebtwo.errors import MapOverflow, PoleInput
from chebtwo.numeric import INF

Z = sp.symbols("z")


def sympy_chebyshev(k, m):
    """C = z - (1 + L/2) p/p' with L = p p'' / p'^2, reduced to lowest terms."""
    p = Z**k * (Z - 1) ** m
    p1, p2 = sp.diff(p, Z), sp.diff(p, Z, 2)
    c = sp.cancel(Z - (1 + p * p2 / (2 * p1**2)) * p / p1)
    return sp.fraction(c)


def _ascending(expr):
    return [int(c) for c in reversed(sp.Poly(expr, Z).all_coeffs())]


PAIRS = [(1, 1), (1, 2), (2, 1), (2, 3), (3, 3), (6, 4), (3, 10), (5, 7)]


@pytest.mark.parametrize("k,m", PAIRS)
def test_numerator_matches_definition(k, m):
    num, den = sympy_chebyshev(k, m)
    d = k + m
    want_den = 2 * (d * Z - k) ** 3
    # normalise the sympy fraction to denominator 2 (dz - k)^3
    ratio = sp.cancel(want_den / den)
    assert ratio.is_number
    a0, a1, a2, a3 = numerator_coefficients(k, m)
    assert _ascending(sp.expand(num * ratio)) == [0, a3, a2, a1, a0]


@pytest.mark.parametrize("k,m", PAIRS)
def test_derivative_quartic_matches_definition(k, m):
    num, den = sympy_chebyshev(k, m)
    d = k + m
    dc = sp.cancel(sp.diff(num / den, Z) * 2 * (d * Z - k) ** 4)
    assert _ascending(sp.expand(dc)) == list(derivative_quartic_coefficients(k, m))


@pytest.mark.parametrize("k,m", PAIRS)
def test_shifted_quartic_coefficients(k, m):
    # F(x+1) coefficients, derived independently with sympy
    from chebtwo.verify import taylor_shift

    f = sum(c * Z**i for i, c in enumerate(derivative_quartic_coefficients(k, m)))
    want = _ascending(sp.expand(f.subs(Z, Z + 1)))
    assert taylor_shift(derivative_quartic_coefficients(k, m), 1) == want
    assert want[0] == m * m * (2 * m * m - 3 * m + 1)


def test_build_map_examples():
    c = build_map(1, 1)
    assert c.numer.coeffs == (0.0, 0.0, 0.0, -4.0, 6.0)
    assert c.xi == 0.5
    assert c.fquartic.coeffs == (0.0, 0.0, 12.0, -24.0, 12.0)
    assert build_map(6, 4).xi == 0.6


@pytest.mark.parametrize("bad", [(0, 1), (1, 0), (-1, 2), (1.5, 2), (True, 1)])
def test_build_map_rejects(bad):
    with pytest.raises(ValueError):
        build_map(*bad)


def test_build_map_size_budget():
    c = build_map(500_000, 500_000)
    assert max(abs(v) for v in c.fquartic_int) < 2**127
    with pytest.raises(ValueError):
        build_map(500_000, 500_001)
    from chebtwo.chebmap import _check_int128

    with pytest.raises(MapOverflow):
        _check_int128([2**127], "test")


def test_evaluate_examples():
    c = build_map(1, 1)
    assert evaluate(c, 2) == pytest.approx(32 / 27, rel=1e-15)
    for k, m in PAIRS:
        cm = build_map(k, m)
        assert evaluate(cm, 0) == 0
        assert abs(evaluate(cm, 1) - 1) <= 1e-12
        assert evaluate(cm, cm.xi) is INF
        assert evaluate(cm, INF) is INF


@pytest.mark.parametrize("k,m", PAIRS)
def test_evaluate_matches_sympy(k, m):
    num, den = sympy_chebyshev(k, m)
    f = sp.lambdify(Z, num / den, "mpmath")
    c = build_map(k, m)
    rng = np.random.default_rng(3)
    for z in rng.normal(0.5, 2, 10) + 1j * rng.normal(0, 2, 10):
        assert abs(evaluate(c, z) - complex(f(z))) <= 1e-12 * (1 + abs(z))


def test_evaluate_large_arguments():
    c = build_map(6, 4)
    for r in (1e40, 1e60, 1e200):
        assert evaluate(c, r) / r == pytest.approx(c.asymptotic_factor, rel=1e-12)
    assert evaluate(c, complex(1e308, 1e308)) is not INF


def test_derivative_examples():
    assert eval_derivative(build_map(1, 1), 0) == 0
    assert eval_derivative(build_map(6, 4), 0).real == pytest.approx(55 / 72, abs=1e-15)
    d = eval_derivative(build_map(2, 3), -1)
    assert d.real > 0 and d.imag == 0
    c = build_map(6, 4)
    with pytest.raises(PoleInput):
        eval_derivative(c, c.xi)
    with pytest.raises(PoleInput):
        eval_derivative(c, INF)


@pytest.mark.parametrize("k,m", PAIRS)
def test_derivative_matches_finite_difference(k, m):
    c = build_map(k, m)
    h = 1e-6
    for z in (-0.7 + 0.2j, 0.3 - 0.9j, 1.8 + 0.4j):
        fd = (evaluate(c, z + h) - evaluate(c, z - h)) / (2 * h)
        assert abs(eval_derivative(c, z) - fd) <= 1e-6 * (1 + abs(fd))


def test_extraneous_points_examples():
    e1, e2 = extraneous_points(1, 1)
    assert e1 == pytest.approx((5 - math.sqrt(5)) / 10, abs=1e-15)
    assert e2 == pytest.approx((5 + math.sqrt(5)) / 10, abs=1e-15)
    e1, e2 = extraneous_points(6, 4)
    assert 0 < e1 < 0.6 < e2 < 1
    assert (e1, e2) == pytest.approx((0.509028235, 0.690971765), abs=1e-9)


@pytest.mark.parametrize("k,m", PAIRS)
def test_extraneous_points_solve_fixed_point_equation(k, m):
    num, den = sympy_chebyshev(k, m)
    sols = sp.solve(sp.cancel(num - Z * den), Z)
    extra = sorted(float(s) for s in sols if s not in (0, 1))
    assert extraneous_points(k, m) == pytest.approx(extra, abs=1e-13)
    c0, c1, c2 = extraneous_quadratic_coefficients(k, m)
    for e in extraneous_points(k, m):
        assert abs(c2 * e * e + c1 * e + c0) <= 1e-12 * abs(c2)


def test_extraneous_multiplier_pairing():
    (e1, n1, c1), (e2, n2, c2) = match_extraneous_multipliers(build_map(6, 4))
    plus, minus = extraneous_multiplier_closed_forms(6, 4)
    assert (c1, c2) == (plus, minus)
    assert (n1, n2) == pytest.approx((9.7576, 8.4824), abs=1e-4)
    assert extraneous_multiplier_closed_forms(1, 1) == pytest.approx((6, 6))


def test_multipliers_exact():
    assert root_multiplier(1) == 0
    assert root_multiplier(6) == float(Fraction(55, 72))
    assert infinity_multiplier(2) == pytest.approx(8 / 3)
    c = build_map(3, 5)
    assert inverse_coordinate_derivative(c) == pytest.approx(infinity_multiplier(8), rel=1e-15)


def test_fixed_points_1_1():
    pts = fixed_points(build_map(1, 1))
    assert len(pts) == 5
    kinds = [p.kind for p in pts]
    assert kinds.count(FixedPointKind.ROOT) == 2 and kinds.count(FixedPointKind.EXTRANEOUS) == 2
    root0 = pts[0]
    assert root0.multiplier == 0 and root0.stability is Stability.SUPER_ATTRACTING
    inf = next(p for p in pts if p.kind is FixedPointKind.INFINITY)
    assert inf.location is INF
    assert inf.multiplier == pytest.approx(8 / 3) and inf.stability is Stability.REPELLING
    for p in pts:
        if p.location is not INF:
            assert abs(evaluate(build_map(1, 1), p.location) - p.location) <= 1e-10 * (1 + abs(p.location))


def test_stability_classes():
    assert Stability.from_multiplier(0) is Stability.SUPER_ATTRACTING
    assert Stability.from_multiplier(0.5) is Stability.ATTRACTING
    assert Stability.from_multiplier(1 + 1e-13) is Stability.NEUTRAL
    assert Stability.from_multiplier(-3) is Stability.REPELLING


def test_critical_points_1_1():
    cp = critical_points(build_map(1, 1))
    assert cp.total_multiplicity == 6
    got = sorted((round(z.real, 9), round(z.imag, 9), n) for z, n in cp.finite_points())
    assert got == [(0.0, 0.0, 2), (0.5, 0.0, 2), (1.0, 0.0, 2)]


@pytest.mark.parametrize("m", [2, 3, 5, 8])
def test_critical_points_k1(m):
    cp = critical_points(build_map(1, m))
    want = [0j, 0j] + [(2 + s * 1j * math.sqrt((m - 1) / (2 * m + 1))) / (m + 1) for s in (1, -1)]
    got = [z for z, n in cp.quartic_roots.roots for _ in range(n)]
    assert len(got) == 4
    for w in want:
        assert min(abs(g - w) for g in got) < 1e-9
    assert cp.pole == (1 / (m + 1), 2)


def test_critical_points_6_4():
    cp = critical_points(build_map(6, 4))
    for z in cp.quartic_roots.locations():
        assert not (abs(z.imag) < 1e-9 and (z.real < 0 or z.real > 1))
        assert any(abs(w - z.conjugate()) < 1e-12 for w in cp.quartic_roots.locations())


def test_conjugation_examples():
    q = TwoRootPolynomial(0, 1, 2, 3, leading=5)
    _, t = conjugate_from_general(q)
    assert t(0.3 + 0.2j) == 0.3 + 0.2j
    cmap, t = conjugate_from_general(TwoRootPolynomial(-1, 1, 1, 1))
    assert (t(0), t(1), t(cmap.xi)) == (-1, 1, 0)
    cmap, t = conjugate_from_general(TwoRootPolynomial(2, 2 + 4j, 3, 10))
    assert t.alpha == 4j and t.beta == 2
    assert t(cmap.xi) == pytest.approx(2 + 12j / 13, abs=1e-15)
    assert t.inverse(t(0.25 - 1j)) == pytest.approx(0.25 - 1j)
    assert AffineMap(2, 1)(INF) is INF


def _general_step(roots, mults, lead, z):
    """Chebyshev step from expanded coefficients, independent of the package."""
    coeffs = np.array([lead], dtype=complex)
    for r, n in zip(roots, mults):
        for _ in range(n):
            coeffs = np.polymul(coeffs, [1, -r])
    p, p1, p2 = (np.polyval(np.polyder(coeffs, j), z) for j in range(3))
    return z - (1 + p * p2 / (2 * p1 * p1)) * p / p1


@pytest.mark.parametrize(
    "a,b,k,m,lead",
    [(2, 2 + 4j, 3, 10, 1), (-1, 1, 1, 1, 2), (0.5 - 1j, -2j, 2, 5, -3 + 1j), (1, 3, 4, 4, 0.5)],
)
def test_conjugation_round_trip(a, b, k, m, lead):
    q = TwoRootPolynomial(a, b, k, m, leading=lead)
    cmap, t = conjugate_from_general(q)
    rng = np.random.default_rng(11)
    for w in rng.normal(0, 2, 8) + 1j * rng.normal(0, 2, 8):
        w = t(complex(w))
        direct = _general_step([a, b], [k, m], lead, w)
        via = t(evaluate(cmap, t.inverse(w)))
        assert abs(direct - via) <= 1e-9 * (1 + abs(direct))
        assert abs(q.chebyshev_step(w) - direct) <= 1e-9 * (1 + abs(direct))


def test_newton_map():
    assert newton_map_eval(1, 1, 1j) == pytest.approx(0.2 + 0.4j, abs=1e-15)
    # oracle: z - p/p' for p = z^2 - z
    z = 1j
    assert newton_map_eval(1, 1, z) == pytest.approx(z - (z * z - z) / (2 * z - 1))
    for k, m in PAIRS:
        assert newton_map_eval(k, m, 0) == 0 and newton_map_eval(k, m, 1) == 1
    for y in np.linspace(-3, 3, 13):
        assert newton_map_eval(1, 1, complex(0.5, y)).real == pytest.approx(0.5, abs=1e-15) if y else True
