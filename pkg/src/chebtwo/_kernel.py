"""Compiled orbit kernels.

Orbits are iterated in the pole-centred coordinate u = z - xi, where

    u -> c4 u + c3 + c2 w + c1 w^2 + c0 w^3,   w = 1/u.

This form does not overflow for any finite u and, because complex
arithmetic is spelled out on real and imaginary parts, negating or
conjugating u negates or conjugates every intermediate exactly.  For
k == m (c1 = c3 = 0) the float map is therefore exactly odd, and rasters
are exactly mirror-symmetric about the pole line.
"""

import os

import numba
import numpy as np
from numba import njit, prange

if "NUMBA_THREADING_LAYER" not in os.environ:
    numba.config.THREADING_LAYER = "workqueue"

TO_ROOT0 = 0
TO_ROOT1 = 1
CAP_REACHED = 2
ON_LINE = 3
HIT_POLE = 4

_CONTRACT_FLOOR = 1e-15


@njit(cache=True, inline="always")
def step_u(ur, ui, c0, c1, c2, c3, c4):
    q = ur * ur + ui * ui
    wr = ur / q
    wi = -ui / q
    sr = c0 * wr + c1
    si = c0 * wi
    tr = sr * wr - si * wi
    ti = sr * wi + si * wr
    sr = tr + c2
    si = ti
    tr = sr * wr - si * wi
    ti = sr * wi + si * wr
    return c4 * ur + c3 + tr, c4 * ui + ti


@njit(cache=True)
def orbit_u(ur, ui, coef, xi, capture, max_iter, pole_guard, line_rule):
    """Returns (code, iterations, ur, ui) for one seed."""
    c0 = coef[0]
    c1 = coef[1]
    c2 = coef[2]
    c3 = coef[3]
    c4 = coef[4]
    cap2 = capture * capture
    one = 1.0 - xi
    guard2 = pole_guard * pole_guard
    n = 0
    while True:
        if line_rule and ur == 0.0:
            return ON_LINE, n, ur, ui
        if ur * ur + ui * ui < guard2:
            return HIT_POLE, n, ur, ui
        for target in range(2):
            shift = xi if target == 0 else -one
            dr = ur + shift
            d2 = dr * dr + ui * ui
            if d2 <= cap2:
                nr, ni = step_u(ur, ui, c0, c1, c2, c3, c4)
                er = nr + shift
                e2 = er * er + ni * ni
                if e2 <= d2 or e2 <= _CONTRACT_FLOOR * _CONTRACT_FLOOR:
                    return target, n, ur, ui
        if n >= max_iter:
            return CAP_REACHED, n, ur, ui
        ur, ui = step_u(ur, ui, c0, c1, c2, c3, c4)
        n += 1


@njit(cache=True, parallel=True)
def orbit_many(ur, ui, coef, xi, capture, max_iter, pole_guard, line_rule):
    n = ur.shape[0]
    codes = np.empty(n, np.int8)
    iters = np.empty(n, np.int32)
    tr = np.empty(n, np.float64)
    ti = np.empty(n, np.float64)
    for i in prange(n):
        c, it, a, b = orbit_u(ur[i], ui[i], coef, xi, capture, max_iter, pole_guard, line_rule)
        codes[i] = c
        iters[i] = it
        tr[i] = a
        ti[i] = b
    return codes, iters, tr, ti


@njit(cache=True, parallel=True)
def orbit_grid(u_re, u_im, coef, xi, capture, max_iter, pole_guard, line_rule):
    """u_re: per-column offsets, u_im: per-row offsets (row 0 = top)."""
    h = u_im.shape[0]
    w = u_re.shape[0]
    codes = np.empty((h, w), np.int8)
    iters = np.empty((h, w), np.int32)
    for j in prange(h):
        for i in range(w):
            c, it, a, b = orbit_u(u_re[i], u_im[j], coef, xi, capture, max_iter, pole_guard, line_rule)
            codes[j, i] = c
            iters[j, i] = it
    return codes, iters


def configure_threads(limit=None) -> int:
    """Cap the worker count at ``limit`` or $CHEB_THREADS (default: all cores)."""
    if limit is None:
        raw = os.environ.get("CHEB_THREADS", "").strip()
        limit = int(raw) if raw else numba.config.NUMBA_NUM_THREADS
    limit = max(1, min(int(limit), numba.config.NUMBA_NUM_THREADS))
    numba.set_num_threads(limit)
    return limit
