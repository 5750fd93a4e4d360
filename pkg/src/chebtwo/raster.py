"""Basin rasters over a rectangle of the plane, PPM output and boundary probes."""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from . import _kernel
from .chebmap import ChebyshevMap
from .dynamics import DEFAULT_POLICY, OrbitPolicy, Verdict, classify_orbit, verdicts_from_codes
from .errors import EmptyJulia, NoCrossing

MIN_PIXELS = 8


@dataclass(frozen=True)
class Window:
    re_min: float
    re_max: float
    im_min: float
    im_max: float
    width: int
    height: int

    def __post_init__(self):
        vals = (self.re_min, self.re_max, self.im_min, self.im_max)
        if not all(np.isfinite(vals)):
            raise ValueError("window bounds must be finite")
        if not (self.re_min < self.re_max and self.im_min < self.im_max):
            raise ValueError("window needs re_min < re_max and im_min < im_max")
        if self.width < MIN_PIXELS or self.height < MIN_PIXELS:
            raise ValueError(f"window must be at least {MIN_PIXELS}x{MIN_PIXELS} pixels")

    @classmethod
    def parse(cls, bounds: str, size: str) -> "Window":
        """From 'remin:remax:immin:immax' and 'WxH'."""
        parts = bounds.split(":")
        if len(parts) != 4:
            raise ValueError(f"window must be remin:remax:immin:immax, got {bounds!r}")
        dims = size.lower().split("x")
        if len(dims) != 2:
            raise ValueError(f"resolution must be WxH, got {size!r}")
        return cls(*(float(p) for p in parts), int(dims[0]), int(dims[1]))

    @property
    def dx(self) -> float:
        return (self.re_max - self.re_min) / self.width

    @property
    def dy(self) -> float:
        return (self.im_max - self.im_min) / self.height

    @property
    def centre(self) -> complex:
        return complex((self.re_min + self.re_max) / 2, (self.im_min + self.im_max) / 2)

    def _col_offsets(self) -> np.ndarray:
        return (np.arange(self.width) - (self.width - 1) / 2) * self.dx

    def _row_offsets(self) -> np.ndarray:
        # row 0 is the top edge
        return -(np.arange(self.height) - (self.height - 1) / 2) * self.dy

    def column_centres(self) -> np.ndarray:
        return self.centre.real + self._col_offsets()

    def row_centres(self) -> np.ndarray:
        return self.centre.imag + self._row_offsets()

    def pixel_of(self, z: complex):
        """(row, col) of the pixel whose centre is nearest z, or None if z is outside."""
        if not (self.re_min <= z.real <= self.re_max and self.im_min <= z.imag <= self.im_max):
            return None
        col = int(np.argmin(np.abs(self.column_centres() - z.real)))
        row = int(np.argmin(np.abs(self.row_centres() - z.imag)))
        return row, col


@dataclass(frozen=True)
class BasinRaster:
    window: Window
    k: int
    m: int
    verdicts: np.ndarray  # (height, width) int8 Verdict values
    iterations: np.ndarray  # (height, width) int32

    def cell(self, row: int, col: int):
        return Verdict(int(self.verdicts[row, col])), int(self.iterations[row, col])

    def fractions(self) -> dict:
        total = self.verdicts.size
        return {v.label: float(np.count_nonzero(self.verdicts == v)) / total for v in Verdict}

    def julia_mask(self) -> np.ndarray:
        """Pixels that sample the Julia set.

        Undecided pixels, plus decided pixels with a 4-neighbour decided for
        the other root.  The second kind straddles a basin boundary, which is
        where the Julia set lives when the Fatou set is the union of the two
        basins.
        """
        v = self.verdicts
        und = v == Verdict.UNDECIDED
        mask = und.copy()
        decided = ~und
        horiz = (v[:, 1:] != v[:, :-1]) & decided[:, 1:] & decided[:, :-1]
        vert = (v[1:, :] != v[:-1, :]) & decided[1:, :] & decided[:-1, :]
        mask[:, 1:] |= horiz
        mask[:, :-1] |= horiz
        mask[1:, :] |= vert
        mask[:-1, :] |= vert
        return mask


def render(cmap: ChebyshevMap, window: Window, policy: OrbitPolicy = DEFAULT_POLICY) -> BasinRaster:
    """Classify the orbit of every pixel centre."""
    policy.check(cmap)
    centre = window.centre
    # offsets are exactly antisymmetric, so windows centred on the pole line
    # sample mirror-image points exactly
    u_re = (centre.real - cmap.xi) + window._col_offsets()
    u_im = centre.imag + window._row_offsets()
    codes, iters = _kernel.orbit_grid(
        np.ascontiguousarray(u_re),
        np.ascontiguousarray(u_im),
        np.asarray(cmap.laurent, dtype=np.float64),
        cmap.xi,
        policy.capture_radius,
        policy.max_iter,
        policy.pole_guard,
        cmap.symmetric,
    )
    return BasinRaster(window, cmap.k, cmap.m, verdicts_from_codes(codes), iters)


# --------------------------------------------------------------------------
# PPM output

ROOT0_RGB = (30, 60, 200)
ROOT1_RGB = (230, 200, 40)
RAMP_ITERS = 60
RAMP_FLOOR = 0.4


def colorize(raster: BasinRaster) -> np.ndarray:
    """(height, width, 3) uint8 image.

    Basin colours darken linearly with iteration count, reaching 40% of the
    base colour at 60 iterations; Undecided pixels are black.
    """
    shade = 1.0 - (1.0 - RAMP_FLOOR) * np.minimum(raster.iterations, RAMP_ITERS) / RAMP_ITERS
    img = np.zeros(raster.verdicts.shape + (3,), dtype=np.uint8)
    for verdict, base in ((Verdict.TO_ROOT0, ROOT0_RGB), (Verdict.TO_ROOT1, ROOT1_RGB)):
        sel = raster.verdicts == verdict
        for ch in range(3):
            img[..., ch][sel] = np.floor(base[ch] * shade[sel] + 0.5).astype(np.uint8)
    return img


def ppm_bytes(raster: BasinRaster) -> bytes:
    h, w = raster.verdicts.shape
    return f"P6\n{w} {h}\n255\n".encode("ascii") + colorize(raster).tobytes()


def emit_ppm(raster: BasinRaster, path) -> None:
    if not str(path):
        raise FileNotFoundError("empty output path")
    with open(path, "wb") as fh:
        fh.write(ppm_bytes(raster))


# --------------------------------------------------------------------------
# boundary probing

PROBE_POLICY = OrbitPolicy(max_iter=20000)


@dataclass(frozen=True)
class BoundaryEstimate:
    points: tuple  # complex crossings
    max_deviation_from_L: float
    line: float = 0.5

    def to_json(self) -> str:
        return json.dumps(
            {
                "points": [[p.real, p.imag] for p in self.points],
                "max_deviation_from_L": self.max_deviation_from_L,
            }
        )


def _locate_crossing(cmap, y, tol, policy, re_left, re_right, max_retries=32):
    def verdict(x):
        return classify_orbit(cmap, complex(x, y), policy).verdict

    lo, hi = re_left, re_right
    v_lo, v_hi = verdict(lo), verdict(hi)
    if v_lo == v_hi or Verdict.UNDECIDED in (v_lo, v_hi):
        raise NoCrossing(f"segment at Im = {y} has end verdicts {v_lo.label}, {v_hi.label}")
    retries = 0
    nudge = 0.0
    while hi - lo > tol:
        mid = lo + (hi - lo) * (0.5 + nudge)
        v = verdict(mid)
        if v == v_lo:
            lo = mid
        elif v == v_hi:
            hi = mid
        else:
            a, b = verdict(mid - tol / 2), verdict(mid + tol / 2)
            if Verdict.UNDECIDED not in (a, b) and a != b:
                return complex(mid, y)
            # Undecided with no visible change around it; sample elsewhere
            retries += 1
            if retries > max_retries:
                raise NoCrossing(f"bisection at Im = {y} kept landing on undecided points")
            nudge = 0.1 * ((retries * 0.6180339887498949) % 1.0 - 0.5)
            continue
        nudge = 0.0
    return complex((lo + hi) / 2, y)


def probe_boundary(
    cmap: ChebyshevMap,
    im_values,
    tol: float,
    policy: OrbitPolicy = PROBE_POLICY,
    re_left: float = -1.0,
    re_right: float = 2.0,
) -> BoundaryEstimate:
    """Bisect each horizontal segment [re_left, re_right] + i y for a verdict change.

    Each returned point has points of both basins within ``tol``.  The
    reported deviation is measured from the vertical line through the pole.
    """
    if not tol > 0:
        raise ValueError("tol must be positive")
    pts = tuple(_locate_crossing(cmap, float(y), tol, policy, re_left, re_right) for y in im_values)
    dev = max((abs(p.real - cmap.xi) for p in pts), default=0.0)
    return BoundaryEstimate(pts, float(dev), cmap.xi)


def hausdorff_to_L(raster: BasinRaster) -> float:
    """One-sided Hausdorff distance from the sampled Julia set to Re z = 1/2."""
    if raster.k != raster.m:
        raise ValueError("the pole line is invariant only for k == m")
    mask = raster.julia_mask()
    if not mask.any():
        raise EmptyJulia("raster has no Julia-set pixels; increase the resolution")
    cols = np.nonzero(mask.any(axis=0))[0]
    return float(np.max(np.abs(raster.window.column_centres()[cols] - 0.5)))
