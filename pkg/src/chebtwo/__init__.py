"""Chebyshev's root-finding method on polynomials with two distinct roots."""

from .chebmap import (
    AffineMap,
    ChebyshevMap,
    CriticalPointSet,
    FixedPointInfo,
    FixedPointKind,
    Stability,
    TwoRootPolynomial,
    build_map,
    conjugate_from_general,
    critical_points,
    eval_derivative,
    evaluate,
    extraneous_points,
    fixed_points,
    newton_map_eval,
)
from .dynamics import (
    LineDynamics,
    OrbitPolicy,
    OrbitResult,
    Verdict,
    classify_many,
    classify_orbit,
    compute_zeta,
    line_dynamics,
    phi_eval,
    phi_return_time,
    real_line_facts,
)
from .errors import (
    BoundaryInput,
    ChebError,
    CoverageError,
    DomainError,
    EmptyJulia,
    MapOverflow,
    NoConvergence,
    NoCrossing,
    PoleInput,
    ZeroInput,
)
from .numeric import INF, RealPoly, RootSet, find_roots, poly_eval
from .raster import BasinRaster, BoundaryEstimate, Window, emit_ppm, hausdorff_to_L, ppm_bytes, probe_boundary, render
from .verify import CheckResult, VerificationReport, immediate_basin_split, run_suite

__version__ = "0.1.0"

__all__ = [
    "AffineMap",
    "BasinRaster",
    "BoundaryEstimate",
    "BoundaryInput",
    "ChebError",
    "ChebyshevMap",
    "CheckResult",
    "CoverageError",
    "CriticalPointSet",
    "DomainError",
    "EmptyJulia",
    "FixedPointInfo",
    "FixedPointKind",
    "INF",
    "LineDynamics",
    "MapOverflow",
    "NoConvergence",
    "NoCrossing",
    "OrbitPolicy",
    "OrbitResult",
    "PoleInput",
    "RealPoly",
    "RootSet",
    "Stability",
    "TwoRootPolynomial",
    "Verdict",
    "VerificationReport",
    "Window",
    "ZeroInput",
    "build_map",
    "classify_many",
    "classify_orbit",
    "compute_zeta",
    "conjugate_from_general",
    "critical_points",
    "emit_ppm",
    "eval_derivative",
    "evaluate",
    "extraneous_points",
    "find_roots",
    "fixed_points",
    "hausdorff_to_L",
    "immediate_basin_split",
    "line_dynamics",
    "newton_map_eval",
    "phi_eval",
    "phi_return_time",
    "poly_eval",
    "ppm_bytes",
    "probe_boundary",
    "real_line_facts",
    "render",
    "run_suite",
]
