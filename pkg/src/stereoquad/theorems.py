"""Executable checks of the eight section/projection identities.

For a horizontal section at height d and its projected image in z = 0 the two
ellipses are similar with ratio λ = c/(c−d), so:

* eccentricity is preserved (T1 ellipsoid, T2 paraboloid),
* curvature scales by (c−d)/c pointwise (T3, T4),
* arc length scales by c/(c−d) (T5, T6),
* area scales by (c/(c−d))² (T7, T8).

Each verifier evaluates both sides numerically and reports the observed
error; nothing is taken on faith from the algebra.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .metrics import (
    eccentricity,
    ellipse_arc_length,
    ellipse_area,
    ellipse_curvature,
)
from .oracles import polygon_area
from .sections import (
    TWO_PI,
    projected_ellipse,
    scaling_factor,
    section_ellipse,
)
from .surfaces import ELLIPSOID, Quadric

DEFAULT_ECCENTRICITY_TOL = 1e-12   # absolute, the quantities are in [0, 1)
DEFAULT_CURVATURE_TOL = 1e-10      # relative to the peak projected curvature
DEFAULT_ARCLENGTH_TOL = 1e-8       # relative to the projected perimeter
DEFAULT_AREA_TOL = 1e-12           # relative to the projected area
DEFAULT_CURVATURE_SAMPLES = 360

#: Boundary samples and tolerance for the shoelace cross-check inside T7/T8.
AREA_ORACLE_SAMPLES = 4096
AREA_ORACLE_TOL = 1e-6


@dataclass(frozen=True)
class TheoremReport:
    """Outcome of one identity check at one (quadric, d) pair.

    ``passed`` is exactly ``max_abs_error <= tolerance``, additionally
    requiring the independent shoelace check for the area theorems.
    """

    theorem_id: str
    quadric: Quadric
    d: float
    lhs: object            # projected-side value(s)
    rhs: object            # section-side value(s)
    expected_ratio: float
    max_abs_error: float
    tolerance: float
    passed: bool
    oracle_rel_error: float | None = None


@dataclass(frozen=True)
class RemarkReport:
    """Trends of the projected ellipse as the section plane climbs toward c."""

    d_values: tuple
    curvature_trend: tuple   # curvature at t = 0
    length_trend: tuple      # full perimeter
    area_trend: tuple
    monotone_flags: dict = field(compare=False)


def _ids(q: Quadric) -> tuple:
    return ("T1", "T3", "T5", "T7") if q.kind == ELLIPSOID else ("T2", "T4", "T6", "T8")


def verify_eccentricity(q: Quadric, d: float, tol: float = DEFAULT_ECCENTRICITY_TOL) -> TheoremReport:
    """T1/T2: section and projection have equal eccentricity.

    Both values are also compared against sqrt(|a² − b²|)/max(a, b), which is
    what the common value must be; the reported error is the worst of the
    three deviations.
    """
    lhs = eccentricity(projected_ellipse(q, d))
    rhs = eccentricity(section_ellipse(q, d))
    hi = max(q.a, q.b)
    lo = min(q.a, q.b)
    closed = math.sqrt((hi - lo) * (hi + lo)) / hi
    err = max(abs(lhs - rhs), abs(lhs - closed), abs(rhs - closed))
    return TheoremReport(_ids(q)[0], q, d, lhs, rhs, 1.0, err, tol, err <= tol)


def verify_curvature_ratio(
    q: Quadric,
    d: float,
    n_samples: int = DEFAULT_CURVATURE_SAMPLES,
    tol: float = DEFAULT_CURVATURE_TOL,
) -> TheoremReport:
    """T3/T4: projected curvature equals ((c−d)/c) times section curvature.

    Checked at n_samples uniform angles; the reported error is the worst
    pointwise deviation divided by the peak projected curvature.
    """
    if n_samples < 8:
        raise ValueError("need at least 8 curvature samples")
    sec = section_ellipse(q, d)
    proj = projected_ellipse(q, d)
    ratio = (q.c - d) / q.c
    angles = [TWO_PI * k / n_samples for k in range(n_samples)]
    k_proj = tuple(ellipse_curvature(proj, t) for t in angles)
    k_sec = tuple(ellipse_curvature(sec, t) for t in angles)
    peak = max(k_proj)
    err = max(abs(p - ratio * s) for p, s in zip(k_proj, k_sec)) / peak
    return TheoremReport(_ids(q)[1], q, d, k_proj, k_sec, ratio, err, tol, err <= tol)


def verify_arclength_ratio(
    q: Quadric, d: float, rel_tol: float = DEFAULT_ARCLENGTH_TOL
) -> TheoremReport:
    """T5/T6: projected perimeter equals (c/(c−d)) times section perimeter.

    Both perimeters are integrated independently; the quadrature runs an
    order of magnitude tighter than the comparison so its own error does not
    consume the budget.
    """
    if rel_tol <= 0.0:
        raise ValueError("rel_tol must be positive")
    sec = section_ellipse(q, d)
    proj = projected_ellipse(q, d)
    ratio = scaling_factor(q, d)
    # floor at 1e-13: below that the panel estimates sit on the rounding
    # floor and adaptive refinement would only burn the budget
    quad_tol = max(1e-13, min(1e-10, rel_tol / 10.0))
    length_sec = ellipse_arc_length(sec, 0.0, TWO_PI, quad_tol)
    length_proj = ellipse_arc_length(proj, 0.0, TWO_PI, quad_tol)
    err = abs(length_proj - ratio * length_sec) / length_proj
    return TheoremReport(
        _ids(q)[2], q, d, length_proj, length_sec, ratio, err, rel_tol, err <= rel_tol
    )


def verify_area_ratio(q: Quadric, d: float, tol: float = DEFAULT_AREA_TOL) -> TheoremReport:
    """T7/T8: projected area equals (c/(c−d))² times section area.

    The closed-form areas carry the identity check; the section area is
    additionally confirmed against the shoelace area of a sampled boundary
    polygon, and the report only passes if both agree.
    """
    sec = section_ellipse(q, d)
    proj = projected_ellipse(q, d)
    ratio = scaling_factor(q, d)
    area_sec = ellipse_area(sec)
    area_proj = ellipse_area(proj)
    err = abs(area_proj - (ratio * ratio) * area_sec) / area_proj
    angles = np.linspace(0.0, TWO_PI, AREA_ORACLE_SAMPLES, endpoint=False)
    ring = np.column_stack((sec.semi_x * np.cos(angles), sec.semi_y * np.sin(angles)))
    oracle_err = abs(polygon_area(ring) - area_sec) / area_sec
    passed = err <= tol and oracle_err <= AREA_ORACLE_TOL
    return TheoremReport(
        _ids(q)[3], q, d, area_proj, area_sec, ratio * ratio, err, tol, passed,
        oracle_rel_error=oracle_err,
    )


def verify_all(
    q: Quadric,
    d: float,
    eccentricity_tol: float = DEFAULT_ECCENTRICITY_TOL,
    curvature_tol: float = DEFAULT_CURVATURE_TOL,
    arclength_tol: float = DEFAULT_ARCLENGTH_TOL,
    area_tol: float = DEFAULT_AREA_TOL,
    n_samples: int = DEFAULT_CURVATURE_SAMPLES,
) -> list:
    """All four identity checks for one (quadric, d) pair, in theorem order."""
    return [
        verify_eccentricity(q, d, eccentricity_tol),
        verify_curvature_ratio(q, d, n_samples, curvature_tol),
        verify_arclength_ratio(q, d, arclength_tol),
        verify_area_ratio(q, d, area_tol),
    ]


def remark_scan(q: Quadric, d_values) -> RemarkReport:
    """Track the projected ellipse while the section plane climbs toward c.

    Along a strictly increasing scan the projected curvature at t = 0 must
    fall while perimeter and area grow without bound; the flags record the
    strict monotonicity of each trend.
    """
    ds = [float(d) for d in d_values]
    if any(later <= earlier for earlier, later in zip(ds, ds[1:])):
        raise ValueError("d values must be strictly increasing")
    curvature = []
    length = []
    area = []
    for d in ds:
        proj = projected_ellipse(q, d)
        curvature.append(ellipse_curvature(proj, 0.0))
        length.append(ellipse_arc_length(proj, 0.0, TWO_PI))
        area.append(ellipse_area(proj))
    flags = {
        "curvature_strictly_decreasing": all(
            later < earlier for earlier, later in zip(curvature, curvature[1:])
        ),
        "length_strictly_increasing": all(
            later > earlier for earlier, later in zip(length, length[1:])
        ),
        "area_strictly_increasing": all(
            later > earlier for earlier, later in zip(area, area[1:])
        ),
    }
    return RemarkReport(tuple(ds), tuple(curvature), tuple(length), tuple(area), flags)
