"""Independent numerical machinery used to validate the closed forms.

Everything here is deliberately generic: adaptive Gauss-Legendre quadrature,
central finite differences, a focus-based eccentricity check, and the
shoelace area.  None of it knows the projection formulas, so agreement with
the closed-form modules is meaningful evidence.
"""

import math
from typing import Callable, NamedTuple

import numpy as np

from .errors import (
    DomainError,
    FocusCheckFailed,
    GeometryError,
    QuadratureNonConvergence,
    TooFewPoints,
)
from .projection import JacobianColumns
from .sections import TWO_PI, SectionEllipse

#: Default cap on integrand evaluations for one integrate() call.
DEFAULT_BUDGET = 1_000_000

_PANEL_ORDER = 15
_gl_nodes, _gl_weights = np.polynomial.legendre.leggauss(_PANEL_ORDER)
_NODES = tuple(float(x) for x in _gl_nodes)
_WEIGHTS = tuple(float(w) for w in _gl_weights)

#: Allowed spread of the focal distance sums, relative to the major axis.
FOCUS_SUM_TOL = 1e-10


class QuadratureResult(NamedTuple):
    value: float
    error_estimate: float
    evaluations: int


class Derivative2Jet(NamedTuple):
    """First and second derivative of a plane curve at one parameter value."""

    first: tuple
    second: tuple


def _panel(f: Callable[[float], float], a: float, b: float) -> float:
    mid = 0.5 * (a + b)
    half = 0.5 * (b - a)
    return half * math.fsum(w * f(mid + half * x) for x, w in zip(_NODES, _WEIGHTS))


def integrate(
    f: Callable[[float], float],
    a: float,
    b: float,
    rel_tol: float,
    budget: int = DEFAULT_BUDGET,
) -> QuadratureResult:
    """Adaptive bisection with fixed 15-point Gauss-Legendre panels.

    A panel is accepted when refining it in half changes its value by no more
    than its width-proportional share of rel_tol times the whole-interval
    estimate.  Raises QuadratureNonConvergence once budget evaluations would
    be exceeded.
    """
    if b < a:
        raise ValueError("integration bounds must satisfy a <= b")
    if rel_tol <= 0.0:
        raise ValueError("rel_tol must be positive")
    if a == b:
        return QuadratureResult(0.0, 0.0, 0)

    coarse = _panel(f, a, b)
    evaluations = _PANEL_ORDER
    scale = max(abs(coarse), 1e-300)
    width = b - a
    pending = [(a, b, coarse)]
    value = 0.0
    error = 0.0
    while pending:
        x0, x1, whole = pending.pop()
        if evaluations + 2 * _PANEL_ORDER > budget:
            raise QuadratureNonConvergence(
                f"budget of {budget} evaluations exhausted before rel_tol={rel_tol!r}"
            )
        mid = 0.5 * (x0 + x1)
        left = _panel(f, x0, mid)
        right = _panel(f, mid, x1)
        evaluations += 2 * _PANEL_ORDER
        refined = left + right
        deviation = abs(refined - whole)
        share = rel_tol * scale * ((x1 - x0) / width)
        if deviation <= share or (x1 - x0) <= 1e-14 * width:
            value += refined
            error += deviation
        else:
            pending.append((x0, mid, left))
            pending.append((mid, x1, right))
    return QuadratureResult(value, error, evaluations)


def fd_jet(curve: Callable[[float], tuple], t: float, h: float) -> Derivative2Jet:
    """Central-difference first and second derivatives of a plane curve."""
    if h <= 0.0:
        raise ValueError("step h must be positive")
    x_m, y_m = curve(t - h)
    x_0, y_0 = curve(t)
    x_p, y_p = curve(t + h)
    first = ((x_p - x_m) / (2.0 * h), (y_p - y_m) / (2.0 * h))
    second = (
        (x_p - 2.0 * x_0 + x_m) / (h * h),
        (y_p - 2.0 * y_0 + y_m) / (h * h),
    )
    return Derivative2Jet(first, second)


def fd_surface_jacobian(surface_map: Callable, p, h: float) -> JacobianColumns:
    """Central-difference Jacobian columns of a plane-to-space map at p.

    The cross product is taken on the numeric columns.  Raises DomainError if
    any stencil point falls outside the map's domain (e.g. the paraboloid
    chart's origin).
    """
    if h <= 0.0:
        raise ValueError("step h must be positive")
    u, v = p
    try:
        up = surface_map((u + h, v))
        um = surface_map((u - h, v))
        vp = surface_map((u, v + h))
        vm = surface_map((u, v - h))
    except GeometryError as exc:
        raise DomainError(
            f"stencil around ({u!r}, {v!r}) with h={h!r} left the map's domain"
        ) from exc
    d_u = tuple((pc - mc) / (2.0 * h) for pc, mc in zip(up, um))
    d_v = tuple((pc - mc) / (2.0 * h) for pc, mc in zip(vp, vm))
    cross = (
        d_u[1] * d_v[2] - d_u[2] * d_v[1],
        d_u[2] * d_v[0] - d_u[0] * d_v[2],
        d_u[0] * d_v[1] - d_u[1] * d_v[0],
    )
    return JacobianColumns(d_u, d_v, cross)


def foci_eccentricity(e: SectionEllipse, n: int) -> float:
    """Eccentricity recovered from the focus definition, no conic formulas.

    Places the foci on the major axis, verifies that the sum of distances
    from n boundary samples is constantly twice the major semi-axis, then
    returns focal distance over major semi-axis.
    """
    if n < 8:
        raise ValueError("need at least 8 boundary samples")
    major = max(e.semi_x, e.semi_y)
    minor = min(e.semi_x, e.semi_y)
    focal = math.sqrt((major - minor) * (major + minor))
    worst = 0.0
    for k in range(n):
        t = TWO_PI * k / n
        # Sampled in the frame whose first axis is the major one.
        px = major * math.cos(t)
        py = minor * math.sin(t)
        total = math.hypot(px - focal, py) + math.hypot(px + focal, py)
        worst = max(worst, abs(total - 2.0 * major))
    if not worst <= FOCUS_SUM_TOL * (2.0 * major):
        raise FocusCheckFailed(
            f"distance sums vary by {worst!r} over the boundary (major = {major!r})"
        )
    return focal / major


def polygon_area(points) -> float:
    """Shoelace area of a closed polygon, positive for counterclockwise order."""
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 2:
        raise ValueError("expected an ordered sequence of plane points")
    if pts.shape[0] < 3:
        raise TooFewPoints(f"a polygon needs at least 3 vertices, got {pts.shape[0]}")
    x = pts[:, 0]
    y = pts[:, 1]
    return 0.5 * float(np.dot(x, np.roll(y, -1)) - np.dot(y, np.roll(x, -1)))
