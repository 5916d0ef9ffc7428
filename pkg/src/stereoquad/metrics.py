"""Eccentricity, curvature, arc length and area of axis-aligned ellipses.

``signed_curvature`` is the general plane-curve formula
k = (x′y″ − x″y′)/((x′)² + (y′)²)^{3/2}; ``ellipse_curvature`` is the closed
form AB/(A²sin²t + B²cos²t)^{3/2} for the standard parametrization.  Keeping
them separate lets each be tested against the other.
"""

import math

from .errors import SingularVelocity
from .oracles import Derivative2Jet, integrate
from .sections import SectionEllipse

#: Velocities below this are treated as vanishing (curvature undefined).
VELOCITY_GUARD = 1e-300

#: Default relative accuracy of the arc-length quadrature.
DEFAULT_ARC_REL_TOL = 1e-10


def focal_half_distance(e: SectionEllipse) -> float:
    """Distance from the center to either focus; zero for a circle."""
    major = max(e.semi_x, e.semi_y)
    minor = min(e.semi_x, e.semi_y)
    return math.sqrt((major - minor) * (major + minor))


def eccentricity(e: SectionEllipse) -> float:
    """Focal half-distance over the major semi-axis, in [0, 1)."""
    return focal_half_distance(e) / max(e.semi_x, e.semi_y)


def signed_curvature(jet) -> float:
    """Signed curvature of a plane curve from its 2-jet at one parameter."""
    (xp, yp), (xpp, ypp) = jet
    speed = math.hypot(xp, yp)
    if speed < VELOCITY_GUARD:
        raise SingularVelocity("curvature is undefined where the velocity vanishes")
    return (xp * ypp - xpp * yp) / speed**3


def ellipse_curvature(e: SectionEllipse, t: float) -> float:
    """Curvature of (A cos t, B sin t); strictly positive for this orientation."""
    s = math.sin(t)
    c = math.cos(t)
    denom = (e.semi_x * s) ** 2 + (e.semi_y * c) ** 2
    return e.semi_x * e.semi_y / denom**1.5


def arc_speed(e: SectionEllipse, t: float) -> float:
    """|α′(t)| = sqrt(A²sin²t + B²cos²t) for the standard parametrization."""
    return math.hypot(e.semi_x * math.sin(t), e.semi_y * math.cos(t))


def ellipse_arc_length(
    e: SectionEllipse,
    t0: float,
    t1: float,
    rel_tol: float = DEFAULT_ARC_REL_TOL,
) -> float:
    """Arc length over [t0, t1] by adaptive quadrature of the speed.

    There is no elementary antiderivative (the full perimeter is a complete
    elliptic integral), so the integral is evaluated numerically; use
    (0, 2π) for the whole perimeter.
    """
    if t1 < t0:
        raise ValueError("arc-length bounds must satisfy t0 <= t1")
    return integrate(lambda t: arc_speed(e, t), t0, t1, rel_tol).value


def ellipse_area(e: SectionEllipse) -> float:
    """π times the product of the semi-axes."""
    return math.pi * e.semi_x * e.semi_y
