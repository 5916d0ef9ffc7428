"""Horizontal sections of the quadrics and their projected images in z = 0.

Cutting either quadric with the plane z = d yields an origin-centered,
axis-aligned ellipse.  Pushing that ellipse through the inverse chart yields
another such ellipse in z = 0, similar to the first with ratio c/(c−d).
"""

import math
from typing import NamedTuple

from .errors import DegenerateSection, InvalidSampleCount
from .surfaces import ELLIPSOID, PlanePoint, Quadric

TWO_PI = 2.0 * math.pi


class SectionEllipse(NamedTuple):
    """x²/semi_x² + y²/semi_y² = 1 inside the plane z = plane_height."""

    semi_x: float
    semi_y: float
    plane_height: float


def wrap_angle(t: float) -> float:
    """Reduce a curve parameter to [0, 2π)."""
    t = math.fmod(t, TWO_PI)
    if t < 0.0:
        t += TWO_PI
    # tiny negatives round up to exactly 2π above
    return 0.0 if t == TWO_PI else t


def _check_height(q: Quadric, d: float) -> None:
    if q.kind == ELLIPSOID:
        if not -q.c < d < q.c:
            raise DegenerateSection(
                f"plane z = {d!r} meets the ellipsoid (c = {q.c!r}) in at most a point"
            )
    elif not d < q.c:
        raise DegenerateSection(
            f"plane z = {d!r} meets the paraboloid (c = {q.c!r}) in at most a point"
        )


def section_ellipse(q: Quadric, d: float) -> SectionEllipse:
    """The ellipse cut from the quadric by the plane z = d.

    Semi-axes: a√(c²−d²)/c and b√(c²−d²)/c for the ellipsoid (−c < d < c),
    a√(c−d) and b√(c−d) for the paraboloid (d < c).
    """
    d = float(d)
    _check_height(q, d)
    if q.kind == ELLIPSOID:
        chord = math.sqrt((q.c - d) * (q.c + d))
        return SectionEllipse(q.a * (chord / q.c), q.b * (chord / q.c), d)
    root = math.sqrt(q.c - d)
    return SectionEllipse(q.a * root, q.b * root, d)


def projected_ellipse(q: Quadric, d: float) -> SectionEllipse:
    """The image of the z = d section under the inverse chart, lying in z = 0.

    Semi-axes: a√(c²−d²)/(c−d) and b√(c²−d²)/(c−d) for the ellipsoid,
    ca/√(c−d) and cb/√(c−d) for the paraboloid.
    """
    d = float(d)
    _check_height(q, d)
    if q.kind == ELLIPSOID:
        chord = math.sqrt((q.c - d) * (q.c + d))
        return SectionEllipse(
            q.a * (chord / (q.c - d)), q.b * (chord / (q.c - d)), 0.0
        )
    # Grouped as (section semi-axis) × (similarity ratio) so that d = 0
    # reproduces the section bit for bit.
    root = math.sqrt(q.c - d)
    ratio = q.c / (q.c - d)
    return SectionEllipse(q.a * (root * ratio), q.b * (root * ratio), 0.0)


def scaling_factor(q: Quadric, d: float) -> float:
    """The similarity ratio c/(c−d) between a section's projection and the
    section itself; the single identity behind all the preserved quantities."""
    d = float(d)
    _check_height(q, d)
    return q.c / (q.c - d)


def evaluate_curve(e: SectionEllipse, t: float) -> PlanePoint:
    """The counterclockwise parametrization (semi_x·cos t, semi_y·sin t)."""
    return PlanePoint(e.semi_x * math.cos(t), e.semi_y * math.sin(t))


def sample_curve(e: SectionEllipse, n: int):
    """n samples (t_k, point) at the uniform angles t_k = 2πk/n, k = 0..n−1."""
    if not isinstance(n, int) or n < 3:
        raise InvalidSampleCount(f"need at least 3 samples on a closed curve, got {n!r}")
    return [(TWO_PI * k / n, evaluate_curve(e, TWO_PI * k / n)) for k in range(n)]
