"""Forward and inverse stereographic maps through the pole N = (0, 0, c).

The forward map sends (u, v) in the plane z = 0 to the second intersection of
the ray N + t·((u, v, 0) − N) with the quadric.  For the ellipsoid the chart
covers all of the surface except N; for the paraboloid the plane origin is
additionally excluded because the ray through N and (0, 0, 0) is the axis.
The inverse is (x, y, z) ↦ (cx/(c−z), cy/(c−z)) for both families.
"""

import math
from typing import NamedTuple

from .errors import NotOnSurface, ParaboloidOriginUndefined, PoleNotProjectable
from .surfaces import (
    DEFAULT_MEMBERSHIP_TOL,
    ELLIPSOID,
    PlanePoint,
    Quadric,
    SurfacePoint,
    _sag,
    implicit_residual,
)

#: |c − z| below this fraction of c counts as the pole and is not invertible.
POLE_THRESHOLD = 1e-12


class ProjectionScalars(NamedTuple):
    """Ray parameter t and the denominator it was isolated from."""

    t: float
    denom: float  # b²u² + a²v² + a²b² (ellipsoid) or b²u² + a²v² (paraboloid)


class JacobianColumns(NamedTuple):
    """Tangent columns ∂/∂u and ∂/∂v of the forward map, plus their cross product."""

    d_u: tuple
    d_v: tuple
    cross: tuple


def _cross(p, q):
    return (
        p[1] * q[2] - p[2] * q[1],
        p[2] * q[0] - p[0] * q[2],
        p[0] * q[1] - p[1] * q[0],
    )


def line_parameter(q: Quadric, p) -> ProjectionScalars:
    """Solve the ray/quadric intersection for t, returning (t, denominator).

    The surface point is then (t·u, t·v, (1 − t)·c).  Ellipsoid:
    t = 2a²b²/(b²u² + a²v² + a²b²), always in (0, 2].  Paraboloid:
    t = c·a²b²/(b²u² + a²v²), undefined at the plane origin.
    """
    u, v = p
    a2 = q.a * q.a
    b2 = q.b * q.b
    if q.kind == ELLIPSOID:
        denom = b2 * u * u + a2 * v * v + a2 * b2
        return ProjectionScalars(2.0 * a2 * b2 / denom, denom)
    denom = b2 * u * u + a2 * v * v
    if denom == 0.0:
        raise ParaboloidOriginUndefined(
            "the paraboloid chart is undefined at the plane origin (0, 0)"
        )
    return ProjectionScalars(q.c * a2 * b2 / denom, denom)


def project_to_surface(q: Quadric, p) -> SurfacePoint:
    """Map a plane point onto the quadric along the ray through the pole."""
    u, v = p
    a2 = q.a * q.a
    b2 = q.b * q.b
    if q.kind == ELLIPSOID:
        d = b2 * u * u + a2 * v * v + a2 * b2
        two = 2.0 * a2 * b2
        return SurfacePoint(
            two * u / d,
            two * v / d,
            q.c * (b2 * u * u + a2 * v * v - a2 * b2) / d,
        )
    m = b2 * u * u + a2 * v * v
    if m == 0.0:
        raise ParaboloidOriginUndefined(
            "the paraboloid chart is undefined at the plane origin (0, 0)"
        )
    coef = a2 * b2 * q.c
    x = coef * u / m
    y = coef * v / m
    # z through the defining equation keeps the membership residual at the
    # rounding floor even when x²/a² + y²/b² is large.
    return SurfacePoint(x, y, q.c - _sag(q, x, y))


def project_to_plane(q: Quadric, p, tol: float = DEFAULT_MEMBERSHIP_TOL) -> PlanePoint:
    """Invert the chart: (x, y, z) ↦ (cx/(c−z), cy/(c−z)).

    Requires the point to sit on the quadric within tol and away from the
    pole; every on-surface point with z < c is accepted, including z < 0 on
    the paraboloid.
    """
    x, y, z = p
    gap = q.c - z
    if abs(gap) <= POLE_THRESHOLD * q.c:
        raise PoleNotProjectable(
            f"point with z = {z!r} is at the pole of the chart (c = {q.c!r})"
        )
    residual = implicit_residual(q, p)
    if not abs(residual) <= tol:
        raise NotOnSurface(
            f"residual {residual!r} exceeds membership tolerance {tol!r}"
        )
    return PlanePoint(q.c * x / gap, q.c * y / gap)


def jacobian_columns(q: Quadric, p) -> JacobianColumns:
    """Hand-differentiated tangent columns of the forward map at (u, v).

    The cross product is computed from the two columns; for the paraboloid
    its third component is −a⁴b⁴c²/M², strictly negative, and for the
    ellipsoid the full product is (4a⁴b⁴/D³)(−2b²uc, −2a²vc, a²b² − b²u² − a²v²),
    never zero.
    """
    u, v = p
    a2 = q.a * q.a
    b2 = q.b * q.b
    c = q.c
    if q.kind == ELLIPSOID:
        d = b2 * u * u + a2 * v * v + a2 * b2
        d2 = d * d
        d_u = (
            2.0 * a2 * b2 * (d - 2.0 * b2 * u * u) / d2,
            -4.0 * a2 * b2 * b2 * u * v / d2,
            4.0 * a2 * b2 * b2 * u * c / d2,
        )
        d_v = (
            -4.0 * a2 * a2 * b2 * u * v / d2,
            2.0 * a2 * b2 * (d - 2.0 * a2 * v * v) / d2,
            4.0 * a2 * a2 * b2 * v * c / d2,
        )
    else:
        m = b2 * u * u + a2 * v * v
        if m == 0.0:
            raise ParaboloidOriginUndefined(
                "the paraboloid chart is undefined at the plane origin (0, 0)"
            )
        m2 = m * m
        d_u = (
            a2 * b2 * c * (m - 2.0 * b2 * u * u) / m2,
            -2.0 * a2 * b2 * b2 * c * u * v / m2,
            2.0 * a2 * b2 * b2 * c * c * u / m2,
        )
        d_v = (
            -2.0 * a2 * a2 * b2 * c * u * v / m2,
            a2 * b2 * c * (m - 2.0 * a2 * v * v) / m2,
            2.0 * a2 * a2 * b2 * c * c * v / m2,
        )
    return JacobianColumns(d_u, d_v, _cross(d_u, d_v))


def is_regular_at(q: Quadric, p) -> bool:
    """Executable witness that the differential is injective at (u, v)."""
    cross = jacobian_columns(q, p).cross
    return math.hypot(*cross) > 0.0


def reflect_to_south_chart(p) -> SurfacePoint:
    """Mirror (x, y, z) ↦ (x, y, −z); composing with the inverse map covers
    everything except the south pole."""
    x, y, z = p
    return SurfacePoint(x, y, -z)
