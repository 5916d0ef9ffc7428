"""Quadric families: ellipsoids and elliptic paraboloids with their apex on the z-axis.

An ellipsoid is x²/a² + y²/b² + z²/c² = 1 and an elliptic paraboloid is
z = c − x²/a² − y²/b², with a, b, c all strictly positive.  The sphere of
radius r is simply ``ellipsoid(r, r, r)``; it is not a separate kind because
every operation branches identically on the two kinds only.
"""

import math
from dataclasses import dataclass
from typing import NamedTuple

from .errors import NonPositiveAxis

ELLIPSOID = "ellipsoid"
PARABOLOID = "paraboloid"

#: Default |residual| bound used when a membership tolerance is not supplied.
DEFAULT_MEMBERSHIP_TOL = 1e-9


class PlanePoint(NamedTuple):
    """A point (u, v) in the projection plane z = 0."""

    u: float
    v: float


class SurfacePoint(NamedTuple):
    """A point (x, y, z) in space, usually on a quadric."""

    x: float
    y: float
    z: float


@dataclass(frozen=True)
class Quadric:
    """One quadric surface, identified by its kind tag and coefficients a, b, c."""

    kind: str
    a: float
    b: float
    c: float


def ellipsoid(a: float, b: float, c: float) -> Quadric:
    """Build and validate the ellipsoid x²/a² + y²/b² + z²/c² = 1."""
    q = Quadric(ELLIPSOID, float(a), float(b), float(c))
    validate(q)
    return q


def paraboloid(a: float, b: float, c: float) -> Quadric:
    """Build and validate the elliptic paraboloid z = c − x²/a² − y²/b²."""
    q = Quadric(PARABOLOID, float(a), float(b), float(c))
    validate(q)
    return q


def sphere(r: float) -> Quadric:
    """The sphere of radius r, i.e. the ellipsoid with all semi-axes equal."""
    return ellipsoid(r, r, r)


def validate(q: Quadric) -> None:
    """Raise unless all three coefficients are finite and strictly positive."""
    if q.kind not in (ELLIPSOID, PARABOLOID):
        raise ValueError(f"unknown quadric kind {q.kind!r}")
    for name, value in (("a", q.a), ("b", q.b), ("c", q.c)):
        if not (isinstance(value, (int, float)) and math.isfinite(value) and value > 0.0):
            raise NonPositiveAxis(name, value)


def _sag(q: Quadric, x: float, y: float) -> float:
    # x²/a² + y²/b²: how far the paraboloid has dropped below its apex.
    # Shared between implicit_residual and the forward map so that points
    # produced by the projection cancel exactly in the residual.
    return (x / q.a) ** 2 + (y / q.b) ** 2


def implicit_residual(q: Quadric, p) -> float:
    """Defect of p = (x, y, z) against the quadric's implicit equation.

    Zero exactly when p lies on the surface: for the ellipsoid this is
    x²/a² + y²/b² + z²/c² − 1, for the paraboloid z − c + x²/a² + y²/b².
    """
    x, y, z = p
    if q.kind == ELLIPSOID:
        return (x / q.a) ** 2 + (y / q.b) ** 2 + (z / q.c) ** 2 - 1.0
    return (z - q.c) + _sag(q, x, y)


def contains(q: Quadric, p, tol: float = DEFAULT_MEMBERSHIP_TOL) -> bool:
    """True when |implicit_residual(q, p)| does not exceed tol."""
    if tol < 0.0:
        raise ValueError("membership tolerance must be non-negative")
    return abs(implicit_residual(q, p)) <= tol


def north_pole(q: Quadric) -> SurfacePoint:
    """The point N = (0, 0, c) excluded from the projection chart."""
    return SurfacePoint(0.0, 0.0, q.c)
