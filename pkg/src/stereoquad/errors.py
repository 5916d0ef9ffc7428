"""Exception types shared across the package."""


class GeometryError(Exception):
    """Base class for every domain error raised by this package."""


class NonPositiveAxis(GeometryError):
    """A quadric coefficient that must be strictly positive is not."""

    def __init__(self, name, value):
        super().__init__(
            f"coefficient {name!r} must be a positive finite real, got {value!r}"
        )
        self.name = name
        self.value = value


class ParaboloidOriginUndefined(GeometryError):
    """The paraboloid chart is undefined at (u, v) = (0, 0)."""


class PoleNotProjectable(GeometryError):
    """The ray through the pole and this point never meets z = 0."""


class NotOnSurface(GeometryError):
    """Point is farther from the surface than the membership tolerance."""


class DegenerateSection(GeometryError):
    """The cutting plane meets the quadric in at most a point."""


class InvalidSampleCount(GeometryError):
    """Too few samples requested for a closed curve."""


class SingularVelocity(GeometryError):
    """Curvature is undefined where the velocity vanishes."""


class QuadratureNonConvergence(GeometryError):
    """Adaptive quadrature exhausted its evaluation budget."""


class FocusCheckFailed(GeometryError):
    """Sum of distances to the foci is not constant along the boundary."""


class TooFewPoints(GeometryError):
    """A polygon needs at least three vertices."""


class DomainError(GeometryError):
    """A finite-difference stencil left the domain of the sampled function."""
