"""Stereographic projection of ellipsoids and elliptic paraboloids onto z = 0.

The chart sends a surface point P (other than the pole N = (0, 0, c)) to the
intersection of the line NP with the plane z = 0.  Horizontal sections of
either quadric are ellipses whose projected images are similar copies scaled
by c/(c−d); the ``theorems`` module turns the resulting invariants
(eccentricity, curvature, arc length, area) into executable checks.
"""

from .errors import (
    DegenerateSection,
    DomainError,
    FocusCheckFailed,
    GeometryError,
    InvalidSampleCount,
    NonPositiveAxis,
    NotOnSurface,
    ParaboloidOriginUndefined,
    PoleNotProjectable,
    QuadratureNonConvergence,
    SingularVelocity,
    TooFewPoints,
)
from .metrics import (
    Derivative2Jet,
    eccentricity,
    ellipse_arc_length,
    ellipse_area,
    ellipse_curvature,
    focal_half_distance,
    signed_curvature,
)
from .oracles import (
    QuadratureResult,
    fd_jet,
    fd_surface_jacobian,
    foci_eccentricity,
    integrate,
    polygon_area,
)
from .projection import (
    JacobianColumns,
    ProjectionScalars,
    is_regular_at,
    jacobian_columns,
    line_parameter,
    project_to_plane,
    project_to_surface,
    reflect_to_south_chart,
)
from .sections import (
    SectionEllipse,
    evaluate_curve,
    projected_ellipse,
    sample_curve,
    scaling_factor,
    section_ellipse,
    wrap_angle,
)
from .surfaces import (
    ELLIPSOID,
    PARABOLOID,
    PlanePoint,
    Quadric,
    SurfacePoint,
    contains,
    ellipsoid,
    implicit_residual,
    north_pole,
    paraboloid,
    sphere,
    validate,
)
from .theorems import (
    RemarkReport,
    TheoremReport,
    remark_scan,
    verify_all,
    verify_arclength_ratio,
    verify_area_ratio,
    verify_curvature_ratio,
    verify_eccentricity,
)

__version__ = "0.1.0"
