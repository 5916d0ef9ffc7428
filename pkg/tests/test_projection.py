import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from stereoquad import (
    NotOnSurface,
    ParaboloidOriginUndefined,
    PoleNotProjectable,
    ellipsoid,
    is_regular_at,
    jacobian_columns,
    line_parameter,
    north_pole,
    paraboloid,
    project_to_plane,
    project_to_surface,
    reflect_to_south_chart,
    sphere,
)
from stereoquad.oracles import fd_surface_jacobian

GRID = np.linspace(-10.0, 10.0, 41)


def grid_points(q):
    for u in GRID:
        for v in GRID:
            if q.kind == "paraboloid" and u == 0.0 and v == 0.0:
                continue
            yield float(u), float(v)


def test_forward_examples():
    assert project_to_surface(ellipsoid(2, 1, 2), (0, 0)) == (0.0, 0.0, -2.0)
    assert project_to_surface(ellipsoid(2, 1, 2), (2, 0)) == (2.0, 0.0, 0.0)
    assert project_to_surface(paraboloid(1, 1, 1), (1, 0)) == (1.0, 0.0, 0.0)


def test_forward_rejects_paraboloid_origin():
    with pytest.raises(ParaboloidOriginUndefined):
        project_to_surface(paraboloid(1, 1, 1), (0, 0))
    with pytest.raises(ParaboloidOriginUndefined):
        line_parameter(paraboloid(1, 1, 1), (0, 0))
    with pytest.raises(ParaboloidOriginUndefined):
        jacobian_columns(paraboloid(1, 1, 1), (0, 0))


def test_forward_never_returns_the_pole(canonical_quadrics):
    for q in canonical_quadrics:
        for u, v in grid_points(q):
            assert project_to_surface(q, (u, v)).z < q.c


def test_sphere_reduction_matches_radius_form():
    rng = np.random.default_rng(20260811)
    for r in np.exp(rng.uniform(np.log(0.1), np.log(10.0), 20)):
        q = sphere(r)
        r2 = r * r
        for u, v in [(0.3, -1.7), (2.0, 0.0), (-5.0, 4.0), (10.0, 10.0)]:
            denom = r2 + u * u + v * v
            expected = (2 * r2 * u / denom, 2 * r2 * v / denom, r * (u * u + v * v - r2) / denom)
            got = project_to_surface(q, (u, v))
            for g, e in zip(got, expected):
                assert abs(g - e) <= 1e-14 * max(1.0, abs(e))


def test_inverse_examples():
    assert project_to_plane(ellipsoid(2, 1, 2), (2, 0, 0)) == (2.0, 0.0)
    assert project_to_plane(ellipsoid(2, 1, 2), (0, 0, -2)) == (0.0, 0.0)
    assert project_to_plane(paraboloid(1, 1, 1), (1, 0, 0)) == (1.0, 0.0)


def test_inverse_rejects_pole():
    with pytest.raises(PoleNotProjectable):
        project_to_plane(ellipsoid(2, 1, 2), (0, 0, 2))
    # within the pole threshold, even though slightly off the exact pole
    with pytest.raises(PoleNotProjectable):
        project_to_plane(ellipsoid(2, 1, 2), (0, 0, 2 * (1 - 1e-14)))


def test_inverse_rejects_off_surface_points():
    with pytest.raises(NotOnSurface):
        project_to_plane(ellipsoid(2, 1, 2), (2, 0, 1), 1e-9)


def test_line_parameter_examples():
    t, denom = line_parameter(ellipsoid(2, 1, 2), (0, 0))
    assert (t, denom) == (2.0, 4.0)
    t, denom = line_parameter(ellipsoid(2, 1, 2), (2, 0))
    assert (t, denom) == (1.0, 8.0)
    t, denom = line_parameter(paraboloid(1, 1, 1), (1, 0))
    assert (t, denom) == (1.0, 1.0)


def test_line_parameter_consistent_with_forward_map(canonical_quadrics):
    for q in canonical_quadrics:
        for u, v in grid_points(q):
            t = line_parameter(q, (u, v)).t
            ray = (t * u, t * v, (1.0 - t) * q.c)
            got = project_to_surface(q, (u, v))
            scale = max(abs(c) for c in got) + q.c
            for g, e in zip(got, ray):
                assert abs(g - e) <= 1e-14 * scale


def test_parameter_sign_and_range(canonical_quadrics):
    for q in canonical_quadrics:
        for u, v in grid_points(q):
            t, denom = line_parameter(q, (u, v))
            assert denom > 0.0
            if q.kind == "ellipsoid":
                assert 0.0 < t <= 2.0
            else:
                assert t > 0.0


def test_round_trip_plane_surface_plane(canonical_quadrics):
    for q in canonical_quadrics:
        for u, v in grid_points(q):
            u2, v2 = project_to_plane(q, project_to_surface(q, (u, v)))
            scale = max(abs(u), abs(v), 1e-30)
            assert max(abs(u2 - u), abs(v2 - v)) <= 1e-12 * scale


def surface_samples(q, n_theta=15, n_lam=16):
    """On-surface points with z < c, parametrized independently of the chart."""
    out = []
    for i in range(1, n_theta + 1):
        for j in range(n_lam):
            lam = 2.0 * math.pi * j / n_lam
            if q.kind == "ellipsoid":
                theta = math.pi * i / n_theta
                out.append((
                    q.a * math.sin(theta) * math.cos(lam),
                    q.b * math.sin(theta) * math.sin(lam),
                    q.c * math.cos(theta),
                ))
            else:
                s = 3.0 * i / n_theta
                x = q.a * s * math.cos(lam)
                y = q.b * s * math.sin(lam)
                out.append((x, y, q.c - (x / q.a) ** 2 - (y / q.b) ** 2))
    return out


def test_round_trip_surface_plane_surface(canonical_quadrics):
    for q in canonical_quadrics:
        for p in surface_samples(q):
            back = project_to_surface(q, project_to_plane(q, p, 1e-9))
            scale = max(abs(c) for c in p)
            for g, e in zip(back, p):
                assert abs(g - e) <= 1e-11 * scale


def test_pole_gap_identity(canonical_quadrics):
    # c - z equals 2a²b²c/D on the ellipsoid chart.
    for q in canonical_quadrics:
        if q.kind != "ellipsoid":
            continue
        a2, b2 = q.a * q.a, q.b * q.b
        for u, v in grid_points(q):
            d = b2 * u * u + a2 * v * v + a2 * b2
            expected = 2.0 * a2 * b2 * q.c / d
            gap = q.c - project_to_surface(q, (u, v)).z
            assert abs(gap - expected) <= 1e-13 * expected


def test_jacobian_at_origin_is_vertical_four():
    for q in [ellipsoid(2, 1, 2), ellipsoid(0.3, 5.0, 1.7), ellipsoid(1, 1, 1)]:
        cross = jacobian_columns(q, (0.0, 0.0)).cross
        assert abs(cross[0]) == 0.0
        assert abs(cross[1]) == 0.0
        assert abs(cross[2] - 4.0) <= 1e-12


def test_jacobian_matches_finite_differences(canonical_quadrics):
    for q in canonical_quadrics:
        surface = lambda p: project_to_surface(q, p)
        for u, v in [(0.5, 0.0), (0.0, -0.5), (1.5, 2.5), (-4.0, 3.0), (10.0, 10.0)]:
            h = 1e-5 * max(1.0, abs(u), abs(v))
            numeric = fd_surface_jacobian(surface, (u, v), h)
            closed = jacobian_columns(q, (u, v))
            for col_c, col_n in ((closed.d_u, numeric.d_u), (closed.d_v, numeric.d_v)):
                for g, e in zip(col_c, col_n):
                    assert abs(g - e) <= 1e-6


def test_ellipsoid_cross_product_closed_form(canonical_quadrics):
    for q in canonical_quadrics:
        if q.kind != "ellipsoid":
            continue
        a2, b2 = q.a * q.a, q.b * q.b
        for u, v in grid_points(q):
            d = b2 * u * u + a2 * v * v + a2 * b2
            coef = 4.0 * a2 * a2 * b2 * b2 / d**3
            expected = (
                coef * (-2.0 * b2 * u * q.c),
                coef * (-2.0 * a2 * v * q.c),
                coef * (a2 * b2 - b2 * u * u - a2 * v * v),
            )
            cross = jacobian_columns(q, (u, v)).cross
            scale = max(abs(e) for e in expected)
            for g, e in zip(cross, expected):
                assert abs(g - e) <= 1e-12 * scale


def test_paraboloid_cross_z_component(canonical_quadrics):
    for q in canonical_quadrics:
        if q.kind != "paraboloid":
            continue
        a2, b2 = q.a * q.a, q.b * q.b
        for u, v in grid_points(q):
            m = b2 * u * u + a2 * v * v
            expected = -(a2 * a2 * b2 * b2 * q.c * q.c) / (m * m)
            z = jacobian_columns(q, (u, v)).cross[2]
            assert z < 0.0
            assert abs(z - expected) <= 1e-12 * abs(expected)


def test_paraboloid_cross_z_example():
    assert abs(jacobian_columns(paraboloid(1, 1, 1), (1, 0)).cross[2] + 1.0) <= 1e-15


def test_regularity_witness():
    assert is_regular_at(ellipsoid(2, 1, 2), (0, 0))
    assert is_regular_at(paraboloid(1, 1, 1), (0.3, -0.7))
    # far-field evaluation must stay finite and nonzero
    assert is_regular_at(ellipsoid(1, 1, 1), (1e6, 1e6))


def test_regular_everywhere_on_grid(canonical_quadrics):
    for q in canonical_quadrics:
        assert all(is_regular_at(q, p) for p in grid_points(q))


def test_reflect_examples():
    assert reflect_to_south_chart((0.0, 0.0, -2.0)) == (0.0, 0.0, 2.0)
    assert reflect_to_south_chart((2.0, 0.0, 0.0)) == (2.0, 0.0, 0.0)


@given(
    x=st.floats(-10, 10),
    y=st.floats(-10, 10),
    z=st.floats(-10, 10),
)
def test_reflect_is_an_involution(x, y, z):
    assert reflect_to_south_chart(reflect_to_south_chart((x, y, z))) == (x, y, z)


def test_reflected_chart_covers_all_but_south_pole():
    # mirror, project, and come back: the composite inverts on z > -c
    q = ellipsoid(2, 1, 2)
    for p in surface_samples(q):
        if p[2] <= -q.c * (1 - 1e-9):
            continue
        mirrored = reflect_to_south_chart(p)
        back = reflect_to_south_chart(project_to_surface(q, project_to_plane(q, mirrored, 1e-9)))
        for g, e in zip(back, p):
            assert abs(g - e) <= 1e-10 * max(1.0, abs(e))
