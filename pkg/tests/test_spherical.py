"""Tests for stereographic projection, chordal metric, and great circles."""

import cmath
import math

import pytest
from hypothesis import assume, given, strategies as st

from diskgeom.errors import (
    AntipodalPair,
    CollinearWithOrigin,
    EqualModuli,
    OutsideDisk,
)
from diskgeom.spherical import (
    INFINITY,
    GcisQuadratic,
    antipodal,
    chordal_distance,
    chordal_midpoint,
    from_sphere,
    gcis,
    gcis_quadratic_solve,
    gcis_roots,
    gencircle_from_pair_intersection,
    great_circle_projection,
    is_infinity,
    orthogonal_great_circle,
    to_sphere,
)

from conftest import polar_points, well_separated

IDENTITY_TOL = 1e-9
EXACT_TOL = 1e-12


# ---------------------------------------------------------------------------
# stereographic projection


def test_to_sphere_landmarks():
    p = to_sphere(0j)
    assert (p.xi, p.eta, p.zeta) == (0.0, 0.0, 0.0)
    p = to_sphere(1 + 0j)
    assert (p.xi, p.eta, p.zeta) == pytest.approx((0.5, 0.0, 0.5))
    p = to_sphere(INFINITY)
    assert (p.xi, p.eta, p.zeta) == (0.0, 0.0, 1.0)


@given(polar_points(0.0, 5.0))
def test_projection_round_trip_and_on_sphere(z):
    p = to_sphere(z)
    assert p.sphere_residual() <= EXACT_TOL
    back = from_sphere(p)
    assert abs(back - z) <= 1e-9 * max(1.0, abs(z) ** 2)


def test_from_sphere_north_pole_is_infinity():
    assert is_infinity(from_sphere(to_sphere(INFINITY)))


# ---------------------------------------------------------------------------
# chordal metric


def test_chordal_distance_landmarks():
    assert chordal_distance(0j, INFINITY) == 1.0
    assert chordal_distance(1 + 0j, -1 + 0j) == pytest.approx(1.0)
    assert chordal_distance(INFINITY, INFINITY) == 0.0


@given(st.tuples(polar_points(0.0, 5.0), polar_points(0.0, 5.0)))
def test_chordal_distance_is_sphere_distance(pts):
    x, y = pts
    assert chordal_distance(x, y) == pytest.approx(
        to_sphere(x).distance(to_sphere(y)), abs=EXACT_TOL)


@given(polar_points(0.05, 5.0))
def test_antipodal_points_are_diametrically_opposite(z):
    w = antipodal(z)
    assert chordal_distance(z, w) == pytest.approx(1.0, abs=IDENTITY_TOL)


def test_antipodal_of_origin_is_infinity():
    assert is_infinity(antipodal(0j))
    assert antipodal(INFINITY) == 0j


# ---------------------------------------------------------------------------
# great circle projections


@given(st.tuples(polar_points(0.05, 2.0), polar_points(0.05, 2.0)))
def test_great_circle_projection_contains_defining_points(pts):
    a, b = pts
    assume(abs(a - b) > 0.05)
    g = great_circle_projection(a, b)
    assert g.residual(a) <= 1e-9
    assert g.residual(b) <= 1e-9
    # the projected great circle also passes through the antipode of a
    assert g.residual(antipodal(a)) <= 1e-7


def test_great_circle_collinear_with_origin_is_a_line():
    g = great_circle_projection(0.5 + 0j, -0.25 + 0j)
    assert g.is_line


# ---------------------------------------------------------------------------
# great-circle intersections


@given(st.tuples(polar_points(), polar_points(), polar_points(),
                 polar_points()))
def test_gcis_root_moduli_multiply_to_one(pts):
    a, b, c, d = pts
    assume(well_separated(a, b) and well_separated(c, d))
    assume(min(abs(a - c), abs(b - d), abs(a - d), abs(b - c)) > 0.05)
    r1, r2 = gcis_roots(a, b, c, d)
    assert abs(r1) * abs(r2) == pytest.approx(1.0, rel=1e-7)
    # the two roots are sphere antipodes of each other
    assert abs(r2 - antipodal(r1)) <= 1e-6 * max(1.0, abs(r2))


@given(st.tuples(polar_points(), polar_points(), polar_points(),
                 polar_points()))
def test_gcis_agrees_with_circle_intersection_oracle(pts):
    a, b, c, d = pts
    assume(well_separated(a, b) and well_separated(c, d))
    assume(min(abs(a - c), abs(b - d), abs(a - d), abs(b - c)) > 0.05)
    r1, _ = gcis_roots(a, b, c, d)
    assume(abs(abs(r1) - 1) > 1e-4)   # avoid the on-circle tie-break case
    z1 = gcis(a, b, c, d)
    z2 = gencircle_from_pair_intersection(a, b, c, d)
    assert abs(z1 - z2) <= 1e-8


def test_gcis_collinear_pair_raises():
    with pytest.raises(CollinearWithOrigin):
        gcis_roots(0.5 + 0j, -0.5 + 0j, 0.3j, 0.1 + 0.1j)


# ---------------------------------------------------------------------------
# shared quadratic for the chordal point family


def test_gcis_quadratic_roots_structure():
    qd = GcisQuadratic(H=0.6 + 0.8j, R=0.37)
    zp, zm = qd.roots()
    # both roots satisfy conj(H) z^2 + 2 R z - H = 0
    for z in (zp, zm):
        res = qd.H.conjugate() * z * z + 2 * qd.R * z - qd.H
        assert abs(res) <= 1e-12
    assert abs(zp) * abs(zm) == pytest.approx(1.0, abs=1e-12)
    assert abs(zp) < 1 < abs(zm)
    assert gcis_quadratic_solve(qd) == zp


def test_gcis_quadratic_zero_R_gives_unit_root():
    qd = GcisQuadratic(H=0.6 + 0.8j, R=0.0)
    z = gcis_quadratic_solve(qd)
    assert abs(z) == pytest.approx(1.0, abs=1e-12)
    assert z == pytest.approx(qd.H / abs(qd.H), abs=1e-12)


# ---------------------------------------------------------------------------
# chordal midpoint and orthogonal great circle


def test_chordal_midpoint_radial_example():
    m = chordal_midpoint(0j, 0.8 + 0j)
    assert m.real == pytest.approx(0.3507810593582122, abs=EXACT_TOL)
    assert m.imag == 0.0
    q = chordal_distance(0j, m)
    assert q == pytest.approx(0.33100694143550047, abs=EXACT_TOL)
    assert q == pytest.approx(chordal_distance(m, 0.8 + 0j), abs=EXACT_TOL)


def test_chordal_midpoint_of_opposite_pair_is_origin():
    assert chordal_midpoint(0.4 + 0.1j, -0.4 - 0.1j) == 0j


def test_chordal_midpoint_outside_disk_raises():
    with pytest.raises(OutsideDisk):
        chordal_midpoint(1.2 + 0j, 0.3 + 0j)


@given(st.tuples(polar_points(0.05, 0.9), polar_points(0.05, 0.9)))
def test_chordal_midpoint_equidistant_and_on_great_circle(pts):
    a, b = pts
    assume(abs(a + b) > 0.05 and abs(a - b) > 0.05)
    try:
        m = chordal_midpoint(a, b)
    except AntipodalPair:
        assume(False)
    assert abs(chordal_distance(a, m) - chordal_distance(b, m)) <= IDENTITY_TOL
    assert great_circle_projection(a, b).residual(m) <= IDENTITY_TOL


@given(st.tuples(polar_points(0.05, 0.9), polar_points(0.05, 0.9)))
def test_orthogonal_great_circle_through_midpoint(pts):
    a, b = pts
    assume(abs(a + b) > 0.05 and abs(abs(a) - abs(b)) > 0.02)
    assume(well_separated(a, b))
    m = chordal_midpoint(a, b)
    circ = orthogonal_great_circle(a, b)
    assert abs(abs(m - circ.center) - circ.radius) <= 1e-7
    # orthogonality with the projected great circle through a, b
    first = great_circle_projection(a, b).circle
    assert first is not None
    d2 = abs(first.center - circ.center) ** 2
    assert abs(d2 - first.radius ** 2 - circ.radius ** 2) \
        <= 1e-6 * max(1.0, d2)


def test_orthogonal_great_circle_equal_moduli_raises():
    with pytest.raises(EqualModuli):
        orthogonal_great_circle(0.5 + 0j, 0.5j)
