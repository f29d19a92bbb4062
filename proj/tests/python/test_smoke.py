"""Smoke tests for the python bindings."""

import math

import pytest

import humbert


def test_boundary_point_count():
    for m, expected in [(2, 2), (4, 3), (6, 3), (12, 5)]:
        bi = humbert.boundary_intersection_points(m)
        assert len(bi.points) == expected


def test_fiber_dual_graphs():
    g = humbert.degenerate_fiber(3, humbert.StratumId.III)
    assert len(g.vertices) == 5
    assert len(g.edges) == 5
    assert g.surface == humbert.SurfaceType.TwoP2PlusBlowup
    assert "surface=\"TwoP2PlusBlowup\"" in g.to_dot()

    nodal = humbert.degenerate_fiber(2, humbert.StratumId.II)
    assert nodal.vertices == ["Z0"]
    assert nodal.edges == [(0, 0)]


def test_family_residual_and_exponent():
    fam = humbert.FamilyId.finite(1, 1)
    v = humbert.family_vector(fam, 2)
    tau = humbert.family_period_matrix(fam, 2, 1j, 1j)
    assert abs(humbert.humbert_residual(v, tau)) < 1e-12

    sampled = humbert.sample_point(v, seed=7)
    assert humbert.exponent_of_subtorus(v, sampled) == 2


def test_corank1_track():
    v = humbert.DiscriminantVector(0, 2, 1, 0, 1)
    track = humbert.track_limit_corank1(v, 1j, [5.0, 40.0])
    assert abs(track[-1].q) < 1e-6
    assert abs(track[-1].z - (-(1j + 1) / 2)) < 1e-12


def test_corank2_limit():
    z = 0.25j
    pts = humbert.psi_limit_family(3, z, [60.0])
    target = math.e ** (2 * math.pi * 1j * z)
    assert abs(pts[0][0]) + abs(pts[0][1] - target) + abs(pts[0][2]) < 1e-8


def test_orbit_and_group_law():
    orbit = humbert.sl2_mod_m_orbit(2, humbert.TorsionClass(0, 1, 2))
    assert len(orbit) == 3

    report = humbert.verify_group_law(100, seed=0)
    assert report.rst_product_trivial
    assert report.homomorphism_ok


def test_errors_are_typed():
    with pytest.raises(humbert.InvalidVector):
        humbert.DiscriminantVector(1, 1, 1, 0, 0)
    with pytest.raises(humbert.WindowTooSmall):
        humbert.quotient_cycle_oracle(4, 2)
