import numpy as np
import pytest

import oracles as o
from helpers import frozen, frozen_triangle
from hexaweb import Triangle, centers
from hexaweb.errors import EquilateralDegenerate

KINDS = ("X3", "X4", "X6", "X13", "X14", "X15", "X16", "X39", "X617")


@pytest.mark.parametrize("name", ["534", "skew"])
@pytest.mark.parametrize("kind", KINDS)
def test_centers_match_frozen_oracles(name, kind):
    tri = frozen_triangle(name)
    tol = 1e-11 if kind != "X16" else 1e-9
    np.testing.assert_allclose(centers.center_point(tri, kind), frozen()[name][kind], atol=tol * tri.diameter)


@pytest.mark.parametrize("name", ["534", "skew"])
def test_brocard_points_match_oracle(name):
    tri = frozen_triangle(name)
    w1, w2 = centers.brocard_points(tri)
    np.testing.assert_allclose(w1, frozen()[name]["brocard1"], atol=1e-12)
    np.testing.assert_allclose(w2, frozen()[name]["brocard2"], atol=1e-12)


def test_centroid_and_nine_point_center_on_euler_line():
    tri = frozen_triangle("skew")
    x3, x4 = centers.center_point(tri, "X3"), centers.center_point(tri, "X4")
    np.testing.assert_allclose(centers.center_point(tri, "X2"), tri.centroid, atol=1e-14)
    np.testing.assert_allclose(centers.center_point(tri, "X5"), (x3 + x4) / 2, atol=1e-14)
    np.testing.assert_allclose(centers.center_point(tri, centers.EulerParam(2.0)), x3 + 2 * (x4 - x3), atol=1e-13)


def test_orientation_swaps_isodynamic_and_fermat_points():
    tri = frozen_triangle("skew")
    cw = Triangle(tri.A, tri.C, tri.B)
    for a, b in (("X15", "X16"), ("X13", "X14")):
        np.testing.assert_allclose(centers.center_point(cw, a, oriented=True), centers.center_point(tri, b), atol=1e-9)
        np.testing.assert_allclose(centers.center_point(cw, a), centers.center_point(tri, a), atol=1e-12)


def test_x16_of_equilateral_is_at_infinity():
    with pytest.raises(EquilateralDegenerate):
        centers.center_point(Triangle.from_sides(1, 1, 1), "X16")
    assert centers.conditioning(1, 1, 1) < 1e-12
    assert centers.x16_quality(1, 1, 1) == 0.0
    # X15 stays finite at the center
    np.testing.assert_allclose(centers.center_point(Triangle.from_sides(1, 1, 1), "X15"), Triangle.from_sides(1, 1, 1).centroid, atol=1e-14)


def test_anticomplement_of_x14_is_x617():
    tri = frozen_triangle("534")
    x14 = centers.center_point(tri, "X14")
    np.testing.assert_allclose(centers.anticomplement(tri, x14), centers.center_point(tri, "X617"), atol=1e-12)


def test_parse_kind_roundtrip():
    assert centers.parse_kind("X6") == "X6"
    assert centers.parse_kind("EulerParam(0.25)") == centers.EulerParam(0.25)
    with pytest.raises(ValueError):
        centers.parse_kind("X999")


def test_flank_x15_bary_printed_form():
    v = centers.flank_x15_bary(5, 3, 4, "A")
    np.testing.assert_allclose(v, [25 - 27 - 48, 9, 16])
