import numpy as np
import pytest

import oracles as o
from hexaweb.conics import (
    Conic,
    Line,
    central_conic_geometry,
    circle_conic,
    classify_conic,
    ellipse_foci,
    fit_conic,
    is_rectangular,
    line_conic_intersections,
    parabola_focus_directrix,
    sample_parabola,
    tangency_residual,
)
from hexaweb.errors import DegenerateFit, NotAParabola, RankDeficient


def ellipse_points(n=7, a=3.0, b=1.2, rot=0.4, c=(1.0, -2.0)):
    t = np.linspace(0, 2 * np.pi, n, endpoint=False) + 0.1
    r = np.array([[np.cos(rot), -np.sin(rot)], [np.sin(rot), np.cos(rot)]])
    return (r @ np.array([a * np.cos(t), b * np.sin(t)])).T + c


def test_fit_recovers_ellipse_geometry():
    conic, res = fit_conic(ellipse_points(), return_residual=True)
    assert res < 1e-12
    g = central_conic_geometry(conic)
    np.testing.assert_allclose(g.center, [1, -2], atol=1e-12)
    np.testing.assert_allclose(g.semi_axes, [3, 1.2], atol=1e-12)
    assert classify_conic(conic) == "ellipse"
    f1, f2 = ellipse_foci(conic)
    assert np.linalg.norm(f1 - f2) == pytest.approx(2 * np.sqrt(9 - 1.44))


def test_fit_agrees_with_minor_expansion_oracle():
    pts = ellipse_points(5)
    lib = fit_conic(pts).coeffs
    ref = o.conic_through(pts)
    lib, ref = lib / np.linalg.norm(lib), ref / np.linalg.norm(ref)
    assert min(np.linalg.norm(lib - ref), np.linalg.norm(lib + ref)) < 1e-10


def test_fit_rejects_too_few_or_collinear_points():
    with pytest.raises(DegenerateFit):
        fit_conic(ellipse_points()[:4])
    with pytest.raises(RankDeficient):
        fit_conic([(x, 2 * x + 1) for x in range(6)])


def test_parabola_focus_and_directrix():
    # y = x^2 / 8 shifted and rotated: focus at distance 2 from the vertex
    rot = 0.7
    r = np.array([[np.cos(rot), -np.sin(rot)], [np.sin(rot), np.cos(rot)]])
    pts = [r @ (x, x * x / 8) + (2.0, 1.0) for x in np.linspace(-6, 6, 9)]
    g = parabola_focus_directrix(fit_conic(pts))
    np.testing.assert_allclose(g.focus, r @ (0, 2) + (2, 1), atol=1e-9)
    np.testing.assert_allclose(g.vertex, [2, 1], atol=1e-9)
    for p in pts:
        assert abs(np.linalg.norm(p - g.focus) - g.directrix.distance_to(p)) < 1e-9
    assert g.axis.distance_to(g.focus) < 1e-9
    back = sample_parabola(g, 3.0, 11)
    assert max(abs(np.linalg.norm(p - g.focus) - g.directrix.distance_to(p)) for p in back) < 1e-9


def test_not_a_parabola():
    with pytest.raises(NotAParabola):
        parabola_focus_directrix(circle_conic((0, 0), 1))


def test_rectangular_hyperbola_trace():
    c = Conic.from_coeffs(1, 0, -1, 0, 0, -1)
    assert classify_conic(c) == "hyperbola"
    assert is_rectangular(c) == 0.0


def test_tangency_and_intersections():
    c = circle_conic((0, 0), 2)
    assert tangency_residual(c, Line(np.array([0, 1.0, -2]))) < 1e-15
    assert tangency_residual(c, Line(np.array([0, 1.0, -1]))) > 1e-3
    s = line_conic_intersections(c, (0, 0), (1, 0))
    np.testing.assert_allclose(s, [-2, 2])
    assert len(line_conic_intersections(c, (0, 5), (1, 0))) == 0


def test_barycentric_conic_converts():
    from hexaweb import Triangle

    tri = Triangle((0, 0), (4, 0), (0, 3))
    # circumcircle in barycentrics: a^2 yz + b^2 zx + c^2 xy = 0
    a2, b2, c2 = (s * s for s in tri.sides)
    conic = Conic.from_bary_coeffs(tri, 0, 0, 0, c2, b2, a2).to_cartesian()
    g = central_conic_geometry(conic)
    np.testing.assert_allclose(g.center, [2, 1.5], atol=1e-12)
    np.testing.assert_allclose(np.abs(g.semi_axes), [2.5, 2.5], atol=1e-12)


def test_line_normalized_sign_is_canonical():
    a = Line(np.array([1.0, -1.0, 2.0]))
    b = Line(np.array([-3.0, 3.0, -6.0]))
    assert a.distance(b) < 1e-15
