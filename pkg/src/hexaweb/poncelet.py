"""Poncelet triangle families: the homothetic pair and the Brocard porism.

The homothetic family is the affine image of a rotating equilateral
inscribed in the unit circle, so it closes exactly. The Brocard family is
driven by the tangent stepper, which is also run against the homothetic pair
as a cross-check.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field

import numpy as np

from . import centers, hexgrid, parabolas
from .conics import (
    BARYCENTRIC,
    Conic,
    central_conic_geometry,
    circle_conic,
    classify_conic,
    ellipse_foci,
    fit_conic,
    tangency_residual,
)
from .errors import (
    ClosureViolation,
    DegenerateFit,
    DegenerateSeed,
    EquilateralDegenerate,
    GeometryError,
    NumericalTangentCollapse,
    RankDeficient,
    TangentMiss,
)
from .geometry import Triangle, circumcircle, intersect_lines, line_through, signed_area

HOMOTHETIC = "homothetic"
BROCARD = "brocard"
KINDS = (HOMOTHETIC, BROCARD)


def _require_seed(seed: Triangle) -> Triangle:
    if seed.is_degenerate():
        raise DegenerateSeed("seed triangle is degenerate")
    if seed.S < 0:
        seed = Triangle.ccw(seed.A, seed.B, seed.C)
    return seed


def steiner_map(seed: Triangle) -> np.ndarray:
    """2x2 matrix M with seed vertex i = G + M (cos 2 pi i/3, sin 2 pi i/3)."""
    g = seed.centroid
    e0 = seed.A - g
    e1 = (seed.B - g + e0 / 2) * 2 / np.sqrt(3.0)
    return np.column_stack([e0, e1])


def _affine(seed: Triangle) -> np.ndarray:
    h = np.eye(3)
    h[:2, :2] = steiner_map(seed)
    h[:2, 2] = seed.centroid
    return h


def steiner_ellipse(seed: Triangle) -> Conic:
    return circle_conic((0.0, 0.0), 1.0).transformed(_affine(seed))


def steiner_inellipse(seed: Triangle) -> Conic:
    return circle_conic((0.0, 0.0), 0.5).transformed(_affine(seed))


def homothetic_triangle(seed: Triangle, t: float) -> Triangle:
    seed = _require_seed(seed)
    g, m = seed.centroid, steiner_map(seed)
    ang = t + 2 * np.pi * np.arange(3) / 3
    v = g + (m @ np.array([np.cos(ang), np.sin(ang)])).T
    return Triangle(*v)


def brocard_inellipse(tri: Triangle) -> Conic:
    """Inconic with perspector X6 (a^2 : b^2 : c^2), Cartesian."""
    tri.require_nondegenerate()
    a2, b2, c2 = (s * s for s in tri.sides)
    # x^2/p^2 + ... - 2yz/(qr) - ... with (p, q, r) = (a^2, b^2, c^2), cleared
    m = np.array(
        [
            [b2 * b2 * c2 * c2, -a2 * b2 * c2 * c2, -a2 * b2 * b2 * c2],
            [-a2 * b2 * c2 * c2, c2 * c2 * a2 * a2, -a2 * a2 * b2 * c2],
            [-a2 * b2 * b2 * c2, -a2 * a2 * b2 * c2, a2 * a2 * b2 * b2],
        ]
    )
    return Conic(m / np.abs(m).max(), BARYCENTRIC, tri).to_cartesian()


def brocard_points_geometric(tri: Triangle) -> tuple[np.ndarray, np.ndarray]:
    """Brocard points from circles through two vertices tangent to a side.

    The first one lies on the circle through A, B tangent to BC at B and on
    the circle through B, C tangent to CA at C.
    """
    A, B, C = tri.A, tri.B, tri.C

    def tangent_circle(p, q, r):
        # circle through p and q, tangent at q to line qr
        t = (r - q) / np.linalg.norm(r - q)
        n = np.array([-t[1], t[0]])
        # center q + k n with |center - p| = |k|
        w = p - q
        k = (w @ w) / (2 * (w @ n))
        return q + k * n, abs(k)

    def meet(c1, c2, exclude):
        (o1, r1), (o2, r2) = c1, c2
        d = np.linalg.norm(o2 - o1)
        x = (d * d + r1 * r1 - r2 * r2) / (2 * d)
        h = np.sqrt(max(r1 * r1 - x * x, 0.0))
        e = (o2 - o1) / d
        base = o1 + x * e
        pts = [base + h * np.array([-e[1], e[0]]), base - h * np.array([-e[1], e[0]])]
        return max(pts, key=lambda p: np.linalg.norm(p - exclude))

    first = meet(tangent_circle(A, B, C), tangent_circle(B, C, A), B)
    second = meet(tangent_circle(B, A, C), tangent_circle(C, B, A), B)
    return first, second


def tangent_directions(inner: Conic, p) -> np.ndarray:
    """Unit directions of the two tangents from ``p`` to ``inner`` (rows)."""
    m = inner.to_cartesian().m
    dual = np.linalg.inv(m)
    ph = np.array([p[0], p[1], 1.0])
    px = np.array([[0, -ph[2], ph[1]], [ph[2], 0, -ph[0]], [-ph[1], ph[0], 0]])
    k = (px.T @ dual @ px)[:2, :2]
    # the conic's sign is arbitrary; orient so that the quadratic in direction is indefinite
    disc = k[0, 1] ** 2 - k[0, 0] * k[1, 1]
    scale = np.abs(k).max()
    if scale == 0 or disc < -1e-14 * scale * scale:
        raise TangentMiss("point is inside the inner conic")
    if disc <= 1e-20 * scale * scale:
        raise NumericalTangentCollapse("point is on the inner conic")
    r = np.sqrt(disc)
    if abs(k[1, 1]) >= abs(k[0, 0]):
        dirs = np.array([[k[1, 1], -k[0, 1] + r], [k[1, 1], -k[0, 1] - r]])
    else:
        dirs = np.array([[-k[0, 1] + r, k[0, 0]], [-k[0, 1] - r, k[0, 0]]])
    dirs /= np.linalg.norm(dirs, axis=1)[:, None]
    cross = dirs[0, 0] * dirs[1, 1] - dirs[0, 1] * dirs[1, 0]
    if abs(cross) < 1e-10:
        raise NumericalTangentCollapse("tangents coincide within 1e-10 rad")
    return dirs


def _chord_end(outer: Conic, p, d) -> np.ndarray:
    m = outer.to_cartesian().m
    ph = np.array([p[0], p[1], 1.0])
    dh = np.array([d[0], d[1], 0.0])
    s = -2 * (dh @ m @ ph) / (dh @ m @ dh)
    return np.asarray(p, float) + s * np.asarray(d, float)


def poncelet_step(outer: Conic, inner: Conic, p, prev_dir=None, center=None) -> np.ndarray:
    """Next vertex: the far end of the chord from ``p`` tangent to ``inner``.

    With ``prev_dir`` the tangent more nearly parallel to it is the incoming
    edge and is skipped. Without it the counterclockwise-first endpoint
    (seen from ``center``, default the outer conic's center) is taken.
    """
    p = np.asarray(p, float)
    dirs = tangent_directions(inner, p)
    ends = [_chord_end(outer, p, d) for d in dirs]
    if prev_dir is not None:
        u = np.asarray(prev_dir, float)
        u = u / np.linalg.norm(u)
        k = int(np.argmin([abs(d @ u) for d in dirs]))
        return ends[k]
    if center is None:
        center = central_conic_geometry(outer).center
    base = np.arctan2(*(p - center)[::-1])
    turn = [(np.arctan2(*(e - center)[::-1]) - base) % (2 * np.pi) for e in ends]
    return ends[int(np.argmin(turn))]


def poncelet_triangle(outer: Conic, inner: Conic, p0, center=None) -> tuple[Triangle, float]:
    """Three stepper moves from ``p0``; returns the triangle and the closure gap."""
    p0 = np.asarray(p0, float)
    p1 = poncelet_step(outer, inner, p0, center=center)
    p2 = poncelet_step(outer, inner, p1, prev_dir=p1 - p0)
    p3 = poncelet_step(outer, inner, p2, prev_dir=p2 - p1)
    return Triangle(p0, p1, p2), float(np.linalg.norm(p3 - p0))


def brocard_triangle(seed: Triangle, t: float, closure_tol: float = 1e-8) -> Triangle:
    seed = _require_seed(seed)
    o, R = circumcircle(seed.A, seed.B, seed.C)
    p0 = o + R * np.array([np.cos(t), np.sin(t)])
    outer = circle_conic(o, R)
    if centers.conditioning(*seed.sides) < 1e-12:
        # equilateral seed: the caustic is the incircle and the family rotates rigidly
        ang = t + 2 * np.pi * np.arange(3) / 3
        return Triangle(*(o + R * np.array([np.cos(ang), np.sin(ang)]).T))
    tri, gap = poncelet_triangle(outer, brocard_inellipse(seed), p0, center=o)
    if gap > closure_tol * R:
        raise ClosureViolation(f"Brocard porism fails to close: gap {gap / R:.3e} R")
    return tri


def arc_parameter(seed: Triangle, p) -> float:
    o, _ = circumcircle(seed.A, seed.B, seed.C)
    return float(np.arctan2(p[1] - o[1], p[0] - o[0]))


@dataclass
class PonceletFamily:
    kind: str
    seed: Triangle
    outer: Conic
    inner: Conic
    stationary_points: dict = field(default_factory=dict)

    @property
    def circumradius(self) -> float:
        return circumcircle(self.seed.A, self.seed.B, self.seed.C)[1]

    @property
    def scale(self) -> float:
        """Length unit for stationarity checks (R for Brocard, seed diameter otherwise)."""
        return self.circumradius if self.kind == BROCARD else self.seed.diameter

    def member(self, t: float) -> Triangle:
        if self.kind == HOMOTHETIC:
            return homothetic_triangle(self.seed, t)
        return brocard_triangle(self.seed, t)

    def closure_gap(self, t: float) -> float:
        """Tangent-stepper closure gap starting from the member's first vertex."""
        center = self.seed.centroid if self.kind == HOMOTHETIC else circumcircle(*self.seed.vertices)[0]
        p0 = self.member(t).A
        return poncelet_triangle(self.outer, self.inner, p0, center=center)[1]

    def params(self, samples: int) -> np.ndarray:
        return 2 * np.pi * np.arange(samples) / samples


def make_family(kind: str, seed: Triangle) -> PonceletFamily:
    seed = _require_seed(seed)
    kind = kind.lower()
    if kind == HOMOTHETIC:
        stat = {"X2": seed.centroid}
        return PonceletFamily(HOMOTHETIC, seed, steiner_ellipse(seed), steiner_inellipse(seed), stat)
    if kind == BROCARD:
        o, R = circumcircle(seed.A, seed.B, seed.C)
        w1, w2 = centers.brocard_points(seed)
        stat = {"X3": o, "Omega1": w1, "Omega2": w2}
        for k in ("X6", "X39", "X15", "X16"):
            try:
                stat[k] = centers.center_point(seed, k)
            except GeometryError:
                pass
        return PonceletFamily(BROCARD, seed, circle_conic(o, R), brocard_inellipse(seed), stat)
    raise ValueError(f"unknown family {kind!r}; use one of {KINDS}")


TRACKED_CENTERS = ("X2", "X3", "X6", "X13", "X14", "X15", "X16", "X39")


@dataclass
class InvariantReport:
    t_param: float
    sum_sq: float
    area: float
    omega: float
    ratio: float
    focal_s: float
    focal_centroid: np.ndarray
    center_positions: dict
    focal_area: float = float("nan")
    x15_perspector: np.ndarray = field(default_factory=lambda: np.full(2, np.nan))
    flags: list = field(default_factory=list)


def flank_triangles(tri: Triangle) -> list[Triangle]:
    tri = _require_seed(tri)
    return [hexgrid.flank_of(tri, v).triangle for v in "ABC"]


def x15_flank_perspector(tri: Triangle) -> np.ndarray:
    """Common point of the lines joining each vertex to its flank's X15."""
    tri = _require_seed(tri)
    lines = []
    for v, name in zip(tri.vertices, "ABC"):
        f = hexgrid.flank_of(tri, name).triangle
        lines.append(line_through(v, centers.center_point(f, "X15", oriented=True)))
    return intersect_lines(lines[0], lines[1])


def member_report(t: float, tri: Triangle) -> InvariantReport:
    tri = _require_seed(tri)
    a, b, c = tri.sides
    sum_sq = a * a + b * b + c * c
    area = tri.area
    flags = []
    pos = {}
    for k in TRACKED_CENTERS:
        try:
            pos[k] = centers.center_point(tri, k)
        except GeometryError as exc:
            flags.append(f"{k}: {type(exc).__name__}")
            pos[k] = np.full(2, np.nan)
    w1, w2 = centers.brocard_points(tri)
    pos["Omega1"], pos["Omega2"] = w1, w2
    try:
        focal = parabolas.focal_triple(a, b, c, tri=Triangle.from_sides(a, b, c), check=False)
        # move the foci from the canonical frame onto this triangle
        fb = [_transfer(Triangle.from_sides(a, b, c), tri, f) for f in focal.vertices]
        focal_s = focal.s
        focal_centroid = np.mean(fb, axis=0)
        focal_area = abs(signed_area(*fb))
    except EquilateralDegenerate as exc:
        flags.append(f"focal: {type(exc).__name__}")
        focal_s, focal_centroid, focal_area = float("nan"), np.full(2, np.nan), float("nan")
    try:
        persp = x15_flank_perspector(tri)
    except GeometryError as exc:
        flags.append(f"perspector: {type(exc).__name__}")
        persp = np.full(2, np.nan)
    return InvariantReport(
        float(t), sum_sq, area, tri.omega, sum_sq / area, focal_s, focal_centroid, pos, focal_area, persp, flags
    )


def _transfer(src: Triangle, dst: Triangle, p) -> np.ndarray:
    """Carry a point by the congruence taking ``src`` onto ``dst`` (same sides)."""
    bary = np.linalg.solve(src.frame, [p[0], p[1], 1.0])
    return dst.frame[:2] @ bary


def family_report(family: PonceletFamily, samples: int) -> list[InvariantReport]:
    if samples < 3:
        raise ValueError("samples must be >= 3")
    out = []
    for t in family.params(samples):
        try:
            tri = family.member(t)
        except GeometryError as exc:
            nan = float("nan")
            out.append(InvariantReport(float(t), nan, nan, nan, nan, nan, np.full(2, nan), {}, flags=[str(exc)]))
            continue
        out.append(member_report(t, tri))
    return out


def spread(values) -> float:
    v = np.asarray(values, float)
    return float(v.max() - v.min())


def point_spread(points) -> float:
    """Largest distance of any point from their mean."""
    p = np.asarray(points, float)
    return float(np.linalg.norm(p - p.mean(axis=0), axis=1).max())


LOCUS_KINDS = ("flank_barycenters", "hexagon_centroids", "focal_centroid")


def locus_points(family: PonceletFamily, what: str, samples: int) -> tuple[np.ndarray, np.ndarray]:
    """(t values, points) for one tracked quantity; flanks give three points per t."""
    ts, pts = [], []
    for t in family.params(samples):
        tri = _require_seed(family.member(t))
        if what == "flank_barycenters":
            new = [f.centroid for f in flank_triangles(tri)]
        elif what == "hexagon_centroids":
            new = [hexgrid.erect_hexagon(p, q, "right").center for p, q in _outward_sides(tri)]
        elif what == "focal_centroid":
            new = [member_report(t, tri).focal_centroid]
        elif what.startswith("center(") and what.endswith(")"):
            new = [centers.center_point(tri, what[len("center(") : -1])]
        elif what in centers.NAMED:
            new = [centers.center_point(tri, what)]
        else:
            raise ValueError(f"unknown locus quantity {what!r}")
        for p in new:
            ts.append(float(t))
            pts.append(np.asarray(p, float))
    return np.array(ts), np.array(pts)


def _outward_sides(tri: Triangle):
    # p -> q with the triangle on the left, so erecting on the right is outward
    return ((tri.B, tri.C), (tri.C, tri.A), (tri.A, tri.B))


@dataclass
class LocusFit:
    conic: Conic
    kind: str
    center: np.ndarray
    semi_axes: np.ndarray
    axes: np.ndarray
    aspect: float
    max_residual: float
    points: np.ndarray
    label: str = "proposition"


def locus_fit(family: PonceletFamily, what: str, samples: int = 36) -> LocusFit:
    if samples < 12:
        raise ValueError("samples must be >= 12")
    _, pts = locus_points(family, what, samples)
    scale = family.seed.diameter
    try:
        conic, res = fit_conic(pts, return_residual=True)
    except RankDeficient as exc:
        raise DegenerateFit(str(exc)) from exc
    kind = classify_conic(conic, scale=scale)
    try:
        geom = central_conic_geometry(conic)
    except GeometryError as exc:
        raise DegenerateFit(f"locus has no center: {exc}") from exc
    a, b = np.abs(geom.semi_axes)
    label = "observation" if what in ("flank_barycenters", "hexagon_centroids") else "proposition"
    max_res = max(conic.residual(p, scale=scale) for p in pts)
    return LocusFit(conic, kind, geom.center, geom.semi_axes, geom.axes, float(min(a, b) / max(a, b)), max_res, pts, label)


def axis_alignment(fit: LocusFit, reference: Conic) -> float:
    """|sin| of the angle between the major axes of a fit and a reference ellipse."""
    g = central_conic_geometry(reference)
    u, v = fit.axes[:, 0], g.axes[:, 0]
    return float(abs(u[0] * v[1] - u[1] * v[0]))


def inellipse_foci(family: PonceletFamily) -> tuple[np.ndarray, np.ndarray]:
    return ellipse_foci(family.inner)


def side_tangency(tri: Triangle, inner: Conic) -> list[float]:
    v = tri.vertices
    return [tangency_residual(inner, line_through(v[i], v[(i + 1) % 3])) for i in range(3)]


def fmt(x: float) -> str:
    """Round-trip float formatting (17 significant digits)."""
    return f"{x:.17g}"


def locus_csv(family: PonceletFamily, quantities, samples: int) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["t", "quantity", "x", "y"])
    for q in quantities:
        ts, pts = locus_points(family, q, samples)
        for t, p in zip(ts, pts):
            w.writerow([fmt(t), q, fmt(p[0]), fmt(p[1])])
    return buf.getvalue()
