"""Registry of named verification checks, shared by the CLI.

Each check measures one residual and compares it to a tolerance. ``mode``
"below" passes when measured < tol; "above" (negative controls) passes when
measured > tol.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field

import numpy as np

from . import centers, hexgrid, parabolas, poncelet
from .errors import GeometryError
from .geometry import Triangle, cartesian_to_bary, line_distance, line_through
from .tolerances import tol


@dataclass
class Context:
    tri: Triangle
    rings: int = 2
    p: tuple | None = None
    samples: int = 50
    overrides: dict = field(default_factory=dict)
    poncelet_kinds: tuple = ("homothetic", "brocard")
    _cache: dict = field(default_factory=dict)

    def tol(self, name):
        return tol(name, self.overrides)

    @property
    def sides(self):
        return self.tri.sides

    def grid(self, rings=None) -> hexgrid.HexGrid:
        rings = self.rings if rings is None else rings
        key = ("grid", rings)
        if key not in self._cache:
            self._cache[key] = hexgrid.grow_grid(self.tri, rings)
        return self._cache[key]

    def cached(self, key, fn):
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]

    def hexagon(self) -> hexgrid.Hexagon:
        return self.cached("hexagon", lambda: hexgrid.Hexagon(hexgrid.HexGrid(self.tri).hexagons[(0, 1)]))

    def webs(self):
        g = self.grid(max(self.rings, 2))
        return self.cached("webs", lambda: [parabolas.confocal_family(g, f) for f in parabolas.FAMILIES])

    def family(self, kind):
        return self.cached(("family", kind), lambda: poncelet.make_family(kind, self.tri))

    def report(self, kind):
        return self.cached(("report", kind), lambda: poncelet.family_report(self.family(kind), self.samples))


@dataclass
class Result:
    name: str
    group: str
    metric: str
    measured: float
    tol: float
    mode: str = "below"
    label: str = "proposition"
    detail: str = ""

    @property
    def passed(self) -> bool:
        if not np.isfinite(self.measured):
            return False
        return self.measured < self.tol if self.mode == "below" else self.measured > self.tol

    def line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        cmp = "tol" if self.mode == "below" else "min"
        return f"{self.name:<28} {self.metric}={self.measured:.3e} {cmp}={self.tol:.0e} {verdict}"

    def as_dict(self) -> dict:
        d = asdict(self)
        d["passed"] = self.passed
        return d


REGISTRY: dict = {}


def check(name, group):
    def deco(fn):
        REGISTRY[name] = (group, fn)
        return fn

    return deco


def _rel(x, ref):
    return float(x / ref)


# core / centers


@check("x15_perspector", "centers")
def _x15_perspector(ctx):
    tri = ctx.tri
    x6 = centers.center_point(tri, "X6")
    res = []
    for v, name in zip(tri.vertices, "ABC"):
        f = hexgrid.flank_of(tri, name).triangle
        res.append(line_distance(x6, line_through(v, centers.center_point(f, "X15", oriented=True))))
    return Result("x15_perspector", "centers", "residual", _rel(max(res), tri.diameter), ctx.tol("point"))


@check("flank_x15_bary", "centers")
def _flank_x15_bary(ctx):
    tri = ctx.tri
    err = 0.0
    for name in "ABC":
        f = hexgrid.flank_of(tri, name).triangle
        got = cartesian_to_bary(tri, centers.center_point(f, "X15", oriented=True))
        want = centers.flank_x15_bary(*tri.sides, vertex=name)
        want = want / np.abs(want).max()
        err = max(err, min(np.abs(got - want).max(), np.abs(got + want).max()))
    return Result("flank_x15_bary", "centers", "distance", float(err), ctx.tol("flank_bary"))


# hexgrid


@check("common_x16", "hexgrid")
def _common_x16(ctx):
    rows = hexgrid.flank_x16_report(ctx.grid())
    good = [r["distance"] for r in rows if r.get("well_conditioned")]
    n_flag = len(rows) - len(good)
    return Result("common_x16", "hexgrid", "spread", max(good), ctx.tol("x16"), detail=f"{len(good)} triangles, {n_flag} flagged")


@check("snap_ratio", "hexgrid")
def _snap_ratio(ctx):
    ratio, _ = hexgrid.snap_check(ctx.tri)
    return Result("snap_ratio", "hexgrid", "error", abs(ratio - 1), ctx.tol("snap"))


@check("snap_angle", "hexgrid")
def _snap_angle(ctx):
    _, ang = hexgrid.snap_check(ctx.tri)
    return Result("snap_angle", "hexgrid", "error", abs(ang - 2 * np.pi / 3), ctx.tol("snap"))


@check("grid_closure", "hexgrid")
def _grid_closure(ctx):
    g = ctx.grid(max(ctx.rings, 3))
    return Result("grid_closure", "hexgrid", "gap", _rel(max(g.closure_gaps), g.diameter), ctx.tol("point"), detail=f"{len(g.closure_gaps)} double paths")


@check("reflect_apices", "hexgrid")
def _reflect_apices(ctx):
    _, spread = hexgrid.reflect_apices_check(ctx.tri)
    return Result("reflect_apices", "hexgrid", "spread", _rel(spread, ctx.tri.diameter), ctx.tol("point"))


@check("conserved_quantity", "hexgrid")
def _conserved(ctx):
    g = ctx.grid()
    q = np.array([hexgrid.conserved_quantity(t) for t in g.triangles().values()])
    return Result("conserved_quantity", "hexgrid", "spread", float(np.ptp(q) / abs(q.mean())), ctx.tol("relative"), detail=f"{len(q)} triangles")


@check("zero_area_C", "hexgrid")
def _zero_c(ctx):
    A, B = ctx.tri.A, ctx.tri.B
    (o, r), _ = hexgrid.zero_area_locus_C(A, B)
    worst = 0.0
    # the arc on the far side of AB from the circle's center
    base = np.arctan2(*(o - (A + B) / 2)[::-1]) + np.pi
    for s in np.linspace(-0.9, 0.9, 20) * np.pi / 3:
        C = o + r * np.array([np.cos(base + s), np.sin(base + s)])
        tri = Triangle.ccw(A, B, C)
        f = hexgrid.flank_of(tri, "ABC"[list(tri.perm).index(2)])
        worst = max(worst, abs(f.signed_area))
    return Result("zero_area_C", "hexgrid", "area", _rel(worst, np.sum((B - A) ** 2)), ctx.tol("point"))


@check("zero_area_F2", "hexgrid")
def _zero_f2(ctx):
    B, C = ctx.tri.B, ctx.tri.C
    o, r = hexgrid.zero_area_locus_F2(B, C)
    worst, d2 = 0.0, np.sum((C - B) ** 2)
    for A in hexgrid.locus_F2_samples(B, C, 20):
        worst = max(worst, abs(hexgrid.f2_signed_area(Triangle(A, B, C))))
    return Result("zero_area_F2", "hexgrid", "area", _rel(worst, d2), ctx.tol("point"))


@check("satellite_area_sum", "satellites")
def _sat_sum(ctx):
    h = ctx.hexagon()
    d = 2 * h.side
    ps = [h.center + d * np.array(v) for v in ((0.1, 0.2), (1.3, -0.4), (-2.2, 0.9), (0.05, -1.7))]
    if ctx.p is not None:
        ps.append(np.asarray(ctx.p, float))
    err = max(abs(hexgrid.satellite_area_sum(h, p) - h.area) for p in ps)
    return Result("satellite_area_sum", "satellites", "error", _rel(err, h.area), ctx.tol("relative"), detail=f"{len(ps)} points")


def _line_points(h):
    q = h.v
    out = []
    for i, j in ((2, 1), (5, 0)):
        for s in (-0.6, 0.35, 1.8):
            out.append(q[j] + s * (q[i] - q[j]))
    return out


@check("apex_conic_on_lines", "satellites")
def _apex_on(ctx):
    h = ctx.hexagon()
    res = max(hexgrid.apex_conic_residual(h, p) for p in _line_points(h))
    return Result("apex_conic_on_lines", "satellites", "residual", res, ctx.tol("on_conic"))


@check("apex_conic_off_lines", "satellites")
def _apex_off(ctx):
    h = ctx.hexagon()
    o = hexgrid.satellite_center(h)
    d = 2 * h.side
    ps = [o + d * np.array(v) for v in ((0.31, 0.17), (-0.42, 0.26), (0.2, -0.5))]
    res = min(hexgrid.apex_conic_residual(h, p) for p in ps)
    return Result("apex_conic_off_lines", "satellites", "residual", res, ctx.tol("off_conic"), mode="above", label="negative control")


@check("iso_area_circle", "satellites")
def _iso_area(ctx):
    h = ctx.hexagon()
    o = hexgrid.satellite_center(h)
    r = 0.7 * h.side
    vals = np.array(
        [hexgrid.satellite_hex_area_sum(h, o + r * np.array([np.cos(t), np.sin(t)])) for t in np.linspace(0, 2 * np.pi, 36, endpoint=False)]
    )
    return Result("iso_area_circle", "satellites", "spread", float(np.ptp(vals) / vals.mean()), ctx.tol("relative"))


def _angle_gap(a, b):
    """Largest vertex-angle difference modulo pi (an edge may pass through zero length)."""
    return hexgrid.angle_gap(a, b)


SECOND_LEVEL_KINDS = ("X2", "X3", "X4", "X5", centers.EulerParam(0.25), centers.EulerParam(2.0), centers.EulerParam(-1.0))


def _second_level_ps(h):
    d = 2 * h.side
    return [h.center + d * np.array(v) for v in ((0.13, 0.07), (0.31, -0.22), (-0.4, 0.45))]


@check("second_level_angles", "satellites")
def _second_level(ctx):
    h = ctx.hexagon()
    worst = 0.0
    for p in _second_level_ps(h):
        ref = hexgrid.polygon_angles(hexgrid.second_level_hexagon(h, p, "X2"))
        for k in SECOND_LEVEL_KINDS[1:]:
            worst = max(worst, _angle_gap(hexgrid.polygon_angles(hexgrid.second_level_hexagon(h, p, k)), ref))
    return Result("second_level_angles", "satellites", "spread", worst, ctx.tol("angle"), label="fixed P, across Euler-line centers")


@check("second_level_x6_control", "satellites")
def _second_level_x6(ctx):
    h = ctx.hexagon()
    gaps = []
    for p in _second_level_ps(h):
        ref = hexgrid.polygon_angles(hexgrid.second_level_hexagon(h, p, "X2"))
        gaps.append(_angle_gap(hexgrid.polygon_angles(hexgrid.second_level_hexagon(h, p, "X6")), ref))
    return Result("second_level_x6_control", "satellites", "gap", min(gaps), ctx.tol("off_conic"), mode="above", label="negative control")


def _interior_ps(h, n=6):
    d = h.side
    rng = np.random.default_rng(7)
    out = []
    while len(out) < n:
        p = h.center + d * rng.uniform(-0.85, 0.85, 2)
        if hexgrid.point_in_polygon(p, h.v) and np.linalg.norm(p - h.center) > 0.05 * d:
            out.append(p)
    return out


@check("x14_line", "satellites")
def _x14_line(ctx):
    h = ctx.hexagon()
    ps = _interior_ps(h) + [h.center + 2.5 * h.side * np.array([0.6, 0.8])]
    worst = max(hexgrid.inner_x14_line(h, p)[2].max() for p in ps)
    return Result("x14_line", "satellites", "distance", worst, ctx.tol("point"))


@check("x14_hyperbola_rectangular", "satellites")
def _x14_rect(ctx):
    h = ctx.hexagon()
    reps = [hexgrid.reflected_x14_hyperbola(h, p) for p in _interior_ps(h)]
    worst = max(max(abs(r.trace), r.sixth_residual) for r in reps)
    kinds = sorted({r.kind for r in reps})
    return Result("x14_hyperbola_rectangular", "satellites", "trace", worst, ctx.tol("classify"), detail=",".join(kinds))


@check("x14_hyperbola_center", "satellites")
def _x14_center(ctx):
    h = ctx.hexagon()
    worst = max(hexgrid.reflected_x14_hyperbola(h, p).center_offset for p in _interior_ps(h))
    return Result("x14_hyperbola_center", "satellites", "offset", worst, ctx.tol("x16"))


# parabolas


@check("focal_equilateral", "parabolas")
def _focal_eq(ctx):
    foci = np.array([w.focus for w in ctx.webs()])
    s = np.array([np.linalg.norm(foci[i] - foci[(i + 1) % 3]) for i in range(3)])
    return Result("focal_equilateral", "parabolas", "spread", float(np.ptp(s) / s.mean()), ctx.tol("relative"), detail="fitted foci")


@check("focal_centroid_x16", "parabolas")
def _focal_x16(ctx):
    foci = np.array([w.focus for w in ctx.webs()])
    x16 = centers.center_point(ctx.tri, "X16")
    return Result("focal_centroid_x16", "parabolas", "distance", _rel(np.linalg.norm(foci.mean(0) - x16), ctx.tri.diameter), ctx.tol("x16"))


@check("focal_s_formula", "parabolas")
def _focal_s(ctx):
    foci = np.array([w.focus for w in ctx.webs()])
    s_geo = np.mean([np.linalg.norm(foci[i] - foci[(i + 1) % 3]) for i in range(3)])
    s2, _ = parabolas.focal_s2(*ctx.sides)
    return Result("focal_s_formula", "parabolas", "error", abs(s_geo**2 - s2) / s2, ctx.tol("relative"))


@check("focal_s_forms", "parabolas")
def _focal_forms(ctx):
    s2, s2b = parabolas.focal_s2(*ctx.sides)
    return Result("focal_s_forms", "parabolas", "error", abs(s2 - s2b) / abs(s2), ctx.tol("forms"), detail=f"s^2={s2:.12g}")


@check("confocality", "parabolas")
def _confocal(ctx):
    worst = max(w.focus_spread for w in ctx.webs())
    n = sum(len(w.members) for w in ctx.webs())
    return Result("confocality", "parabolas", "spread", _rel(worst, ctx.tri.diameter), ctx.tol("x16"), detail=f"{n} fitted parabolas")


@check("axis_concurrence", "parabolas")
def _axes(ctx):
    webs = ctx.webs()
    x16 = centers.center_point(ctx.tri, "X16")
    ang = parabolas.axis_angles(webs)
    ang_err = float(np.min(np.abs(np.stack([ang - np.pi / 3, ang - 2 * np.pi / 3])), axis=0).max())
    through = max(w.axis.distance_to(x16) for w in webs) / ctx.tri.diameter
    return Result("axis_concurrence", "parabolas", "error", max(ang_err, through), ctx.tol("angle"))


@check("a_parabola_incidence", "parabolas")
def _a_inc(ctx):
    a, b, c = ctx.sides
    g = ctx.grid(max(ctx.rings, 2))
    worst = 0.0
    for fam in parabolas.FAMILIES:
        conic = parabolas.a_parabola_conic(a, b, c, fam, tri=ctx.tri)
        pts = g.antipodal_sequence(fam, 0)
        worst = max(worst, max(conic.residual(p, scale=g.diameter) for p in pts))
    return Result("a_parabola_incidence", "parabolas", "residual", worst, ctx.tol("on_conic"))


@check("a_parabola_class", "parabolas")
def _a_cls(ctx):
    a, b, c = ctx.sides
    d = ctx.tri.diameter
    worst = 0.0
    for fam in parabolas.FAMILIES:
        cc = parabolas.a_parabola_conic(a, b, c, fam, tri=ctx.tri).to_cartesian().scaled(1 / d)
        worst = max(worst, abs(cc.discriminant()))
    return Result("a_parabola_class", "parabolas", "discriminant", worst, ctx.tol("classify"))


@check("a_parabola_focus", "parabolas")
def _a_focus(ctx):
    a, b, c = ctx.sides
    f = parabolas.focal_triple(a, b, c, tri=ctx.tri)
    worst = 0.0
    for fam, target in zip(parabolas.FAMILIES, f.vertices):
        geom = parabolas.parabola_geometry(parabolas.a_parabola_conic(a, b, c, fam, tri=ctx.tri))
        worst = max(worst, np.linalg.norm(geom.focus - target))
    return Result("a_parabola_focus", "parabolas", "distance", _rel(worst, ctx.tri.diameter), ctx.tol("x16"))


@check("axis_infinity", "parabolas")
def _axis_inf(ctx):
    a, b, c = ctx.sides
    worst = 0.0
    for fam in parabolas.FAMILIES:
        v = parabolas.axis_infinity_point(a, b, c, fam)
        d = parabolas.infinity_direction(ctx.tri, v)
        u = parabolas.parabola_geometry(parabolas.a_parabola_conic(a, b, c, fam, tri=ctx.tri)).axis_direction
        worst = max(worst, abs(v.sum()) / np.abs(v).max(), abs(d[0] * u[1] - d[1] * u[0]))
    return Result("axis_infinity", "parabolas", "error", worst, ctx.tol("classify"))


@check("directrix_lines", "parabolas")
def _directrix(ctx):
    a, b, c = ctx.sides
    worst = 0.0
    for fam in parabolas.FAMILIES:
        geom = parabolas.parabola_geometry(parabolas.a_parabola_conic(a, b, c, fam, tri=ctx.tri))
        worst = max(worst, parabolas.directrix_line(a, b, c, fam, tri=ctx.tri).distance(geom.directrix))
    return Result("directrix_lines", "parabolas", "distance", worst, ctx.tol("classify"))


@check("skip1_incidence", "parabolas")
def _skip_inc(ctx):
    a, b, c = ctx.sides
    g = ctx.grid(max(ctx.rings, 2))
    worst = 0.0
    for grain in parabolas.FAMILIES:
        for conic, v in zip(parabolas.skip1_parabolas(a, b, c, grain, tri=ctx.tri), parabolas.skip1_vertices(grain)):
            pts = g.skip1_sequence(grain, v)
            worst = max(worst, max(conic.residual(p, scale=g.diameter) for p in pts))
    return Result("skip1_incidence", "parabolas", "residual", worst, ctx.tol("on_conic"))


@check("skip1_foci", "parabolas")
def _skip_foci(ctx):
    a, b, c = ctx.sides
    f = parabolas.focal_triple(a, b, c, tri=ctx.tri)
    odd, even = parabolas.skip1_parabolas(a, b, c, "C", tri=ctx.tri)
    e1 = np.linalg.norm(parabolas.parabola_geometry(odd).focus - f.fa)
    e2 = np.linalg.norm(parabolas.parabola_geometry(even).focus - f.fb)
    return Result("skip1_foci", "parabolas", "distance", _rel(max(e1, e2), ctx.tri.diameter), ctx.tol("x16"))


@check("skip1_axes", "parabolas")
def _skip_axes(ctx):
    a, b, c = ctx.sides
    cax = parabolas.parabola_geometry(parabolas.a_parabola_conic(a, b, c, "C", tri=ctx.tri)).axis_direction
    worst = 0.0
    for conic in parabolas.skip1_parabolas(a, b, c, "C", tri=ctx.tri):
        g = parabolas.parabola_geometry(conic)
        worst = max(worst, abs(g.axis_direction[0] * cax[1] - g.axis_direction[1] * cax[0]))
        worst = max(worst, g.axis.distance_to(g.focus) / ctx.tri.diameter)
    return Result("skip1_axes", "parabolas", "error", worst, ctx.tol("classify"), label="parallel to C axis, through own focus")


def _direq(ctx):
    return ctx.cached("direq", lambda: parabolas.directrix_equilateral(*ctx.sides, tri=ctx.tri, check=False))


@check("directrix_equilateral", "parabolas")
def _direq_spread(ctx):
    return Result("directrix_equilateral", "parabolas", "spread", _direq(ctx).side_spread, ctx.tol("relative"))


@check("directrix_x617", "parabolas")
def _direq_x617(ctx):
    d = _direq(ctx)
    return Result("directrix_x617", "parabolas", "distance", _rel(np.linalg.norm(d.centroid - d.x617), ctx.tri.diameter), ctx.tol("x16"))


@check("directrix_a_vertex", "parabolas")
def _direq_av(ctx):
    d = _direq(ctx)
    return Result("directrix_a_vertex", "parabolas", "distance", _rel(np.linalg.norm(d.a_vertex_formula - d.vertices[0]), ctx.tri.diameter), ctx.tol("x16"))


@check("directrix_s_prime_printed", "parabolas")
def _direq_sp(ctx):
    d = _direq(ctx)
    return Result(
        "directrix_s_prime_printed", "parabolas", "error", abs(d.s_prime_printed - d.s_prime) / d.s_prime, ctx.tol("s_prime"),
        detail=f"measured {d.s_prime:.12g}, printed {d.s_prime_printed:.12g}",
    )


@check("directrix_s_prime_closed", "parabolas")
def _direq_spc(ctx):
    d = _direq(ctx)
    return Result("directrix_s_prime_closed", "parabolas", "error", abs(d.s_prime_closed - d.s_prime) / d.s_prime, ctx.tol("s_prime"), label="recovered closed form")


@check("vertex_triangle_scalene", "parabolas")
def _vert_scalene(ctx):
    return Result("vertex_triangle_scalene", "parabolas", "spread", _direq(ctx).vertex_triangle_spread, ctx.tol("scalene"), mode="above")


# poncelet


def _rel_spread(v):
    v = np.asarray(v, float)
    return float(np.ptp(v) / abs(v.mean()))


@check("homothetic_conservation", "poncelet")
def _hom_cons(ctx):
    rep = ctx.report("homothetic")
    worst = max(_rel_spread([getattr(r, k) for r in rep]) for k in ("sum_sq", "area", "omega", "focal_s"))
    return Result("homothetic_conservation", "poncelet", "spread", worst, ctx.tol("relative"), detail=f"{len(rep)} samples")


@check("homothetic_tangency", "poncelet")
def _hom_tan(ctx):
    fam = ctx.family("homothetic")
    worst = max(max(poncelet.side_tangency(fam.member(t), fam.inner)) for t in fam.params(12))
    gap = max(fam.closure_gap(t) for t in fam.params(12)) / fam.scale
    return Result("homothetic_tangency", "poncelet", "residual", max(worst, gap), ctx.tol("point"))


@check("homothetic_focal_circle", "poncelet")
def _hom_focal(ctx):
    fam = ctx.family("homothetic")
    fit = poncelet.locus_fit(fam, "focal_centroid", 36)
    err = max(abs(1 - fit.aspect), np.linalg.norm(fit.center - fam.seed.centroid) / fam.scale)
    return Result("homothetic_focal_circle", "poncelet", "error", err, ctx.tol("aspect"))


@check("homothetic_loci", "poncelet")
def _hom_loci(ctx):
    fam = ctx.family("homothetic")
    fb = poncelet.locus_fit(fam, "flank_barycenters", 36)
    hc = poncelet.locus_fit(fam, "hexagon_centroids", 36)
    g = fam.seed.centroid
    errs = [
        np.linalg.norm(fb.center - g) / fam.scale,
        np.linalg.norm(hc.center - g) / fam.scale,
        poncelet.axis_alignment(fb, fam.outer),
        abs(1 - poncelet.axis_alignment(hc, fam.outer)),
        float(np.abs(np.abs(fb.semi_axes) - np.abs(hc.semi_axes)).max() / np.abs(fb.semi_axes).max()),
    ]
    return Result("homothetic_loci", "poncelet", "error", float(max(errs)), ctx.tol("aspect"), label="observation")


@check("homothetic_center_circles", "poncelet")
def _hom_circles(ctx):
    fam = ctx.family("homothetic")
    worst = 0.0
    for k in ("X13", "X14", "X15", "X16"):
        worst = max(worst, abs(1 - poncelet.locus_fit(fam, f"center({k})", 36).aspect))
    return Result("homothetic_center_circles", "poncelet", "error", worst, ctx.tol("aspect"))


@check("brocard_closure", "poncelet")
def _bro_closure(ctx):
    fam = ctx.family("brocard")
    gaps = [fam.closure_gap(t) for t in fam.params(max(ctx.samples, 100))]
    return Result("brocard_closure", "poncelet", "gap", max(gaps) / fam.scale, ctx.tol("x16"), detail=f"{len(gaps)} starts")


@check("brocard_inellipse", "poncelet")
def _bro_inellipse(ctx):
    fam = ctx.family("brocard")
    tri = fam.seed
    tang = max(poncelet.side_tangency(tri, fam.inner))
    try:
        f1, f2 = poncelet.inellipse_foci(fam)
        w1, w2 = poncelet.brocard_points_geometric(tri)
        d = min(max(np.linalg.norm(f1 - w1), np.linalg.norm(f2 - w2)), max(np.linalg.norm(f1 - w2), np.linalg.norm(f2 - w1)))
        d /= tri.diameter
    except GeometryError:
        d = 0.0  # equilateral: the foci merge at the center
    return Result("brocard_inellipse", "poncelet", "error", max(tang, d), ctx.tol("x16"))


@check("brocard_conservation", "poncelet")
def _bro_cons(ctx):
    rep = ctx.report("brocard")
    worst = max(float(np.ptp([r.omega for r in rep])), _rel_spread([r.ratio for r in rep]))
    return Result("brocard_conservation", "poncelet", "spread", worst, ctx.tol("relative"), detail=f"{len(rep)} samples")


@check("brocard_stationary", "poncelet")
def _bro_stat(ctx):
    fam = ctx.family("brocard")
    rep = ctx.report("brocard")
    worst = 0.0
    for k in ("X3", "X6", "X15", "X16", "X39", "Omega1", "Omega2"):
        worst = max(worst, poncelet.point_spread([r.center_positions[k] for r in rep]))
    worst = max(worst, poncelet.point_spread([r.focal_centroid for r in rep]), poncelet.point_spread([r.x15_perspector for r in rep]))
    return Result("brocard_stationary", "poncelet", "spread", worst / fam.scale, ctx.tol("x16"))


@check("brocard_focal_area", "poncelet")
def _bro_area(ctx):
    rep = ctx.report("brocard")
    return Result("brocard_focal_area", "poncelet", "spread", _rel_spread([r.focal_area / r.area for r in rep]), ctx.tol("relative"))


GROUPS = ("centers", "hexgrid", "satellites", "parabolas", "poncelet")


def run(ctx: Context, names=None) -> list[Result]:
    names = list(REGISTRY) if not names else list(names)
    out = []
    for name in names:
        if name not in REGISTRY:
            raise KeyError(f"unknown check {name!r}")
        group, fn = REGISTRY[name]
        try:
            out.append(fn(ctx))
        except GeometryError as exc:
            out.append(Result(name, group, "error", float("nan"), 0.0, detail=f"{type(exc).__name__}: {exc}"))
    return out


def names_for(groups) -> list[str]:
    return [n for n, (g, _) in REGISTRY.items() if g in groups]
