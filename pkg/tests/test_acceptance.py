"""Acceptance criteria 1-12, each at its stated tolerance.

Every criterion is a list of clauses (measured value against a bound). A
criterion passes when all its clauses pass. One PASS/FAIL line per criterion
is printed in the pytest terminal summary, or on stdout when this file is run
as a script.
"""

from __future__ import annotations

import subprocess
import sys
import time
from dataclasses import dataclass

import numpy as np
import pytest

import oracles as o
from helpers import frozen, frozen_triangle, random_triangles
from hexaweb import Triangle, centers, hexgrid, parabolas, poncelet
from hexaweb.geometry import cartesian_to_bary, intersect_lines, line_distance, line_through
from hexaweb.scene import satellite_hexagon

T0 = time.perf_counter()
LINES: dict = {}


@dataclass
class Clause:
    name: str
    measured: float
    bound: float
    above: bool = False  # negative controls must exceed the bound

    @property
    def ok(self) -> bool:
        if not np.isfinite(self.measured):
            return False
        return self.measured > self.bound if self.above else self.measured < self.bound

    def text(self) -> str:
        op = ">" if self.above else "<"
        return f"{self.name}={self.measured:.2e}{op}{self.bound:.0e}"


def record(number: int, title: str, clauses: list[Clause]) -> None:
    ok = all(c.ok for c in clauses)
    bad = [c.text() for c in clauses if not c.ok]
    detail = "; ".join(bad) if bad else f"{len(clauses)} clauses"
    LINES[number] = f"criterion {number:>2} {title:<34} {'PASS' if ok else 'FAIL'}  ({detail})"
    print(LINES[number])
    assert ok, LINES[number]


def summary_lines() -> list[str]:
    return [LINES[k] for k in sorted(LINES)]


def seed534() -> Triangle:
    return frozen_triangle("534")


# oracle helpers shared by several criteria


def oracle_parabolas(tri: Triangle) -> dict:
    """Focus and directrix (n, d) of each row parabola through a seed vertex."""
    g = o.OracleGrid(tri.A, tri.B, tri.C)
    out = {}
    for v in "ABC":
        pts = g.grain_row(v)
        coeffs = o.conic_through(pts[[0, 1, 2, 4, 5]])
        f, n, d = o.parabola_focus(coeffs)
        out[v] = (f, n, d, pts)
    return out


def hexagon_points(h, rng, n, lo=0.0, hi=3.0):
    out = []
    while len(out) < n:
        r = h.side * rng.uniform(lo, hi)
        t = rng.uniform(0, 2 * np.pi)
        out.append(h.center + r * np.array([np.cos(t), np.sin(t)]))
    return out


# 1


def test_criterion_01_common_x16():
    clauses = []
    worst = 0.0
    oracle_gap = 0.0
    for tri in random_triangles(200, seed=1):
        ref = centers.center_point(tri, "X16")
        _, x16 = o.apollonius_points(tri.A, tri.B, tri.C)
        oracle_gap = max(oracle_gap, np.linalg.norm(ref - x16) / tri.diameter)
        for v in "ABC":
            f = hexgrid.flank_of(tri, v).triangle
            p = centers.center_point(f, "X16", oriented=True)
            worst = max(worst, np.linalg.norm(p - ref) / tri.diameter)
    clauses.append(Clause("flank_spread", worst, 1e-8))
    clauses.append(Clause("oracle_x16", oracle_gap, 1e-8))
    grid_worst = 0.0
    for tri in [seed534(), *random_triangles(5, seed=11)]:
        rows = hexgrid.flank_x16_report(hexgrid.grow_grid(tri, 2))
        grid_worst = max(grid_worst, max(r["distance"] for r in rows if r["well_conditioned"]))
    clauses.append(Clause("grid_rings2", grid_worst, 1e-8))
    record(1, "common X16", clauses)


# 2


def test_criterion_02_x15_perspector():
    res = 0.0
    bary = 0.0
    for tri in random_triangles(200, seed=2, conditioned=False):
        x6 = o.symmedian(tri.A, tri.B, tri.C)
        for vert, name in zip(tri.vertices, "ABC"):
            f = hexgrid.flank_of(tri, name).triangle
            x15 = centers.center_point(f, "X15", oriented=True)
            res = max(res, line_distance(x6, line_through(vert, x15)) / tri.diameter)
            got = cartesian_to_bary(tri, x15)
            a2, b2, c2 = (s * s for s in tri.sides)
            want = {
                "A": [a2 - 3 * b2 - 3 * c2, b2, c2],
                "B": [a2, b2 - 3 * c2 - 3 * a2, c2],
                "C": [a2, b2, c2 - 3 * a2 - 3 * b2],
            }[name]
            want = np.array(want) / np.abs(want).max()
            bary = max(bary, min(np.abs(got - want).max(), np.abs(got + want).max()))
    record(2, "X15 perspector at X6", [Clause("concurrency", res, 1e-9), Clause("flank_bary", bary, 1e-10)])


# 3


def test_criterion_03_closure():
    ratio_err = angle_err = 0.0
    for tri in [seed534(), *random_triangles(20, seed=3, conditioned=False)]:
        ratio, ang = hexgrid.snap_check(tri)
        ratio_err = max(ratio_err, abs(ratio - 1))
        angle_err = max(angle_err, abs(ang - 2 * np.pi / 3))
    g = hexgrid.grow_grid(seed534(), 3)
    gap = max(g.closure_gaps) / g.diameter
    record(3, "snap closure |CE|=|AC|", [Clause("ratio", ratio_err, 1e-10), Clause("angle", angle_err, 1e-10), Clause("double_path", gap, 1e-9)])


# 4


def test_criterion_04_conserved_quantity():
    clauses = []
    for k, tri in enumerate([seed534(), *random_triangles(3, seed=4)]):
        tris = hexgrid.grow_grid(tri, 2).triangles().values()
        q = np.array([hexgrid.conserved_quantity(t) for t in tris])
        clauses.append(Clause(f"count{k}", -len(q), -30 + 1e-9))  # at least 30 triangles
        clauses.append(Clause(f"spread{k}", float(np.ptp(q) / abs(q.mean())), 1e-9))
    record(4, "conserved a2+b2+c2-2S*sqrt3", clauses)


# 5


def test_criterion_05_focal_equilateral():
    clauses = []
    for name in ("534", "skew"):
        tri = frozen_triangle(name)
        g = hexgrid.grow_grid(tri, 2)
        foci = np.array([parabolas.confocal_family(g, f).focus for f in parabolas.FAMILIES])
        s = np.array([np.linalg.norm(foci[i] - foci[(i + 1) % 3]) for i in range(3)])
        clauses.append(Clause(f"{name}.equilateral", float(np.ptp(s) / s.mean()), 1e-9))
        x16 = np.array(frozen()[name]["X16"])
        clauses.append(Clause(f"{name}.centroid_x16", np.linalg.norm(foci.mean(0) - x16) / tri.diameter, 1e-8))
        a, b, c = tri.sides
        s2_formula = 3 / 32 * (a * a + b * b + c * c - 2 * tri.S * np.sqrt(3))
        clauses.append(Clause(f"{name}.s_formula", abs(s.mean() ** 2 - s2_formula) / s2_formula, 1e-9))
        s2, s2b = parabolas.focal_s2(a, b, c)
        clauses.append(Clause(f"{name}.forms", abs(s2 - s2b) / s2, 1e-12))
        want = np.array([frozen()[name]["focus"][v] for v in "ABC"])
        clauses.append(Clause(f"{name}.oracle_foci", np.abs(foci - want).max() / tri.diameter, 1e-8))
    record(5, "focal equilateral", clauses)


# 6


def test_criterion_06_closed_form_tables():
    clauses = []
    for name in ("534", "skew"):
        tri = frozen_triangle(name)
        a, b, c = tri.sides
        d = tri.diameter
        orc = oracle_parabolas(tri)
        inc = cls = foc = dirx = axis = 0.0
        lines = {}
        for fam in parabolas.FAMILIES:
            f_o, n_o, d_o, pts = orc[fam]
            conic = parabolas.a_parabola_conic(a, b, c, fam, tri=tri)
            inc = max(inc, max(conic.residual(p, scale=d) for p in pts[:4]))
            cc = conic.to_cartesian().scaled(1 / d)
            cls = max(cls, abs(cc.discriminant()))
            geom = parabolas.parabola_geometry(conic)
            foc = max(foc, np.linalg.norm(geom.focus - f_o) / d)
            line = parabolas.directrix_line(a, b, c, fam, tri=tri).normalized()
            ref = np.array([n_o[0], n_o[1], d_o])
            ref = ref / np.hypot(*ref[:2])
            ref = ref if ref[int(np.argmax(np.abs(ref[:2])))] > 0 else -ref
            dirx = max(dirx, np.abs((line - ref) / np.array([1, 1, d])).max())
            lines[fam] = line
            u = parabolas.infinity_direction(tri, parabolas.axis_infinity_point(a, b, c, fam))
            axis = max(axis, abs(u[0] * n_o[1] - u[1] * n_o[0]))
        clauses += [
            Clause(f"{name}.incidence", inc, 1e-8),
            Clause(f"{name}.class", cls, 1e-7),
            Clause(f"{name}.focus", foc, 1e-8),
            Clause(f"{name}.directrix", dirx, 1e-7),
            Clause(f"{name}.axis_infinity", axis, 1e-7),
        ]
        g = hexgrid.grow_grid(tri, 2)
        odd, even = parabolas.skip1_parabolas(a, b, c, "C", tri=tri)
        res = 0.0
        for conic, v in zip((odd, even), parabolas.skip1_vertices("C")):
            res = max(res, max(conic.residual(p, scale=d) for p in g.skip1_sequence("C", v)))
        clauses.append(Clause(f"{name}.skip1_incidence", res, 1e-8))
        fe = max(
            np.linalg.norm(parabolas.parabola_geometry(odd).focus - orc["A"][0]),
            np.linalg.norm(parabolas.parabola_geometry(even).focus - orc["B"][0]),
        )
        clauses.append(Clause(f"{name}.skip1_foci", fe / d, 1e-8))
        de = parabolas.directrix_equilateral(a, b, c, tri=tri, check=False)
        corners = [intersect_lines(lines[p], lines[q]) for p, q in (("B", "C"), ("C", "A"), ("A", "B"))]
        av = min(np.linalg.norm(de.a_vertex_formula - x) for x in corners) / d
        clauses.append(Clause(f"{name}.a_vertex", av, 1e-8))
    record(6, "closed-form tables", clauses)


# 7


def test_criterion_07_directrix_equilateral():
    tri = Triangle.from_sides(3, 4, 5)
    a, b, c = tri.sides
    de = parabolas.directrix_equilateral(a, b, c, tri=tri, check=False)
    orc = oracle_parabolas(tri)
    lines = [(n[0], n[1], dd) for _, n, dd, _ in orc.values()]
    corners = np.array([intersect_lines(lines[i], lines[(i + 1) % 3]) for i in range(3)])
    sides = np.array([np.linalg.norm(corners[i] - corners[(i + 1) % 3]) for i in range(3)])
    _, x14 = o.fermat_points(tri.A, tri.B, tri.C)
    x617 = o.anticomplement(tri.A, tri.B, tri.C, x14)
    s_geo = sides.mean()
    printed = np.sqrt(parabolas.s_prime2_printed(a, b, c))
    clauses = [
        Clause("spread", float(np.ptp(sides) / s_geo), 1e-9),
        Clause("library_spread", de.side_spread, 1e-9),
        Clause("centroid_x617", np.linalg.norm(corners.mean(0) - x617) / tri.diameter, 1e-8),
        Clause("s_prime_printed", abs(printed - s_geo) / s_geo, 1e-7),
        Clause("vertex_scalene", de.vertex_triangle_spread, 1e-3, above=True),
    ]
    record(7, "directrix equilateral at X617", clauses)


# 8


def test_criterion_08_satellites():
    h = satellite_hexagon(seed534())
    rng = np.random.default_rng(8)
    area = max(abs(hexgrid.satellite_area_sum(h, p) - h.area) / h.area for p in hexagon_points(h, rng, 50))
    q = h.v
    on = []
    for i, j in ((2, 1), (5, 0)):
        for s in rng.uniform(-2, 3, 5):
            on.append(q[j] + s * (q[i] - q[j]))
    on_res = max(hexgrid.apex_conic_residual(h, p) for p in on)
    l1, l2 = line_through(q[2], q[1]), line_through(q[5], q[0])
    off = [p for p in hexagon_points(h, rng, 200, 0.2, 2.0) if min(line_distance(p, l1), line_distance(p, l2)) > 0.25 * h.side][:20]
    off_res = min(hexgrid.apex_conic_residual(h, p) for p in off)
    oc = hexgrid.satellite_center(h)
    iso = 0.0
    for r in (0.3, 0.7, 1.5):
        r *= h.side
        vals = np.array(
            [hexgrid.satellite_hex_area_sum(h, oc + r * np.array([np.cos(t), np.sin(t)])) for t in np.linspace(0, 2 * np.pi, 36, endpoint=False)]
        )
        iso = max(iso, float(np.ptp(vals) / vals.mean()))
    kinds = ("X3", "X4", "X5", centers.EulerParam(0.25), centers.EulerParam(2.0), centers.EulerParam(-1.0))
    sl = 0.0
    ctrl = np.inf
    for p in hexagon_points(h, rng, 5, 0.1, 0.9):
        ref = hexgrid.polygon_angles(hexgrid.second_level_hexagon(h, p, "X2"))
        for k in kinds:
            sl = max(sl, hexgrid.angle_gap(hexgrid.polygon_angles(hexgrid.second_level_hexagon(h, p, k)), ref))
        ctrl = min(ctrl, hexgrid.angle_gap(hexgrid.polygon_angles(hexgrid.second_level_hexagon(h, p, "X6")), ref))
    record(
        8,
        "satellite suite",
        [
            Clause("area_sum", area, 1e-9),
            Clause("apex_on_lines", on_res, 1e-8),
            Clause("apex_off_lines", off_res, 1e-4, above=True),
            Clause("iso_area", iso, 1e-9),
            Clause("second_level", sl, 1e-8),
            Clause("x6_control", ctrl, 1e-4, above=True),
        ],
    )


# 9


def test_criterion_09_x14():
    h = satellite_hexagon(seed534())
    rng = np.random.default_rng(9)
    ps = []
    while len(ps) < 20:
        p = h.center + h.side * rng.uniform(-1, 1, 2)
        if hexgrid.point_in_polygon(p, h.v) and np.linalg.norm(p - h.center) > 0.05 * h.side:
            ps.append(p)
    line = max(hexgrid.inner_x14_line(h, p)[2].max() for p in ps)
    reps = [hexgrid.reflected_x14_hyperbola(h, p) for p in ps]
    rect = max(abs(r.trace) for r in reps)
    onc = max(r.sixth_residual for r in reps)
    hyper = sum(r.kind != "hyperbola" for r in reps)
    center = max(r.center_offset for r in reps)
    record(
        9,
        "X14 line and rectangular hyperbola",
        [
            Clause("line_PO", line, 1e-9),
            Clause("trace", rect, 1e-7),
            Clause("sixth_point", onc, 1e-8),
            Clause("non_hyperbola", hyper, 0.5),
            Clause("center_O", center, 1e-8),
        ],
    )


# 10


def _spread(v):
    v = np.asarray(v, float)
    return float(np.ptp(v) / abs(v.mean()))


def test_criterion_10_poncelet():
    seed = seed534()
    hom = poncelet.make_family("homothetic", seed)
    rep = poncelet.family_report(hom, 50)
    clauses = [Clause(f"hom.{k}", _spread([getattr(r, k) for r in rep]), 1e-9) for k in ("sum_sq", "area", "omega", "focal_s")]
    fc = poncelet.locus_fit(hom, "focal_centroid", 36)
    clauses.append(Clause("hom.focal_circle", abs(1 - fc.aspect), 1e-6))
    clauses.append(Clause("hom.focal_center_X2", np.linalg.norm(fc.center - seed.centroid) / hom.scale, 1e-6))
    fb = poncelet.locus_fit(hom, "flank_barycenters", 36)
    hc = poncelet.locus_fit(hom, "hexagon_centroids", 36)
    clauses.append(Clause("hom.concentric", max(np.linalg.norm(fb.center - hc.center), np.linalg.norm(fb.center - seed.centroid)) / hom.scale, 1e-6))
    clauses.append(Clause("hom.fb_aligned", poncelet.axis_alignment(fb, hom.outer), 1e-6))
    clauses.append(Clause("hom.hc_rotated", abs(1 - poncelet.axis_alignment(hc, hom.outer)), 1e-6))
    swap = float(np.abs(np.abs(fb.semi_axes) - np.abs(hc.semi_axes)).max() / np.abs(fb.semi_axes).max())
    clauses.append(Clause("hom.swapped_axes", swap, 1e-6))

    bro = poncelet.make_family("brocard", seed)
    R = bro.circumradius
    gap = max(bro.closure_gap(t) for t in bro.params(1000))
    clauses.append(Clause("bro.closure", gap / R, 1e-8))
    rep = poncelet.family_report(bro, 100)
    clauses.append(Clause("bro.omega", float(np.ptp([r.omega for r in rep])), 1e-9))
    clauses.append(Clause("bro.ratio", _spread([r.ratio for r in rep]), 1e-9))
    for k in ("X15", "X16", "X6"):
        clauses.append(Clause(f"bro.{k}", poncelet.point_spread([r.center_positions[k] for r in rep]) / R, 1e-8))
    clauses.append(Clause("bro.focal_centroid", poncelet.point_spread([r.focal_centroid for r in rep]) / R, 1e-8))
    clauses.append(Clause("bro.focal_area", _spread([r.focal_area / r.area for r in rep]), 1e-9))
    record(10, "Poncelet families", clauses)


# 11


def test_criterion_11_zero_area_loci():
    A, B = np.array([0.0, 0.0]), np.array([4.0, 0.0])
    (oc, rc), _ = hexgrid.zero_area_locus_C(A, B)
    base = np.arctan2(*(oc - (A + B) / 2)[::-1]) + np.pi
    worst_c = 0.0
    for s in np.linspace(-0.9, 0.9, 20) * np.pi / 3:
        C = oc + rc * np.array([np.cos(base + s), np.sin(base + s)])
        tri = Triangle.ccw(A, B, C)
        f = hexgrid.flank_of(tri, "ABC"[list(tri.perm).index(2)])
        worst_c = max(worst_c, abs(f.signed_area) / tri.diameter**2)
    Bp, Cp = np.array([4.0, 0.0]), np.array([0.0, 3.0])
    o2, r2 = hexgrid.zero_area_locus_F2(Bp, Cp)
    worst_f = 0.0
    flips = 0
    samples = hexgrid.locus_F2_samples(Bp, Cp, 20)
    for Ap in samples:
        tri = Triangle(Ap, Bp, Cp)
        worst_f = max(worst_f, abs(hexgrid.f2_signed_area(tri)) / tri.diameter**2)
        u = (Ap - o2) / r2
        inner = hexgrid.f2_signed_area(Triangle(o2 + (r2 - 1e-3 * r2) * u, Bp, Cp))
        outer = hexgrid.f2_signed_area(Triangle(o2 + (r2 + 1e-3 * r2) * u, Bp, Cp))
        flips += inner * outer < 0
    record(
        11,
        "zero-area loci",
        [Clause("C_flank_arc", worst_c, 1e-9), Clause("F2_circle", worst_f, 1e-9), Clause("sign_flip_missing", len(samples) - flips, 0.5)],
    )


# 12


def test_criterion_12_determinism(tmp_path):
    cmd = [sys.executable, "-m", "hexaweb", "verify", "--seed", "3,4,5", "--all"]
    t = time.perf_counter()
    outs = []
    for k in range(2):
        path = tmp_path / f"report{k}.json"
        subprocess.run(cmd + ["--json", str(path)], capture_output=True, text=True, timeout=120)
        outs.append(path.read_bytes() if path.exists() else b"")
    verify_time = time.perf_counter() - t
    same = float(outs[0] != outs[1] or not outs[0])
    record(
        12,
        "determinism and runtime",
        [Clause("json_differs", same, 0.5), Clause("verify_seconds", verify_time / 2, 10.0), Clause("suite_seconds", time.perf_counter() - T0, 60.0)],
    )


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
