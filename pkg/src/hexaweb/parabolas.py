"""The three confocal parabola webs of the hexagon grid.

Closed forms come from the shipped coefficient tables (see :mod:`tables`);
they are stated for the A-family and relabeled for B and C. The grid fit in
:func:`confocal_family` is the independent geometric path.

Relabeling convention: a permutation ``perm`` means the formula is evaluated
with sides ``(s[perm[0]], s[perm[1]], s[perm[2]])`` and its i-th coordinate
is read as coordinate ``perm[i]`` of the reference triangle. The cyclic
shifts ``(1, 2, 0)`` and ``(2, 0, 1)`` give the B- and C-families.
All formulas assume the reference triangle is counterclockwise (S > 0).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import centers, tables
from .conics import (
    BARYCENTRIC,
    Conic,
    Line,
    classify_conic,
    fit_conic,
    parabola_focus_directrix,
)
from .errors import (
    ConstructionFailed,
    DegenerateTriangle,
    EquilateralDegenerate,
    GeometryError,
    InsufficientGrid,
    NotAParabola,
    ParallelDirectrices,
    PointAtInfinity,
)
from .geometry import SQRT3, Triangle, bary_to_cartesian, circumcircle, intersect_lines
from .tolerances import tol

FAMILIES = ("A", "B", "C")
CYCLIC = {"A": (0, 1, 2), "B": (1, 2, 0), "C": (2, 0, 1)}

# skip-1 parabolas per grain: (odd, even) relabelings of the "through B" table
# and the seed vertex each one passes through
SKIP1 = {
    "A": (((0, 1, 2), "B"), ((0, 2, 1), "C")),
    "B": (((1, 2, 0), "C"), ((1, 0, 2), "A")),
    "C": (((2, 0, 1), "A"), ((2, 1, 0), "B")),
}


def reference_triangle(a: float, b: float, c: float) -> Triangle:
    tri = Triangle.from_sides(a, b, c)
    tri.require_nondegenerate()
    return tri


def _frame(a, b, c, tri):
    if tri is None:
        return reference_triangle(a, b, c)
    if tri.S <= 0:
        raise DegenerateTriangle("formulas need a counterclockwise reference triangle")
    if not np.allclose(tri.sides, (a, b, c), rtol=1e-12, atol=0):
        raise ValueError("reference triangle does not match the given sides")
    return tri


def _family(family: str) -> str:
    family = str(family).upper()
    if family not in FAMILIES:
        raise ValueError(f"family must be one of A, B, C, not {family!r}")
    return family


def relabeled_quadratic(obj: str, sides, S: float, perm) -> np.ndarray:
    sd = [sides[k] for k in perm]
    mp = tables.quadratic(obj, *sd, S)
    m = np.empty((3, 3))
    for i in range(3):
        for j in range(3):
            m[perm[i], perm[j]] = mp[i, j]
    return m


def relabeled_triple(obj: str, sides, S: float, perm) -> np.ndarray:
    sd = [sides[k] for k in perm]
    vp = tables.triple(obj, *sd, S)
    v = np.empty(3)
    v[list(perm)] = vp
    return v


def require_conditioned(a, b, c, threshold: float | None = None) -> None:
    """EquilateralDegenerate when |cot(omega) - sqrt(3)| is below ``threshold``."""
    if threshold is None:
        threshold = tol("conditioning")
    if centers.conditioning(a, b, c) < threshold:
        raise EquilateralDegenerate("X16 at infinity")


def a_parabola_conic(a: float, b: float, c: float, family: str = "A", tri: Triangle | None = None) -> Conic:
    """Barycentric conic of the family's parabola through the seed vertex."""
    family = _family(family)
    tri = _frame(a, b, c, tri)
    m = relabeled_quadratic("a_parabola", (a, b, c), tri.S, CYCLIC[family])
    return Conic(m, BARYCENTRIC, tri)


def skip1_parabolas(a: float, b: float, c: float, grain: str = "C", tri: Triangle | None = None):
    """(odd, even) skip-1 parabolas of one grain.

    On the C-grain the odd one passes through A and the even one through B.
    """
    grain = _family(grain)
    tri = _frame(a, b, c, tri)
    out = []
    for perm, _vertex in SKIP1[grain]:
        out.append(Conic(relabeled_quadratic("skip1_through_b", (a, b, c), tri.S, perm), BARYCENTRIC, tri))
    return tuple(out)


def skip1_vertices(grain: str = "C") -> tuple[str, str]:
    grain = _family(grain)
    return SKIP1[grain][0][1], SKIP1[grain][1][1]


def axis_infinity_point(a: float, b: float, c: float, family: str = "A") -> np.ndarray:
    """Barycentrics (summing to zero) of the family's axis direction."""
    family = _family(family)
    S = centers.conway_s(a, b, c)
    return relabeled_triple("axis_infinity_a", (a, b, c), S, CYCLIC[family])


def infinity_direction(tri: Triangle, bary) -> np.ndarray:
    """Unit Cartesian direction of a barycentric point at infinity."""
    u, v, w = np.asarray(bary, float)
    d = u * tri.A + v * tri.B + w * tri.C
    return d / np.linalg.norm(d)


def direction_bary(tri: Triangle, d) -> np.ndarray:
    """Barycentrics of the point at infinity in direction ``d``."""
    return np.linalg.solve(tri.frame, [d[0], d[1], 0.0])


def directrix_line(a: float, b: float, c: float, family: str = "A", tri: Triangle | None = None) -> Line:
    family = _family(family)
    tri = _frame(a, b, c, tri)
    l = relabeled_triple("directrix_a", (a, b, c), tri.S, CYCLIC[family])
    return Line(l, BARYCENTRIC, tri)


@dataclass(frozen=True)
class FocalEquilateral:
    fa: np.ndarray
    fb: np.ndarray
    fc: np.ndarray
    s: float  # from the closed form
    centroid: np.ndarray
    s_alt: float  # second closed form, through cot(omega)
    sides: tuple = ()
    x16: np.ndarray = field(default=None)

    @property
    def vertices(self) -> np.ndarray:
        return np.array([self.fa, self.fb, self.fc])

    @property
    def side_spread(self) -> float:
        s = np.asarray(self.sides)
        return float((s.max() - s.min()) / s.mean())

    @property
    def geometric_s(self) -> float:
        return float(np.mean(self.sides))

    @property
    def area(self) -> float:
        return float(np.sqrt(3.0) / 4 * self.geometric_s**2)


def focal_s2(a: float, b: float, c: float, S: float | None = None) -> tuple[float, float]:
    """Both closed forms of s^2: via the sidelengths and via cot(omega)."""
    if S is None:
        S = centers.conway_s(a, b, c)
    first = 3.0 / 32.0 * (a * a + b * b + c * c - 2 * S * SQRT3)
    cot = (a * a + b * b + c * c) / (2 * S)
    second = 3.0 / 16.0 * (cot - SQRT3) * S
    return first, second


def focal_triple(a: float, b: float, c: float, tri: Triangle | None = None, check: bool = True) -> FocalEquilateral:
    """Foci of the three families and the equilateral they form."""
    require_conditioned(a, b, c)
    tri = _frame(a, b, c, tri)
    S = tri.S
    foci = [bary_to_cartesian(tri, relabeled_triple("focus_a", (a, b, c), S, CYCLIC[f])) for f in FAMILIES]
    s2, s2_alt = focal_s2(a, b, c, S)
    sides = tuple(float(np.linalg.norm(foci[i] - foci[(i + 1) % 3])) for i in range(3))
    centroid = np.mean(foci, axis=0)
    x16 = centers.center_point(tri, "X16")
    out = FocalEquilateral(*foci, float(np.sqrt(s2)), centroid, float(np.sqrt(s2_alt)), sides, x16)
    if check:
        d = tri.diameter
        if out.side_spread > tol("relative"):
            raise ConstructionFailed(f"foci are not equilateral (spread {out.side_spread:.3e})")
        off = np.linalg.norm(centroid - x16) / d
        if off > tol("x16"):
            raise ConstructionFailed(f"focal centroid misses X16 by {off:.3e}")
    return out


def parabola_geometry(conic: Conic):
    return parabola_focus_directrix(conic.to_cartesian())


@dataclass(frozen=True)
class DirectrixEquilateral:
    vertices: np.ndarray  # A', B', C'
    s_prime: float  # measured
    centroid: np.ndarray
    x617: np.ndarray
    a_vertex_formula: np.ndarray
    s_prime_printed: float
    s_prime_closed: float
    parabola_vertices: np.ndarray  # V_a, V_b, V_c

    @property
    def sides(self) -> np.ndarray:
        v = self.vertices
        return np.array([np.linalg.norm(v[i] - v[(i + 1) % 3]) for i in range(3)])

    @property
    def side_spread(self) -> float:
        s = self.sides
        return float((s.max() - s.min()) / s.mean())

    @property
    def vertex_triangle_spread(self) -> float:
        v = self.parabola_vertices
        s = np.array([np.linalg.norm(v[i] - v[(i + 1) % 3]) for i in range(3)])
        return float((s.max() - s.min()) / s.mean())


def s_prime2_printed(a: float, b: float, c: float) -> float:
    """Side of the directrix equilateral squared, exactly as printed."""
    S = centers.conway_s(a, b, c)
    cot = (a * a + b * b + c * c) / (2 * S)
    cos2w = (cot * cot - 1) / (cot * cot + 1)
    return S / 4 * (5 * SQRT3 + 11 * cot + 16 * (SQRT3 + cot)) / (2 * cos2w - 1)


def s_prime2_closed(a: float, b: float, c: float) -> float:
    """Side of the directrix equilateral squared, from a fit of the measured side."""
    S = centers.conway_s(a, b, c)
    cot = (a * a + b * b + c * c) / (2 * S)
    return S * (27 * cot * cot - 6 * SQRT3 * cot + 1) / (4 * (cot - SQRT3))


def directrix_equilateral(a: float, b: float, c: float, tri: Triangle | None = None, check: bool = True) -> DirectrixEquilateral:
    """Triangle bounded by the three directrices.

    ``check`` enforces equilaterality and the X617 centroid. The agreement
    with the printed side formula is reported, not enforced.
    """
    require_conditioned(a, b, c)
    tri = _frame(a, b, c, tri)
    lines = {f: directrix_line(a, b, c, f, tri).to_cartesian().l for f in FAMILIES}
    verts = []
    for f, (g, h) in zip(FAMILIES, (("B", "C"), ("C", "A"), ("A", "B"))):
        try:
            verts.append(intersect_lines(lines[g], lines[h]))
        except PointAtInfinity as exc:
            raise ParallelDirectrices(f"directrices {g} and {h} are parallel") from exc
    verts = np.array(verts)
    centroid = verts.mean(axis=0)
    x617 = centers.center_point(tri, "X617")
    va = bary_to_cartesian(tri, tables.triple("directrix_vertex_a", a, b, c, tri.S))
    pverts = np.array([parabola_geometry(a_parabola_conic(a, b, c, f, tri)).vertex for f in FAMILIES])
    s_meas = [np.linalg.norm(verts[i] - verts[(i + 1) % 3]) for i in range(3)]
    printed = s_prime2_printed(a, b, c)
    out = DirectrixEquilateral(
        verts,
        float(np.mean(s_meas)),
        centroid,
        x617,
        va,
        float(np.sqrt(printed)) if printed > 0 else float("nan"),
        float(np.sqrt(s_prime2_closed(a, b, c))),
        pverts,
    )
    if check:
        d = tri.diameter
        if out.side_spread > tol("relative"):
            raise ConstructionFailed(f"directrix triangle is not equilateral ({out.side_spread:.3e})")
        off = np.linalg.norm(centroid - x617) / d
        if off > tol("x16"):
            raise ConstructionFailed(f"directrix centroid misses X617 by {off:.3e}")
    return out


@dataclass
class ParabolaWeb:
    family: str
    members: list  # Cartesian conics fitted to the rows
    focus: np.ndarray
    axis: Line
    infinity_point: np.ndarray
    offsets: list
    foci: np.ndarray
    fit_residuals: list
    row_points: list

    @property
    def focus_spread(self) -> float:
        """Largest distance of a member focus from the mean focus (absolute)."""
        return float(np.linalg.norm(self.foci - self.focus, axis=1).max())


def confocal_family(grid, family: str, min_points: int = 6, min_rows: int = 3) -> ParabolaWeb:
    """Fit one parabola per row of the family's grain and collect the foci."""
    family = _family(family)
    offsets = grid.row_offsets(family, min_points=min_points)
    if len(offsets) < min_rows:
        raise InsufficientGrid(f"{len(offsets)} usable rows along the {family}-grain, need {min_rows}")
    d = grid.diameter
    members, foci, residuals, rows, dirs = [], [], [], [], []
    for off in offsets:
        pts = grid.antipodal_sequence(family, off)
        conic, res = fit_conic(pts, return_residual=True)
        if classify_conic(conic, tol=tol("classify"), scale=d) != "parabola":
            raise NotAParabola(f"row {off} of the {family}-grain fits a {classify_conic(conic, scale=d)}")
        geom = parabola_focus_directrix(conic)
        members.append(conic)
        foci.append(geom.focus)
        residuals.append(res)
        rows.append(pts)
        u = geom.axis_direction
        if dirs and u @ dirs[0] < 0:
            u = -u
        dirs.append(u)
    foci = np.array(foci)
    focus = foci.mean(axis=0)
    u = np.mean(dirs, axis=0)
    u /= np.linalg.norm(u)
    axis = Line(np.array([-u[1], u[0], u[1] * focus[0] - u[0] * focus[1]]))
    return ParabolaWeb(family, members, focus, axis, direction_bary(grid.seed, u), offsets, foci, residuals, rows)


def axis_angles(webs) -> np.ndarray:
    """Pairwise angles between family axes, each in [0, pi)."""
    dirs = [w.axis.direction for w in webs]
    out = []
    for i in range(len(dirs)):
        for j in range(i + 1, len(dirs)):
            ang = np.arctan2(dirs[i][0] * dirs[j][1] - dirs[i][1] * dirs[j][0], dirs[i] @ dirs[j])
            out.append(ang % np.pi)
    return np.array(out)


def row_shape_statistics(grid, family: str) -> list[dict]:
    """Per-triangle shape vs. distance to the family focus.

    Shape is circumradius over the equilateral circumradius for the same
    sum of squared sides; 1 means equilateral. Nothing is asserted.
    """
    family = _family(family)
    seed = grid.seed
    focus = bary_to_cartesian(seed, relabeled_triple("focus_a", seed.sides, seed.S, CYCLIC[family]))
    rows = []
    for key in grid.triangle_keys():
        tri = grid.triangle(key)
        try:
            _, R = circumcircle(tri.A, tri.B, tri.C)
        except GeometryError:
            continue
        a, b, c = tri.sides
        ref = np.sqrt(a * a + b * b + c * c) / 3
        rows.append(
            {
                "key": key,
                "distance": float(np.linalg.norm(tri.centroid - focus) / grid.diameter),
                "circumradius_ratio": float(R / ref),
            }
        )
    rows.sort(key=lambda r: r["distance"])
    return rows
