"""Regular hexagons erected on triangles, flanks, and the contiguous grid.

Grid combinatorics are those of the trihexagonal tiling: hexagons sit on the
sites ``(i, j)`` of a triangular lattice and every lattice triangle holds one
(deformed) triangle. Lattice directions are indexed counterclockwise::

    k:   0       1       2        3        4        5
    d: (1, 0)  (0, 1)  (-1, 1)  (-1, 0)  (0, -1)  (1, -1)

Vertex ``k`` of the hexagon at site ``s`` is the vertex it shares with the
hexagon at ``s + d_k`` (there it is vertex ``k + 3``). The triangle on side
``(v_k, v_{k+1})`` of hexagon ``s`` has apex ``E(s + d_k, s + d_{k+1})``.

The seed triangle ABC (counterclockwise) is ``up(0, 0)``: A is shared by
hexagons (0,0) and (1,0), B by (1,0) and (0,1), C by (0,0) and (0,1).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from . import centers
from .conics import Conic, classify_conic, central_conic_geometry, fit_conic, is_rectangular
from .errors import (
    ClosureViolation,
    CoincidentPoints,
    DegenerateFit,
    DegenerateSeed,
    EquilateralDegenerate,
    GeometryError,
    PAtCenter,
    PExterior,
    RankDeficient,
)
from .geometry import (
    Triangle,
    angle_at,
    intersect_lines,
    line_distance,
    line_through,
    polygon_area,
    reflect,
    rotation,
    signed_area,
)

DIRS = ((1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1))
R60 = rotation(np.pi / 3)
HEX_AREA = 1.5 * np.sqrt(3.0)  # area of a regular hexagon with unit side


def _step(site, k):
    d = DIRS[k % 6]
    return (site[0] + d[0], site[1] + d[1])


@dataclass(frozen=True, eq=False)
class Hexagon:
    """Six vertices in cyclic order (either orientation)."""

    v: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "v", np.asarray(self.v, float).reshape(6, 2))

    @property
    def center(self) -> np.ndarray:
        return self.v.mean(axis=0)

    @property
    def side(self) -> float:
        return float(np.linalg.norm(self.v[1] - self.v[0]))

    @property
    def area(self) -> float:
        return abs(polygon_area(self.v))

    def regularity(self) -> tuple[float, float]:
        """(relative side spread, max interior angle deviation from 2pi/3)."""
        sides = np.linalg.norm(np.roll(self.v, -1, axis=0) - self.v, axis=1)
        angles = [angle_at(self.v[i], self.v[i - 1], self.v[(i + 1) % 6]) for i in range(6)]
        return float(np.ptp(sides) / sides.mean()), float(np.abs(np.array(angles) - 2 * np.pi / 3).max())

    def is_regular(self, eps: float = 1e-9) -> bool:
        spread, dev = self.regularity()
        return spread < eps and dev < eps


def hexagon_from_edge(p, q, start: int = 0) -> np.ndarray:
    """Counterclockwise regular hexagon with ``v[start] = p`` and ``v[start+1] = q``."""
    p, q = np.asarray(p, float), np.asarray(q, float)
    if np.array_equal(p, q):
        raise CoincidentPoints("hexagon edge endpoints coincide")
    center = p + R60 @ (q - p)
    out = np.empty((6, 2))
    r = p - center
    for m in range(6):
        out[(start + m) % 6] = center + rotation(m * np.pi / 3) @ r
    return out


def erect_hexagon(p, q, orientation: str = "right") -> Hexagon:
    """Regular hexagon with first side p -> q, on the chosen side of that edge.

    Vertices are listed in generation order starting ``p, q``; a "right"
    hexagon therefore runs clockwise.
    """
    if orientation not in ("left", "right"):
        raise ValueError("orientation must be 'left' or 'right'")
    p, q = np.asarray(p, float), np.asarray(q, float)
    if np.array_equal(p, q):
        raise CoincidentPoints("hexagon edge endpoints coincide")
    turn = rotation(np.pi / 3 if orientation == "left" else -np.pi / 3)
    v = [p, q]
    for _ in range(4):
        v.append(v[-1] + turn @ (v[-1] - v[-2]))
    return Hexagon(np.array(v))


class FlankTriangle(NamedTuple):
    apex: np.ndarray
    base1: np.ndarray
    base2: np.ndarray
    parent_hexagons: tuple
    signed_area: float

    @property
    def triangle(self) -> Triangle:
        return Triangle(self.apex, self.base1, self.base2)


def flank_of(tri: Triangle, vertex: str) -> FlankTriangle:
    """Flank at a vertex of a counterclockwise triangle with outward hexagons.

    Vertex order (apex, base1, base2) is counterclockwise for a non-eversed
    flank, so ``signed_area`` changes sign exactly when the reference angle
    at ``vertex`` passes 2pi/3.
    """
    tri.require_nondegenerate()
    if tri.S < 0:
        tri = Triangle.ccw(tri.A, tri.B, tri.C)
    grid = HexGrid(tri)
    key = FLANK_KEYS[vertex]
    v = grid.triangle_vertices(key)
    apex_pos = {"A": 2, "B": 0, "C": 1}[vertex]
    order = [apex_pos, (apex_pos + 1) % 3, (apex_pos + 2) % 3]
    apex, b1, b2 = (v[i] for i in order)
    return FlankTriangle(apex, b1, b2, grid.triangle_sites(key)[:2], signed_area(apex, b1, b2))


def triangle_sites(key):
    i, j, kind = key
    if kind == "up":
        return ((i, j), (i + 1, j), (i, j + 1))
    return ((i + 1, j), (i, j + 1), (i + 1, j + 1))


# flank keys of the seed triangle
FLANK_KEYS = {"A": (0, -1, "down"), "B": (0, 0, "down"), "C": (-1, 0, "down")}
SEED_KEY = (0, 0, "up")


def hex_distance(s, t) -> int:
    dq, dr = s[0] - t[0], s[1] - t[1]
    return (abs(dq) + abs(dr) + abs(dq + dr)) // 2


SEED_SITES = ((0, 0), (1, 0), (0, 1))


@dataclass
class HexGrid:
    """Hexagons and triangles grown from a counterclockwise seed triangle.

    Construction mutates ``hexagons``; treat the grid as read-only afterwards.
    ``closure_gaps`` holds, for every vertex reached along a second path, the
    distance between the two computed positions.
    """

    seed: Triangle
    hexagons: dict = field(default_factory=dict)
    closure_gaps: list = field(default_factory=list)
    rings: int = 0
    eps: float = 1e-9

    def __post_init__(self):
        if self.seed.is_degenerate():
            raise DegenerateSeed("seed triangle is degenerate")
        if self.seed.S < 0:
            raise DegenerateSeed("seed triangle must be counterclockwise (use Triangle.ccw)")
        if not self.hexagons:
            A, B, C = self.seed.A, self.seed.B, self.seed.C
            self.hexagons[(0, 0)] = hexagon_from_edge(A, C, 0)
            self.hexagons[(1, 0)] = hexagon_from_edge(B, A, 2)
            self.hexagons[(0, 1)] = hexagon_from_edge(C, B, 4)

    @property
    def diameter(self) -> float:
        return self.seed.diameter

    def edge_vertex(self, s, k) -> np.ndarray:
        """Vertex shared by the hexagons at ``s`` and ``s + d_k``."""
        if s in self.hexagons:
            return self.hexagons[s][k % 6]
        t = _step(s, k)
        if t in self.hexagons:
            return self.hexagons[t][(k + 3) % 6]
        raise KeyError(f"neither hexagon {s} nor {t} is built")

    def has_edge_vertex(self, s, k) -> bool:
        return s in self.hexagons or _step(s, k) in self.hexagons

    def _build(self, site) -> bool:
        for k in range(6):
            n0, n1 = _step(site, k), _step(site, k + 1)
            if n0 in self.hexagons and n1 in self.hexagons:
                p = self.hexagons[n0][(k + 3) % 6]
                q = self.hexagons[n1][(k + 4) % 6]
                hexagon = hexagon_from_edge(p, q, k)
                for m in range(6):
                    nb = _step(site, m)
                    if nb in self.hexagons and m not in (k, (k + 1) % 6):
                        gap = float(np.linalg.norm(hexagon[m] - self.hexagons[nb][(m + 3) % 6]))
                        self.closure_gaps.append(gap)
                        if gap > self.eps * self.diameter:
                            raise ClosureViolation(
                                f"hexagon {site} misses neighbor {nb} by {gap:.3e}"
                            )
                self.hexagons[site] = hexagon
                return True
        return False

    def grow(self, rings: int) -> HexGrid:
        if rings < 0:
            raise ValueError("rings must be >= 0")
        targets = sorted(
            (
                (i, j)
                for i in range(-rings - 1, rings + 3)
                for j in range(-rings - 1, rings + 3)
                if min(hex_distance((i, j), s) for s in SEED_SITES) <= rings
            ),
            key=lambda s: (min(hex_distance(s, t) for t in SEED_SITES), s),
        )
        pending = [s for s in targets if s not in self.hexagons]
        while pending:
            progressed = [s for s in pending if self._build(s)]
            if not progressed:
                raise ClosureViolation(f"cannot reach sites {pending[:3]}...")
            pending = [s for s in pending if s not in self.hexagons]
        self.rings = max(self.rings, rings)
        return self

    def hexagon(self, site) -> Hexagon:
        return Hexagon(self.hexagons[site])

    triangle_sites = staticmethod(triangle_sites)

    def triangle_vertices(self, key) -> np.ndarray:
        """The three vertices in counterclockwise lattice order."""
        i, j, kind = key
        if kind == "up":
            s = (i, j)
            return np.array([self.edge_vertex(s, 0), self.edge_vertex((i + 1, j), 2), self.edge_vertex(s, 1)])
        s = (i + 1, j)
        return np.array([self.edge_vertex(s, 2), self.edge_vertex(s, 1), self.edge_vertex((i, j + 1), 0)])

    def triangle_keys(self) -> list:
        """Every lattice triangle with at least two built hexagons (all vertices known)."""
        keys = set()
        for (i, j) in self.hexagons:
            for di in (-1, 0):
                for dj in (-1, 0):
                    for kind in ("up", "down"):
                        key = (i + di, j + dj, kind)
                        if sum(s in self.hexagons for s in triangle_sites(key)) >= 2:
                            keys.add(key)
        return sorted(keys, key=lambda k: (k[2] != "up", k[0], k[1]))

    def triangle(self, key) -> Triangle:
        return Triangle(*self.triangle_vertices(key))

    def flank(self, key) -> FlankTriangle:
        v = self.triangle_vertices(key)
        return FlankTriangle(v[0], v[1], v[2], triangle_sites(key), signed_area(*v))

    def triangles(self) -> dict:
        return {key: self.triangle(key) for key in self.triangle_keys()}

    # rows of hexagons touching at antipodal vertices, one grain per seed vertex
    GRAINS = {"A": 0, "C": 1, "B": 2}

    def row_sites(self, family: str, offset: int) -> list:
        """Built sites of one row along a grain, in order along the grain.

        ``offset`` indexes rows: A-grain rows have constant j, C-grain rows
        constant i, B-grain rows constant i + j - 1 (so offset 0 holds the
        seed vertex of that name).
        """
        if family == "A":
            sites = [s for s in self.hexagons if s[1] == offset]
            sites.sort()
        elif family == "C":
            sites = [s for s in self.hexagons if s[0] == offset]
            sites.sort(key=lambda s: s[1])
        else:
            sites = [s for s in self.hexagons if s[0] + s[1] - 1 == offset]
            sites.sort(key=lambda s: s[1])
        return sites

    def antipodal_sequence(self, family: str, offset: int = 0) -> np.ndarray:
        """Shared vertices U_i along a row (the points on one parabola of the family)."""
        k = self.GRAINS[family]
        sites = self.row_sites(family, offset)
        if not sites:
            return np.empty((0, 2))
        pts = [self.edge_vertex(sites[0], k + 3)]
        pts += [self.edge_vertex(s, k) for s in sites]
        return np.array(pts)

    # side-vertex slots for the skip-1 sequences of each grain, keyed by the
    # seed vertex that sits on the sequence of row offset 0
    SKIP_SLOTS = {"A": {"C": 1, "B": 2}, "B": {"A": 3, "C": 4}, "C": {"A": 0, "B": 5}}

    def skip1_sequence(self, family: str, through: str, offset: int = 0) -> np.ndarray:
        slot = self.SKIP_SLOTS[family][through]
        return np.array([self.hexagons[s][slot] for s in self.row_sites(family, offset)])

    def row_offsets(self, family: str, min_points: int = 6) -> list:
        out = []
        for off in range(-self.rings - 3, self.rings + 4):
            if len(self.antipodal_sequence(family, off)) >= min_points:
                out.append(off)
        return out


def grow_grid(seed: Triangle, rings: int, eps: float = 1e-9) -> HexGrid:
    if seed.is_degenerate():
        raise DegenerateSeed("seed triangle is degenerate")
    if seed.S < 0:
        seed = Triangle.ccw(seed.A, seed.B, seed.C)
    return HexGrid(seed, eps=eps).grow(rings)


def conserved_quantity(tri: Triangle) -> float:
    """a^2 + b^2 + c^2 - 2 sqrt(3) S, with S signed by vertex order."""
    a, b, c = tri.sides
    return a * a + b * b + c * c - 2 * np.sqrt(3.0) * tri.S


def flank_x16_report(grid: HexGrid, tol: float = 1e-8, quality: float = 1e-6) -> list[dict]:
    """Per-triangle X16 distance to the seed's X16.

    X16 uses the signed lattice orientation so that eversed flanks are
    treated consistently with their non-eversed neighbors.
    """
    ref = centers.center_point(grid.seed, "X16")
    d = grid.diameter
    rows = []
    for key in grid.triangle_keys():
        tri = grid.triangle(key)
        row = {"key": key, "signed_area": tri.S / 2, "eversed": tri.S < 0}
        try:
            q = centers.x16_quality(*tri.sides, S=tri.S)
            x16 = centers.center_point(tri, "X16", oriented=True)
        except GeometryError as exc:
            row.update(well_conditioned=False, distance=float("nan"), passed=False, error=str(exc))
            rows.append(row)
            continue
        dist = float(np.linalg.norm(x16 - ref)) / d
        row.update(well_conditioned=q >= quality, distance=dist, passed=dist < tol, x16=x16)
        rows.append(row)
    return rows


def reflect_apices_check(tri: Triangle) -> tuple[np.ndarray, float]:
    """Reflect the apexes of the six triangles around the hexagon on BC about their bases.

    Returns the reflection of A about BC and the largest distance of any
    reflected apex from it.
    """
    grid = grow_grid(tri, 1)
    site = (0, 1)  # hexagon on BC
    target = reflect(grid.seed.A, np.array([grid.seed.B, grid.seed.C]))
    spread = 0.0
    for k in range(6):
        base1 = grid.edge_vertex(site, k)
        base2 = grid.edge_vertex(site, k + 1)
        apex = grid.edge_vertex(_step(site, k), k + 2)
        r = reflect(apex, np.array([base1, base2]))
        spread = max(spread, float(np.linalg.norm(r - target)))
    return target, spread


def snap_check(tri: Triangle) -> tuple[float, float]:
    """|CE| / |AC| and the angle ECA for the closure walk around the hexagon on BC.

    Starting from the hexagons on BC and AB, four more hexagons are erected
    around the one on BC without ever building the hexagon on AC. E is the
    vertex of the last one that the hexagon on AC must meet.
    """
    seed = tri if tri.S > 0 else Triangle.ccw(tri.A, tri.B, tri.C)
    probe = HexGrid(seed)
    walk = HexGrid(seed, hexagons={s: probe.hexagons[s] for s in ((0, 1), (1, 0))})
    for site in ((1, 1), (0, 2), (-1, 2), (-1, 1)):
        if not walk._build(site):
            raise ClosureViolation(f"walk cannot reach {site}")
    E = walk.hexagons[(-1, 1)][5]
    A, C = seed.A, seed.C
    ratio = float(np.linalg.norm(E - C) / np.linalg.norm(A - C))
    return ratio, angle_at(C, E, A)


def _required_center(kind):
    return centers.parse_kind(kind)


class SatelliteConstruction(NamedTuple):
    apexes: np.ndarray  # (6, 2): apex of F_i, the first one is P
    satellites: list  # FlankTriangle per side Q_i Q_{i+1}
    hexagons: list  # (6, 6, 2) arrays, lattice-ordered
    closure_gap: float


def _ccw_vertices(h: Hexagon) -> np.ndarray:
    v = h.v
    if polygon_area(v) < 0:
        raise GeometryError("central hexagon must be listed counterclockwise")
    return v


def satellites(h: Hexagon, p) -> SatelliteConstruction:
    """Six satellites around ``h`` starting from F1 = (Q1, Q2, P).

    ``h.v`` must be counterclockwise; Q_i is ``h.v[i-1]``. Satellite areas are
    signed so that an apex outside ``h`` next to its base counts positive.
    """
    q = _ccw_vertices(h)
    p = np.asarray(p, float)
    apex = p
    apexes, sats, hexes = [], [], []
    for i in range(6):
        q0, q1 = q[i], q[(i + 1) % 6]
        apexes.append(apex)
        sats.append(FlankTriangle(apex, q0, q1, ("H", f"H{i + 1}"), signed_area(q1, q0, apex)))
        # hexagon at site s + d_{i+1}: Q_{i+2} is its vertex i+4, the apex vertex i+5
        hx = hexagon_from_edge(q1, apex, (i + 4) % 6)
        hexes.append(hx)
        apex = hx[(i + 3) % 6]
    gap = float(np.linalg.norm(apex - p))
    return SatelliteConstruction(np.array(apexes), sats, hexes, gap)


def satellite_area_sum(h: Hexagon, p) -> float:
    return float(sum(s.signed_area for s in satellites(h, p).satellites))


def satellite_hex_area_sum(h: Hexagon, p) -> float:
    """Total area of the six auxiliary hexagons erected on the satellites."""
    con = satellites(h, p)
    return float(sum(HEX_AREA * np.sum((hx[1] - hx[0]) ** 2) for hx in con.hexagons))


def satellite_center(h: Hexagon) -> np.ndarray:
    """O: intersection of lines Q3Q2 and Q6Q1."""
    q = _ccw_vertices(h)
    return intersect_lines(line_through(q[2], q[1]), line_through(q[5], q[0]))


def apex_conic_residual(h: Hexagon, p) -> float:
    """Residual of the sixth apex against the conic through the other five.

    Measured in coordinates scaled to the hexagon's diameter.
    """
    apexes = satellites(h, p).apexes
    d = 2 * h.side
    conic = fit_conic(apexes[:5])
    return conic.residual(apexes[5], scale=d)


def second_level_flanks(h: Hexagon, p) -> list[FlankTriangle]:
    """The six flanks nestled between consecutive satellite hexagons."""
    con = satellites(h, p)
    out = []
    for i in range(6):
        prev, cur = con.hexagons[i - 1], con.hexagons[i]
        # hexagon i sits at s + d_{i+1}, hexagon i-1 at s + d_i; they share apex_i
        a = con.apexes[i]
        b1 = prev[(i + 1) % 6]
        b2 = cur[i % 6]
        out.append(FlankTriangle(a, b1, b2, (f"H{i}", f"H{i + 1}"), signed_area(a, b1, b2)))
    return out


def second_level_hexagon(h: Hexagon, p, kind) -> np.ndarray:
    """Hexagon of a center of the six second-level flanks (6 points)."""
    kind = centers.parse_kind(kind)
    pts = []
    for f in second_level_flanks(h, p):
        tri = f.triangle
        tri.require_nondegenerate()
        pts.append(centers.center_point(tri, kind, oriented=True))
    return np.array(pts)


def polygon_angles(pts) -> np.ndarray:
    """Signed turning-consistent interior angles of a closed polygon, in radians."""
    pts = np.asarray(pts, float)
    n = len(pts)
    out = np.empty(n)
    for i in range(n):
        u = pts[i - 1] - pts[i]
        v = pts[(i + 1) % n] - pts[i]
        out[i] = np.arctan2(u[0] * v[1] - u[1] * v[0], u @ v)
    return out


def angle_gap(a, b) -> float:
    """Largest difference of two angle lists modulo pi.

    Along the Euler line an edge of the second-level hexagon can shrink
    through zero length, which reverses it and moves the signed vertex angle
    by pi while the side lines stay put.
    """
    d = (np.asarray(a, float) - np.asarray(b, float)) % np.pi
    return float(np.minimum(d, np.pi - d).max())


def inner_triangles(h: Hexagon, p) -> list[Triangle]:
    v = _ccw_vertices(h)
    return [Triangle(v[i], v[(i + 1) % 6], p) for i in range(6)]


def inner_x14_line(h: Hexagon, p, eps: float = 1e-12):
    """Line PO and the six inner-triangle X14 (distances relative to diameter).

    Each inner triangle keeps the orientation (Q_i, Q_{i+1}, P); for P outside
    ``h`` some of them are clockwise and their signed X14 is the geometric X13.
    """
    o = h.center
    p = np.asarray(p, float)
    d = 2 * h.side
    if np.linalg.norm(p - o) < eps * d:
        raise PAtCenter("line PO is undefined for P at the hexagon center")
    line = line_through(p, o)
    pts = np.array([centers.center_point(t, "X14", oriented=True) for t in inner_triangles(h, p)])
    dist = np.array([line_distance(x, line) for x in pts]) / d
    return line, pts, dist


def point_in_polygon(p, poly) -> bool:
    poly = np.asarray(poly, float)
    inside = False
    n = len(poly)
    for i in range(n):
        (x1, y1), (x2, y2) = poly[i], poly[(i + 1) % n]
        if (y1 > p[1]) != (y2 > p[1]):
            x = x1 + (p[1] - y1) * (x2 - x1) / (y2 - y1)
            if x > p[0]:
                inside = not inside
    return inside


def reflected_triangles(h: Hexagon, p) -> list[Triangle]:
    v = h.v
    out = []
    for i in range(6):
        b1, b2 = v[i], v[(i + 1) % 6]
        out.append(Triangle(b1, b2, reflect(p, np.array([b1, b2]))))
    return out


class HyperbolaReport(NamedTuple):
    conic: Conic
    points: np.ndarray
    sixth_residual: float
    kind: str
    trace: float
    center_offset: float


def reflected_x14_hyperbola(h: Hexagon, p, check: bool = True) -> HyperbolaReport:
    """Conic through the X14 of the six reflected triangles.

    Requires P interior to ``h`` (``PExterior`` otherwise, unless
    ``check=False``). A symmetric point set at P = O raises ``DegenerateFit``.
    """
    p = np.asarray(p, float)
    if check and not point_in_polygon(p, h.v):
        raise PExterior("P must be interior to the hexagon")
    d = 2 * h.side
    if np.linalg.norm(p - h.center) < 1e-9 * d:
        raise DegenerateFit("P at the hexagon center: the six X14 are a symmetric orbit")
    pts = np.array([centers.center_point(t, "X14") for t in reflected_triangles(h, p)])
    try:
        conic = fit_conic(pts[:5])
    except RankDeficient as exc:
        raise DegenerateFit(str(exc)) from exc
    res = conic.residual(pts[5], scale=d)
    kind = classify_conic(conic, scale=d)
    trace = is_rectangular(conic)
    try:
        offset = float(np.linalg.norm(central_conic_geometry(conic).center - h.center)) / d
    except GeometryError:
        offset = float("inf")
    return HyperbolaReport(conic, pts, res, kind, trace, offset)


def zero_area_locus_C(a_pt, b_pt) -> list[tuple[np.ndarray, float]]:
    """Both circles on which C makes the C-flank degenerate (angle ACB = 2pi/3).

    Each is centered on the centroid of an equilateral erected on AB (one per
    side) with radius |OA|.
    """
    a_pt, b_pt = np.asarray(a_pt, float), np.asarray(b_pt, float)
    if np.array_equal(a_pt, b_pt):
        raise CoincidentPoints("A and B coincide")
    out = []
    for sign in (1.0, -1.0):
        apex = a_pt + rotation(sign * np.pi / 3) @ (b_pt - a_pt)
        o = (a_pt + b_pt + apex) / 3
        out.append((o, float(np.linalg.norm(o - a_pt))))
    return out


def zero_area_locus_F2(b_pt, c_pt) -> tuple[np.ndarray, float]:
    """Circle on which A makes the second flank F2 degenerate.

    Circumcircle of the equilateral with base B and the midpoint of BC, on the
    side of BC where a counterclockwise A lies.
    """
    b_pt, c_pt = np.asarray(b_pt, float), np.asarray(c_pt, float)
    if np.array_equal(b_pt, c_pt):
        raise CoincidentPoints("B and C coincide")
    m = (b_pt + c_pt) / 2
    apex = b_pt + rotation(np.pi / 3) @ (m - b_pt)
    o = (b_pt + m + apex) / 3
    return o, float(np.linalg.norm(o - b_pt))


def locus_F2_samples(b_pt, c_pt, n: int = 20) -> np.ndarray:
    """``n`` points of the F2 circle lying where A keeps ABC counterclockwise."""
    o, r = zero_area_locus_F2(b_pt, c_pt)
    b_pt, c_pt = np.asarray(b_pt, float), np.asarray(c_pt, float)
    # the arc left of B->C runs from the midpoint M around to B
    m = (b_pt + c_pt) / 2
    t_m = np.arctan2(*(m - o)[::-1])
    t_b = np.arctan2(*(b_pt - o)[::-1])
    span = (t_b - t_m) % (2 * np.pi)
    ts = t_m + span * (np.arange(n) + 0.5) / n
    return o + r * np.column_stack([np.cos(ts), np.sin(ts)])


def f2_signed_area(tri: Triangle) -> float:
    """Signed area of F2 (hexagons on AC and BA, flank F1 at A, hexagon on F1, then F2)."""
    if tri.S < 0:
        raise DegenerateSeed("triangle must be counterclockwise")
    grid = HexGrid(tri)
    grid._build((1, -1))
    v = grid.triangle_vertices((1, -1, "up"))
    return signed_area(*v)


def flank_apex_angle(tri: Triangle, vertex: str) -> float:
    """Signed apex angle of a flank (negative when eversed)."""
    f = flank_of(tri, vertex)
    u, v = f.base1 - f.apex, f.base2 - f.apex
    return float(np.arctan2(u[0] * v[1] - u[1] * v[0], u @ v))


def require_not_equilateral(tri: Triangle, threshold: float = 1e-4) -> None:
    if centers.conditioning(*tri.sides) < threshold:
        raise EquilateralDegenerate("X16 at infinity")
