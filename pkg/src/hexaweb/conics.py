"""General conics as symmetric 3x3 forms, fitting, and metric extraction.

A Cartesian conic acts on ``(x, y, 1)``; a barycentric conic acts on
``(u, v, w)`` relative to a reference triangle. Metric queries (foci,
directrix, axes) are only defined on Cartesian conics, so barycentric ones
must go through :meth:`Conic.to_cartesian` first.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import DegenerateFit, GeometryError, NotAParabola, RankDeficient
from .geometry import Triangle

CARTESIAN = "cartesian"
BARYCENTRIC = "barycentric"


@dataclass(frozen=True, eq=False)
class Conic:
    m: np.ndarray
    frame: str = CARTESIAN
    triangle: Triangle | None = None

    def __post_init__(self):
        m = np.asarray(self.m, float)
        object.__setattr__(self, "m", (m + m.T) / 2)
        if self.frame == BARYCENTRIC and self.triangle is None:
            raise ValueError("barycentric conic needs its reference triangle")

    @classmethod
    def from_coeffs(cls, A, B, C, D, E, F) -> Conic:
        """Cartesian conic A x^2 + B xy + C y^2 + D x + E y + F = 0."""
        return cls(np.array([[A, B / 2, D / 2], [B / 2, C, E / 2], [D / 2, E / 2, F]]))

    @classmethod
    def from_bary_coeffs(cls, tri: Triangle, xx, yy, zz, xy, xz, yz) -> Conic:
        m = np.array([[xx, xy / 2, xz / 2], [xy / 2, yy, yz / 2], [xz / 2, yz / 2, zz]])
        return cls(m, BARYCENTRIC, tri)

    @property
    def coeffs(self) -> np.ndarray:
        """Cartesian 6-vector (A, B, C, D, E, F)."""
        self._require_cartesian()
        m = self.m
        return np.array([m[0, 0], 2 * m[0, 1], m[1, 1], 2 * m[0, 2], 2 * m[1, 2], m[2, 2]])

    def _require_cartesian(self):
        if self.frame != CARTESIAN:
            raise ValueError("metric query on a barycentric conic; call to_cartesian() first")

    def to_cartesian(self) -> Conic:
        if self.frame == CARTESIAN:
            return self
        tinv = np.linalg.inv(self.triangle.frame)
        return Conic(tinv.T @ self.m @ tinv)

    def normalized(self) -> Conic:
        return Conic(self.m / np.abs(self.m).max(), self.frame, self.triangle)

    def __call__(self, p) -> float:
        """Raw algebraic value at a Cartesian point or barycentric triple."""
        h = np.asarray(p, float)
        if self.frame == CARTESIAN:
            h = np.array([h[0], h[1], 1.0])
        return float(h @ self.m @ h)

    def residual(self, p, scale: float = 1.0) -> float:
        """Algebraic residual in unit-``scale`` coordinates, largest coefficient 1."""
        c = self.to_cartesian().scaled(1.0 / scale).normalized()
        return abs(c(np.asarray(p, float) / scale))

    def scaled(self, k: float) -> Conic:
        """Image of a Cartesian conic under p -> k p."""
        self._require_cartesian()
        s = np.diag([1.0 / k, 1.0 / k, 1.0])
        return Conic(s @ self.m @ s)

    def transformed(self, affine: np.ndarray) -> Conic:
        """Image under the 3x3 homogeneous map ``affine``."""
        self._require_cartesian()
        inv = np.linalg.inv(affine)
        return Conic(inv.T @ self.m @ inv)

    @property
    def quadratic(self) -> np.ndarray:
        self._require_cartesian()
        return self.m[:2, :2]

    def discriminant(self) -> float:
        """B^2 - 4AC with the quadratic part scaled to max |coefficient| 1."""
        A, B, C = self.coeffs[:3]
        k = max(abs(A), abs(B), abs(C))
        if k == 0:
            return 0.0
        return (B * B - 4 * A * C) / (k * k)

    def distance(self, other: Conic) -> float:
        """Normalized coefficient distance, insensitive to scale and sign."""
        u = self.m.ravel() / np.linalg.norm(self.m)
        v = other.m.ravel() / np.linalg.norm(other.m)
        return float(min(np.linalg.norm(u - v), np.linalg.norm(u + v)))


@dataclass(frozen=True)
class Line:
    """Homogeneous line; Cartesian flavor means l0 x + l1 y + l2 = 0."""

    l: np.ndarray
    frame: str = CARTESIAN
    triangle: Triangle | None = None

    def __post_init__(self):
        object.__setattr__(self, "l", np.asarray(self.l, float))

    def to_cartesian(self) -> Line:
        if self.frame == CARTESIAN:
            return self
        return Line(np.linalg.solve(self.triangle.frame.T, self.l))

    @property
    def direction(self) -> np.ndarray:
        c = self.to_cartesian().l
        d = np.array([-c[1], c[0]])
        return d / np.linalg.norm(d)

    def distance_to(self, p) -> float:
        c = self.to_cartesian().l
        return abs(c[0] * p[0] + c[1] * p[1] + c[2]) / np.hypot(c[0], c[1])

    def normalized(self) -> np.ndarray:
        c = self.to_cartesian().l
        c = c / np.hypot(c[0], c[1])
        # fix the sign so equal lines compare equal
        k = int(np.argmax(np.abs(c[:2])))
        return c if c[k] > 0 else -c

    def distance(self, other: Line) -> float:
        return float(np.linalg.norm(self.normalized() - other.normalized()))


def fit_conic(points, return_residual: bool = False):
    """Least-squares conic through >= 5 points.

    Coordinates are centered and scaled to unit diameter before building the
    design matrix; the null vector is taken from the SVD. The residual is the
    smallest singular value after column normalization (zero for an exact fit
    through exactly five points).
    """
    pts = np.asarray(points, float).reshape(-1, 2)
    if len(pts) < 5:
        raise DegenerateFit(f"need at least 5 points, got {len(pts)}")
    center = pts.mean(axis=0)
    scale = np.sqrt(((pts - center) ** 2).sum(axis=1)).max()
    if scale == 0:
        raise DegenerateFit("all points coincide")
    q = (pts - center) / scale
    x, y = q[:, 0], q[:, 1]
    design = np.column_stack([x * x, x * y, y * y, x, y, np.ones_like(x)])
    norms = np.linalg.norm(design, axis=0)
    norms[norms == 0] = 1.0
    _, sv, vt = np.linalg.svd(design / norms, full_matrices=True)
    sv = np.concatenate([sv, np.zeros(6 - len(sv))])
    if sv[4] <= 1e-9 * sv[0]:
        raise RankDeficient(
            f"conic through {len(pts)} points is not unique (singular values {sv[4]:.3e}, {sv[5]:.3e})"
        )
    coeffs = vt[-1] / norms
    local = Conic.from_coeffs(*coeffs)
    # map back: local coordinates q = (p - center) / scale
    to_local = np.array([[1 / scale, 0, -center[0] / scale], [0, 1 / scale, -center[1] / scale], [0, 0, 1]])
    conic = Conic(to_local.T @ local.m @ to_local).normalized()
    if return_residual:
        return conic, float(sv[5])
    return conic


def classify_conic(c: Conic, tol: float = 1e-7, scale: float | None = None) -> str:
    """One of ``ellipse``, ``parabola``, ``hyperbola``, ``degenerate``.

    ``scale`` (scene diameter) rescales coordinates to unit size before the
    degeneracy test; defaults to the conic's own frame.
    """
    c = c.to_cartesian()
    if scale:
        c = c.scaled(1.0 / scale)
    m = c.normalized().m
    if abs(np.linalg.det(m)) < tol:
        return "degenerate"
    disc = c.discriminant()
    if abs(disc) < tol:
        return "parabola"
    return "ellipse" if disc < 0 else "hyperbola"


def is_rectangular(c: Conic) -> float:
    """Trace of the quadratic part after max-coefficient normalization (0 for rectangular)."""
    q = c.to_cartesian().quadratic
    return float(np.trace(q) / np.abs(q).max())


class ParabolaGeometry(NamedTuple):
    focus: np.ndarray
    directrix: Line
    vertex: np.ndarray
    axis: Line
    axis_direction: np.ndarray  # unit, pointing from vertex into the parabola


def parabola_focus_directrix(c: Conic, tol: float = 1e-6) -> ParabolaGeometry:
    """Focus, directrix, vertex and axis of a (numerically) parabolic conic.

    The quadratic part is diagonalized; its near-zero eigenvalue is dropped,
    which reduces the conic to Y = k X^2 in axis-aligned coordinates.
    """
    c = c.to_cartesian()
    A, B, C, D, E, F = c.coeffs
    if abs(c.discriminant()) > tol:
        raise NotAParabola(f"discriminant {c.discriminant():.3e} is not zero")
    evals, evecs = np.linalg.eigh(c.quadratic)
    i = int(np.argmax(np.abs(evals)))
    lam = evals[i]
    n = evecs[:, i]  # across the axis
    u = evecs[:, 1 - i]  # along the axis
    d_n = D * n[0] + E * n[1]
    d_u = D * u[0] + E * u[1]
    if abs(d_u) < 1e-14 * max(abs(lam), abs(d_n), abs(F), 1e-300):
        raise NotAParabola("degenerate parabola (pair of parallel lines)")
    # lam X^2 + d_n X + d_u Y + F = 0
    x0 = -d_n / (2 * lam)
    y0 = (d_n * d_n / (4 * lam) - F) / d_u
    k = -lam / d_u
    if k < 0:
        u, k, y0 = -u, -k, -y0
    vertex = x0 * n + y0 * u
    focus = vertex + u / (4 * k)
    directrix = Line(np.array([u[0], u[1], -(y0 - 1 / (4 * k))]))
    axis = Line(np.array([n[0], n[1], -x0]))
    return ParabolaGeometry(focus, directrix, vertex, axis, u)


class CentralGeometry(NamedTuple):
    center: np.ndarray
    semi_axes: np.ndarray  # sorted descending; imaginary semi-axes reported negative
    axes: np.ndarray  # columns are the unit directions matching semi_axes
    kind: str


def central_conic_geometry(c: Conic) -> CentralGeometry:
    """Center, semi-axes and axis directions of an ellipse or hyperbola."""
    c = c.to_cartesian()
    q = c.quadratic
    lin = c.m[:2, 2]
    if abs(np.linalg.det(q)) < 1e-14 * np.abs(q).max() ** 2:
        raise GeometryError("conic has no center (parabola)")
    center = np.linalg.solve(q, -lin)
    f0 = c.m[2, 2] + lin @ center
    evals, evecs = np.linalg.eigh(q)
    s = -f0 / evals
    semi = np.sign(s) * np.sqrt(np.abs(s))
    order = np.argsort(-semi)
    kind = "ellipse" if (s > 0).all() else ("hyperbola" if (s > 0).any() else "imaginary")
    return CentralGeometry(center, semi[order], evecs[:, order], kind)


def ellipse_foci(c: Conic) -> tuple[np.ndarray, np.ndarray]:
    g = central_conic_geometry(c)
    if g.kind != "ellipse":
        raise GeometryError(f"foci requested for a {g.kind}")
    a, b = g.semi_axes
    f = np.sqrt(max(a * a - b * b, 0.0))
    return g.center + f * g.axes[:, 0], g.center - f * g.axes[:, 0]


def tangency_residual(c: Conic, line) -> float:
    """Scale-free tangency measure of a Cartesian line against a Cartesian conic.

    The line is parametrized through its foot point; the quadratic
    a s^2 + 2 b s + g along it is tangent iff b^2 - a g = 0. The value is
    normalized by (|a| + |b| + |g|)^2.
    """
    c = c.to_cartesian()
    l = np.asarray(line.l if isinstance(line, Line) else line, float)
    nrm = np.hypot(l[0], l[1])
    l = l / nrm
    p0 = np.array([-l[0] * l[2], -l[1] * l[2], 1.0])
    d = np.array([-l[1], l[0], 0.0])
    a = d @ c.m @ d
    b = d @ c.m @ p0
    g = p0 @ c.m @ p0
    return float(abs(b * b - a * g) / (abs(a) + abs(b) + abs(g)) ** 2)


def line_conic_intersections(c: Conic, p, d) -> np.ndarray:
    """Parameters s where p + s d meets the Cartesian conic (real roots only)."""
    c = c.to_cartesian()
    ph = np.array([p[0], p[1], 1.0])
    dh = np.array([d[0], d[1], 0.0])
    a = dh @ c.m @ dh
    b = dh @ c.m @ ph
    g = ph @ c.m @ ph
    disc = b * b - a * g
    if disc < 0:
        return np.array([])
    r = np.sqrt(disc)
    return np.sort(np.array([(-b - r) / a, (-b + r) / a]))


def sample_parabola(geom: ParabolaGeometry, half_width: float, n: int = 200) -> np.ndarray:
    """Points on the parabola, ``half_width`` to each side of the axis."""
    fd = geom.focus - geom.vertex
    p = float(np.linalg.norm(fd))  # focal length: Y = X^2 / (4p)
    u = geom.axis_direction
    nvec = np.array([-u[1], u[0]])
    xs = np.linspace(-half_width, half_width, n)
    return geom.vertex + np.outer(xs, nvec) + np.outer(xs * xs / (4 * p), u)


def circle_conic(center, radius) -> Conic:
    x0, y0 = center
    return Conic.from_coeffs(1, 0, 1, -2 * x0, -2 * y0, x0 * x0 + y0 * y0 - radius * radius)
