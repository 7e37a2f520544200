"""Planar primitives: points, triangles, lines, barycentric conversion.

Points are plain ``numpy`` arrays of shape ``(2,)``; barycentric coordinates
are arrays of shape ``(3,)`` and are homogeneous (any nonzero multiple
denotes the same point).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .errors import CoincidentPoints, DegenerateLine, DegenerateTriangle, PointAtInfinity

SQRT3 = np.sqrt(3.0)


def point(x, y=None) -> np.ndarray:
    if y is None:
        return np.asarray(x, dtype=float).reshape(2)
    return np.array([x, y], dtype=float)


def cross(u, v) -> float:
    return float(u[0] * v[1] - u[1] * v[0])


def rotation(angle: float) -> np.ndarray:
    c, s = np.cos(angle), np.sin(angle)
    return np.array([[c, -s], [s, c]])


def rotate(p, center, angle: float) -> np.ndarray:
    p, center = np.asarray(p, float), np.asarray(center, float)
    return center + rotation(angle) @ (p - center)


def signed_area(p, q, r) -> float:
    """Signed area of triangle pqr (positive when counterclockwise)."""
    return 0.5 * cross(np.subtract(q, p), np.subtract(r, p))


def polygon_area(vertices) -> float:
    v = np.asarray(vertices, float)
    x, y = v[:, 0], v[:, 1]
    return 0.5 * float(np.dot(x, np.roll(y, -1)) - np.dot(y, np.roll(x, -1)))


def diameter(points) -> float:
    pts = np.asarray(points, float).reshape(-1, 2)
    d = pts[:, None, :] - pts[None, :, :]
    return float(np.sqrt((d**2).sum(-1)).max())


def angle_at(vertex, p, q) -> float:
    """Unsigned angle p-vertex-q in [0, pi]."""
    u, v = np.subtract(p, vertex), np.subtract(q, vertex)
    return float(np.arctan2(abs(cross(u, v)), np.dot(u, v)))


def line_through(p, q) -> np.ndarray:
    """Homogeneous line (l0, l1, l2) with l0*x + l1*y + l2 = 0."""
    if np.allclose(p, q, rtol=0, atol=0):
        raise CoincidentPoints("line through coincident points")
    return np.cross([p[0], p[1], 1.0], [q[0], q[1], 1.0])


def _line_normal(line):
    line = np.asarray(line, float)
    n = np.hypot(line[0], line[1])
    if n == 0:
        raise DegenerateLine("line at infinity or zero line")
    return line / n


def line_distance(p, line) -> float:
    """Unsigned distance from p to a homogeneous Cartesian line."""
    ln = _line_normal(line)
    return abs(ln[0] * p[0] + ln[1] * p[1] + ln[2])


def intersect_lines(l1, l2) -> np.ndarray:
    h = np.cross(l1, l2)
    scale = np.abs(h).max()
    if scale == 0 or abs(h[2]) <= 1e-14 * scale:
        raise PointAtInfinity("lines are parallel")
    return h[:2] / h[2]


def reflect(p, about) -> np.ndarray:
    """Reflect ``p`` about a homogeneous line or a segment given as two points."""
    about = np.asarray(about, float)
    if about.shape == (2, 2):
        if np.array_equal(about[0], about[1]):
            raise DegenerateLine("segment endpoints coincide")
        line = line_through(about[0], about[1])
    else:
        line = about
    ln = _line_normal(line)
    d = ln[0] * p[0] + ln[1] * p[1] + ln[2]
    return np.array([p[0] - 2 * d * ln[0], p[1] - 2 * d * ln[1]])


def circumcircle(p, q, r) -> tuple[np.ndarray, float]:
    p, q, r = (np.asarray(v, float) for v in (p, q, r))
    d = 2 * cross(q - p, r - p)
    if d == 0:
        raise DegenerateTriangle("collinear points have no circumcircle")
    qp, rp = q - p, r - p
    ux = (rp[1] * qp.dot(qp) - qp[1] * rp.dot(rp)) / d
    uy = (qp[0] * rp.dot(rp) - rp[0] * qp.dot(qp)) / d
    center = p + np.array([ux, uy])
    return center, float(np.hypot(ux, uy))


@dataclass(frozen=True)
class Triangle:
    """Three vertices. ``S`` is Conway's S (twice the signed area)."""

    A: np.ndarray
    B: np.ndarray
    C: np.ndarray
    perm: tuple[int, int, int] = field(default=(0, 1, 2), compare=False)

    def __post_init__(self):
        for name in "ABC":
            object.__setattr__(self, name, point(getattr(self, name)))

    @classmethod
    def from_sides(cls, a: float, b: float, c: float) -> Triangle:
        """Counterclockwise triangle with A at the origin and B on the x-axis."""
        if min(a, b, c) <= 0 or a >= b + c or b >= c + a or c >= a + b:
            raise DegenerateTriangle(f"sides {a}, {b}, {c} violate the triangle inequality")
        cos_a = (b * b + c * c - a * a) / (2 * b * c)
        sin_a = np.sqrt(max(0.0, 1 - cos_a * cos_a))
        return cls((0.0, 0.0), (c, 0.0), (b * cos_a, b * sin_a))

    @classmethod
    def ccw(cls, A, B, C) -> Triangle:
        """Build a triangle, reordering to counterclockwise if needed.

        The applied permutation is kept in ``perm`` (indices into the input).
        """
        A, B, C = point(A), point(B), point(C)
        if signed_area(A, B, C) < 0:
            return cls(A, C, B, perm=(0, 2, 1))
        return cls(A, B, C)

    @property
    def vertices(self) -> np.ndarray:
        return np.array([self.A, self.B, self.C])

    @cached_property
    def sides(self) -> tuple[float, float, float]:
        A, B, C = self.A, self.B, self.C
        return (float(np.hypot(*(C - B))), float(np.hypot(*(A - C))), float(np.hypot(*(B - A))))

    @property
    def a(self) -> float:
        return self.sides[0]

    @property
    def b(self) -> float:
        return self.sides[1]

    @property
    def c(self) -> float:
        return self.sides[2]

    @cached_property
    def S(self) -> float:
        return cross(self.B - self.A, self.C - self.A)

    @property
    def area(self) -> float:
        return abs(self.S) / 2

    @property
    def diameter(self) -> float:
        return max(self.sides)

    @property
    def cot_omega(self) -> float:
        a, b, c = self.sides
        return (a * a + b * b + c * c) / (2 * abs(self.S))

    @property
    def omega(self) -> float:
        """Brocard angle in radians."""
        return float(np.arctan2(1.0, self.cot_omega))

    @property
    def centroid(self) -> np.ndarray:
        return (self.A + self.B + self.C) / 3

    @property
    def angles(self) -> tuple[float, float, float]:
        A, B, C = self.A, self.B, self.C
        return (angle_at(A, B, C), angle_at(B, C, A), angle_at(C, A, B))

    def is_degenerate(self, eps: float = 1e-12) -> bool:
        d = self.diameter
        return d == 0 or abs(self.S) < eps * d * d

    def require_nondegenerate(self, eps: float = 1e-12) -> None:
        if self.is_degenerate(eps):
            raise DegenerateTriangle(f"|S| = {abs(self.S):.3e} is zero relative to the diameter")

    @property
    def frame(self) -> np.ndarray:
        """Matrix sending barycentrics (u, v, w) to homogeneous Cartesian (x, y, 1)."""
        return np.array(
            [[self.A[0], self.B[0], self.C[0]], [self.A[1], self.B[1], self.C[1]], [1.0, 1.0, 1.0]]
        )


def bary_to_cartesian(tri: Triangle, bary, eps: float = 1e-12) -> np.ndarray:
    u, v, w = np.asarray(bary, float)
    total = u + v + w
    if abs(total) < eps * max(abs(u), abs(v), abs(w)) or total == 0:
        raise PointAtInfinity(f"barycentrics ({u:.3g}, {v:.3g}, {w:.3g}) sum to zero")
    return (u * tri.A + v * tri.B + w * tri.C) / total


def cartesian_to_bary(tri: Triangle, p, eps: float = 1e-12) -> np.ndarray:
    """Barycentrics of ``p`` normalized so the largest |component| is 1."""
    tri.require_nondegenerate(eps)
    bary = np.linalg.solve(tri.frame, [p[0], p[1], 1.0])
    return bary / np.abs(bary).max()


def normalize_bary(bary) -> np.ndarray:
    """Scale so the components sum to 1 (finite points only)."""
    bary = np.asarray(bary, float)
    total = bary.sum()
    if total == 0:
        raise PointAtInfinity("barycentrics sum to zero")
    return bary / total
