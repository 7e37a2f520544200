"""Triangle centers as barycentric functions of the sidelengths.

Angles never enter directly: every sin/cos of a vertex angle is rewritten
through Conway's notation, ``sin A = S / (b c)`` and ``cos A = S_A / (b c)``
with ``S_A = (b^2 + c^2 - a^2) / 2``. Trilinears convert to barycentrics by
multiplying component i by sidelength i.

``S`` may be passed signed. A negative ``S`` describes the mirror-oriented
triangle, which swaps the two isodynamic (and the two Fermat) points; the
default is the positive Heron value.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateTriangle, EquilateralDegenerate
from .geometry import SQRT3, Triangle, bary_to_cartesian, normalize_bary

NAMED = ("X2", "X3", "X4", "X5", "X6", "X13", "X14", "X15", "X16", "X39", "X617")


@dataclass(frozen=True)
class EulerParam:
    """The point X3 + t (X4 - X3) on the Euler line."""

    t: float

    def __str__(self):
        return f"EulerParam({self.t:g})"


# X2, X3, X4, X5 as Euler-line parameters (G divides OH at 1/3).
EULER_LINE = {"X3": 0.0, "X2": 1.0 / 3.0, "X5": 0.5, "X4": 1.0}


def conway_s(a: float, b: float, c: float) -> float:
    """Twice the area by Heron's formula (always >= 0)."""
    a2, b2, c2 = a * a, b * b, c * c
    sq = 2 * (a2 * b2 + b2 * c2 + c2 * a2) - (a2 * a2 + b2 * b2 + c2 * c2)
    if sq <= 0:
        raise DegenerateTriangle(f"sides {a}, {b}, {c} do not form a triangle")
    return 0.5 * np.sqrt(sq)


def _check(a, b, c, S):
    if S is None:
        S = conway_s(a, b, c)
    elif S == 0:
        raise DegenerateTriangle("S = 0")
    return a * a, b * b, c * c, float(S)


def parse_kind(kind):
    if isinstance(kind, EulerParam) or kind in NAMED:
        return kind
    text = str(kind)
    if text.startswith("EulerParam(") and text.endswith(")"):
        return EulerParam(float(text[len("EulerParam(") : -1]))
    raise ValueError(f"unknown center kind {kind!r}")


def _require_finite_isodynamic(v, scale, name):
    if np.abs(v).max() <= 1e-12 * scale:
        raise EquilateralDegenerate(f"{name} is undefined for an equilateral triangle")


def center_bary(kind, a: float, b: float, c: float, S: float | None = None) -> np.ndarray:
    """Homogeneous barycentrics of a center, up to scale."""
    kind = parse_kind(kind)
    a2, b2, c2, S = _check(a, b, c, S)
    sa, sb, sc = (b2 + c2 - a2) / 2, (c2 + a2 - b2) / 2, (a2 + b2 - c2) / 2
    scale = (a2 + b2 + c2) ** 2
    if isinstance(kind, EulerParam):
        x3 = normalize_bary(center_bary("X3", a, b, c, S))
        x4 = normalize_bary(center_bary("X4", a, b, c, S))
        return x3 + kind.t * (x4 - x3)
    if kind in ("X2",):
        return np.ones(3)
    if kind == "X3":
        return np.array([a2 * sa, b2 * sb, c2 * sc])
    if kind == "X4":
        # product form of (1/S_A : 1/S_B : 1/S_C); finite for right triangles
        return np.array([sb * sc, sc * sa, sa * sb])
    if kind == "X5":
        return center_bary(EulerParam(0.5), a, b, c, S)
    if kind == "X6":
        return np.array([a2, b2, c2])
    if kind == "X39":
        return np.array([a2 * (b2 + c2), b2 * (c2 + a2), c2 * (a2 + b2)])
    if kind in ("X13", "X14"):
        sign = 1.0 if kind == "X13" else -1.0
        pa, pb, pc = (SQRT3 * s + sign * S for s in (sa, sb, sc))
        # a / sin(A +- pi/3) is proportional to 1 / (sqrt3 S_A +- S)
        v = np.array([pb * pc, pc * pa, pa * pb])
        if kind == "X14":
            _require_finite_isodynamic(v, scale, kind)
        return v
    if kind in ("X15", "X16"):
        sign = 1.0 if kind == "X15" else -1.0
        v = np.array([a2 * (SQRT3 * sa + sign * S), b2 * (SQRT3 * sb + sign * S), c2 * (SQRT3 * sc + sign * S)])
        if kind == "X16":
            _require_finite_isodynamic(v, scale * scale, kind)
        return v
    if kind == "X617":
        x14 = normalize_bary(center_bary("X14", a, b, c, S))
        return np.ones(3) - 2 * x14
    raise ValueError(f"unhandled center kind {kind!r}")


def center_point(tri: Triangle, kind, oriented: bool = False) -> np.ndarray:
    """Cartesian position of a center of ``tri``.

    With ``oriented=True`` the signed S of the vertex order is used, so a
    clockwise triangle gets the mirror center (X16 <-> X15, X14 <-> X13).
    """
    S = tri.S if oriented else abs(tri.S)
    return bary_to_cartesian(tri, center_bary(kind, *tri.sides, S=S))


def x16_quality(a: float, b: float, c: float, S: float | None = None) -> float:
    """|u+v+w| / max|u,v,w| of X16; tends to 0 as X16 runs off to infinity."""
    try:
        v = center_bary("X16", a, b, c, S)
    except EquilateralDegenerate:
        return 0.0
    return float(abs(v.sum()) / np.abs(v).max())


def conditioning(a: float, b: float, c: float, S: float | None = None) -> float:
    """|cot(omega) - sqrt(3)|: zero exactly for the equilateral."""
    a2, b2, c2, S = _check(a, b, c, S)
    return abs((a2 + b2 + c2) / (2 * abs(S)) - SQRT3)


def flank_x15_bary(a: float, b: float, c: float, vertex: str = "A") -> np.ndarray:
    """X15 of the flank at ``vertex``, in the reference triangle's barycentrics."""
    a2, b2, c2 = a * a, b * b, c * c
    if conway_s(a, b, c) == 0:
        raise DegenerateTriangle("degenerate reference triangle")
    v = np.array([a2 - 3 * b2 - 3 * c2, b2, c2])
    shift = "ABC".index(vertex)
    if shift == 1:
        v = np.array([a2, b2 - 3 * c2 - 3 * a2, c2])
    elif shift == 2:
        v = np.array([a2, b2, c2 - 3 * a2 - 3 * b2])
    return v


def anticomplement(tri: Triangle, p) -> np.ndarray:
    g = tri.centroid
    return g + 2 * (g - np.asarray(p, float))


def brocard_points(tri: Triangle) -> tuple[np.ndarray, np.ndarray]:
    """First and second Brocard points (angles omega at A->B, B->C, C->A for the first)."""
    a2, b2, c2 = (s * s for s in tri.sides)
    first = bary_to_cartesian(tri, [c2 * a2, a2 * b2, b2 * c2])
    second = bary_to_cartesian(tri, [a2 * b2, b2 * c2, c2 * a2])
    return first, second
