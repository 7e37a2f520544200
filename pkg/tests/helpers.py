"""Shared fixtures-free helpers: random triangles and frozen oracle values."""

from __future__ import annotations

import json
from functools import lru_cache
from pathlib import Path

import numpy as np

from hexaweb import Triangle
from hexaweb import centers

DATA = Path(__file__).parent / "data"


@lru_cache(maxsize=None)
def frozen() -> dict:
    return json.loads((DATA / "frozen.json").read_text())


def frozen_triangle(name: str) -> Triangle:
    return Triangle.ccw(*np.array(frozen()[name]["vertices"]))


def triangle_from_angles(alpha, beta, scale=1.0, rot=0.0, shift=(0.0, 0.0)) -> Triangle:
    """Counterclockwise triangle with angles alpha at A and beta at B (radians)."""
    gamma = np.pi - alpha - beta
    c = scale * np.sin(gamma)
    b = scale * np.sin(beta)
    C = b * np.array([np.cos(alpha), np.sin(alpha)])
    r = np.array([[np.cos(rot), -np.sin(rot)], [np.sin(rot), np.cos(rot)]])
    pts = [r @ p + np.asarray(shift) for p in (np.zeros(2), np.array([c, 0.0]), C)]
    return Triangle(*pts)


def random_triangle(rng, lo_deg=10.0, hi_deg=150.0) -> Triangle:
    lo, hi = np.radians(lo_deg), np.radians(hi_deg)
    while True:
        alpha, beta = rng.uniform(lo, hi, 2)
        gamma = np.pi - alpha - beta
        if lo <= gamma <= hi:
            break
    return triangle_from_angles(alpha, beta, rng.uniform(0.5, 5.0), rng.uniform(0, 2 * np.pi), rng.uniform(-3, 3, 2))


def well_conditioned(tri: Triangle, quality=1e-6, threshold=1e-4) -> bool:
    """The X16 conditioning flag: far enough from equilateral for a finite X16."""
    a, b, c = tri.sides
    return centers.conditioning(a, b, c) >= threshold and centers.x16_quality(a, b, c) >= quality


def random_triangles(n, seed=0, conditioned=True) -> list[Triangle]:
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < n:
        t = random_triangle(rng)
        if not conditioned or well_conditioned(t):
            out.append(t)
    return out
