"""Minimal SVG emitter for scene dictionaries (see :mod:`scene`)."""

from __future__ import annotations

import datetime as _dt

import numpy as np

WIDTH = 800
STYLE = {
    "hexagons": 'fill="none" stroke="#888888" stroke-width="1"',
    "triangles": 'fill="#c8e6c9" fill-opacity="0.5" stroke="#2e7d32" stroke-width="1"',
    "parabolas": 'fill="none" stroke="#1565c0" stroke-width="1.2"',
    "skip1": 'fill="none" stroke="#6a1b9a" stroke-width="1.2" stroke-dasharray="4 3"',
    "directrices": 'fill="none" stroke="#c62828" stroke-width="1" stroke-dasharray="6 3"',
    "equilaterals": 'fill="none" stroke="#ef6c00" stroke-width="1.5"',
    "satellites": 'fill="#fff59d" fill-opacity="0.6" stroke="#f9a825" stroke-width="1"',
    "poncelet": 'fill="none" stroke="#00838f" stroke-width="0.6" stroke-opacity="0.6"',
    "foci": 'fill="#d81b60"',
    "centers": 'fill="#000000"',
}


class _View:
    def __init__(self, points, margin=0.08):
        p = np.asarray(points, float).reshape(-1, 2)
        lo, hi = p.min(axis=0), p.max(axis=0)
        span = max(hi - lo)
        span = span if span > 0 else 1.0
        self.lo = lo - margin * span
        self.hi = hi + margin * span
        self.k = WIDTH / max(self.hi - self.lo)
        self.height = int(round((self.hi[1] - self.lo[1]) * self.k))
        self.width = int(round((self.hi[0] - self.lo[0]) * self.k))

    def xy(self, p) -> str:
        x = (p[0] - self.lo[0]) * self.k
        y = (self.hi[1] - p[1]) * self.k
        return f"{x:.3f},{y:.3f}"

    def inside(self, p) -> bool:
        return bool(np.all(p >= self.lo) and np.all(p <= self.hi))

    def clip_line(self, l):
        """Endpoints of the homogeneous line l inside the viewport, or None."""
        a, b, c = l
        out = []
        for x in (self.lo[0], self.hi[0]):
            if b != 0:
                y = -(a * x + c) / b
                if self.lo[1] <= y <= self.hi[1]:
                    out.append((x, y))
        for y in (self.lo[1], self.hi[1]):
            if a != 0:
                x = -(b * y + c) / a
                if self.lo[0] <= x <= self.hi[0]:
                    out.append((x, y))
        return out[:2] if len(out) >= 2 else None


def _polygon(view, pts, style):
    return f'<polygon points="{" ".join(view.xy(p) for p in pts)}" {style}/>'


def _polylines(view, pts, style):
    """Polyline split wherever it leaves the viewport."""
    out, run = [], []
    for p in np.asarray(pts, float):
        if view.inside(p):
            run.append(p)
        else:
            if len(run) > 1:
                out.append(run)
            run = []
    if len(run) > 1:
        out.append(run)
    return [f'<polyline points="{" ".join(view.xy(p) for p in r)}" {style}/>' for r in out]


def _dot(view, p, style, r=2.5, label=None):
    if p is None or not view.inside(np.asarray(p)):
        return []
    x, y = view.xy(p).split(",")
    s = [f'<circle cx="{x}" cy="{y}" r="{r}" {style}/>']
    if label:
        s.append(f'<text x="{float(x) + 4:.3f}" y="{float(y) - 4:.3f}" font-size="10">{label}</text>')
    return s


def render(scene: dict, timestamp: bool = True) -> str:
    anchor = [scene["seed"]["vertices"]]
    for h in scene.get("hexagons", []):
        anchor.append(h["vertices"])
    if "satellites" in scene:
        anchor.append(scene["satellites"]["hexagon"])
        anchor.append(scene["satellites"]["apexes"])
    for key in ("focal", "directrices"):
        if key in scene:
            anchor.append(scene[key]["vertices"])
    if "poncelet" in scene:
        anchor.extend(scene["poncelet"]["members"])
    view = _View(np.concatenate([np.asarray(a, float).reshape(-1, 2) for a in anchor]))

    layers = {}
    layers["hexagons"] = [_polygon(view, h["vertices"], STYLE["hexagons"]) for h in scene.get("hexagons", [])]
    layers["flanks"] = [_polygon(view, t["vertices"], STYLE["triangles"]) for t in scene.get("triangles", [])]
    layers["seed"] = [_polygon(view, scene["seed"]["vertices"], 'fill="none" stroke="#000000" stroke-width="2"')]
    par = []
    for fam in scene.get("parabolas", []):
        for m in fam["members"]:
            par += _polylines(view, m["polyline"], STYLE["parabolas"])
    layers["parabolas"] = par
    layers["skip1"] = [s for p in scene.get("skip1", []) for s in _polylines(view, p["polyline"], STYLE["skip1"])]
    dirs, eq, foci = [], [], []
    if "directrices" in scene:
        for l in scene["directrices"]["lines"]:
            seg = view.clip_line(l)
            if seg:
                (x0, y0), (x1, y1) = seg
                dirs.append(f'<polyline points="{view.xy((x0, y0))} {view.xy((x1, y1))}" {STYLE["directrices"]}/>')
        eq.append(_polygon(view, scene["directrices"]["vertices"], STYLE["equilaterals"]))
        eq.append(_polygon(view, scene["directrices"]["parabola_vertices"], 'fill="none" stroke="#6d4c41" stroke-width="1"'))
    if "focal" in scene:
        eq.append(_polygon(view, scene["focal"]["vertices"], STYLE["equilaterals"]))
        for p, name in zip(scene["focal"]["vertices"], ("fa", "fb", "fc")):
            foci += _dot(view, p, STYLE["foci"], label=name)
    for fam in scene.get("parabolas", []):
        foci += _dot(view, fam["focus"], STYLE["foci"])
    layers["directrices"] = dirs
    layers["equilaterals"] = eq
    layers["foci"] = foci
    sat = []
    if "satellites" in scene:
        sat.append(_polygon(view, scene["satellites"]["hexagon"], STYLE["hexagons"]))
        sat += [_polygon(view, t, STYLE["satellites"]) for t in scene["satellites"]["triangles"]]
        sat += _dot(view, scene["satellites"]["p"], STYLE["centers"], label="P")
    for kind, hk in scene.get("second_level", {}).items():
        sat.append(_polygon(view, hk["vertices"], 'fill="none" stroke="#5e35b1" stroke-width="1"'))
    layers["satellites"] = sat
    if "poncelet" in scene:
        layers["poncelet"] = [_polygon(view, m, STYLE["poncelet"]) for m in scene["poncelet"]["members"]]
    cen = []
    for name, p in scene.get("centers", {}).items():
        cen += _dot(view, p, STYLE["centers"], label=name)
    layers["centers"] = cen

    out = ['<?xml version="1.0" encoding="UTF-8"?>']
    if timestamp:
        now = _dt.datetime.now(_dt.timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")
        out.append(f"<!-- generated {now} -->")
    out.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{view.width}" height="{view.height}" '
        f'viewBox="0 0 {view.width} {view.height}">'
    )
    out.append('<rect width="100%" height="100%" fill="#ffffff"/>')
    for name, items in layers.items():
        if items:
            out.append(f'<g id="{name}">')
            out += ["  " + s for s in items]
            out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
