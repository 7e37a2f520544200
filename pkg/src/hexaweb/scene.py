"""Scene assembly and deterministic JSON serialization.

Scene layout::

    {"seed": {"sides": [...], "vertices": [[x, y], ...], "S": ...},
     "hexagons": [{"ij": [i, j], "vertices": [[x, y], ...]}],
     "triangles": [{"ijp": [i, j, "up"], "vertices": ..., "signed_area": ...,
                    "centers": {"X16": [x, y]}}],
     ...one optional key per extra construction}

Floats are written with 17 significant digits and keys in insertion order,
so equal inputs give byte-identical files.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from . import centers, hexgrid, parabolas, poncelet
from .conics import parabola_focus_directrix, sample_parabola
from .errors import GeometryError
from .geometry import Triangle

CONSTRUCTIONS = (
    "flanks",
    "grid",
    "satellites",
    "second_level",
    "parabolas",
    "skip1",
    "directrices",
    "focal",
    "poncelet",
)


def _num(x) -> str:
    x = float(x)
    if not math.isfinite(x):
        return "null"
    if x == 0:
        return "0.0"  # drop the sign of negative zero
    return format(x, ".17g")


def dumps(obj, indent: int = 1, _level: int = 0) -> str:
    """JSON text with 17-significant-digit floats."""
    pad = " " * (indent * (_level + 1))
    end = " " * (indent * _level)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{_str(k)}: {dumps(v, indent, _level + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, np.ndarray):
        obj = obj.tolist()
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        if all(not isinstance(v, (dict, list, tuple, np.ndarray)) for v in obj):
            return "[" + ", ".join(dumps(v, indent, _level + 1) for v in obj) + "]"
        items = [pad + dumps(v, indent, _level + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    if obj is None:
        return "null"
    if isinstance(obj, (bool, np.bool_)):
        return "true" if obj else "false"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return _num(obj)
    if isinstance(obj, str):
        return _str(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _str(s: str) -> str:
    return json.dumps(str(s))


def pts(a) -> list:
    return np.asarray(a, float).reshape(-1, 2).tolist()


def _center_or_none(tri, kind, oriented=False):
    try:
        return pts(centers.center_point(tri, kind, oriented=oriented))[0]
    except GeometryError:
        return None


@dataclass
class SceneSpec:
    sides: tuple | None = None
    vertices: tuple | None = None
    rings: int = 1
    constructions: tuple = ("grid",)
    p: tuple | None = None
    tolerances: dict = field(default_factory=dict)
    poncelet_kind: str = "brocard"
    samples: int = 36

    def triangle(self) -> Triangle:
        if self.vertices is not None:
            v = np.asarray(self.vertices, float).reshape(3, 2)
            tri = Triangle.ccw(*v)
        else:
            tri = Triangle.from_sides(*self.sides)
        tri.require_nondegenerate()
        return tri


def satellite_hexagon(tri: Triangle) -> hexgrid.Hexagon:
    """The hexagon on BC, the default central hexagon of the satellite scenes."""
    return hexgrid.Hexagon(hexgrid.HexGrid(tri).hexagons[(0, 1)])


def build_scene(spec: SceneSpec) -> dict:
    tri = spec.triangle()
    a, b, c = tri.sides
    wanted = set(spec.constructions)
    scene = {
        "seed": {"sides": [a, b, c], "vertices": pts(tri.vertices), "S": tri.S},
    }
    need_grid = wanted & {"grid", "flanks", "parabolas", "skip1"}
    rings = spec.rings if "grid" in wanted or wanted & {"parabolas", "skip1"} else 0
    if wanted & {"parabolas", "skip1"}:
        rings = max(rings, 2)
    if need_grid:
        grid = hexgrid.grow_grid(tri, rings)
        scene["rings"] = rings
        scene["hexagons"] = [{"ij": list(s), "vertices": pts(v)} for s, v in sorted(grid.hexagons.items())]
        tris = []
        keys = grid.triangle_keys() if "grid" in wanted else [hexgrid.SEED_KEY, *hexgrid.FLANK_KEYS.values()]
        for key in keys:
            t = grid.triangle(key)
            tris.append(
                {
                    "ijp": list(key),
                    "vertices": pts(t.vertices),
                    "signed_area": t.S / 2,
                    "centers": {"X16": _center_or_none(t, "X16", oriented=True)},
                }
            )
        scene["triangles"] = tris
    if "focal" in wanted:
        f = parabolas.focal_triple(a, b, c, tri=tri if tri.S > 0 else None)
        scene["focal"] = {
            "vertices": pts(f.vertices),
            "s": f.s,
            "centroid": pts(f.centroid)[0],
            "X16": pts(f.x16)[0],
        }
    if "parabolas" in wanted:
        fams = []
        for fam in parabolas.FAMILIES:
            web = parabolas.confocal_family(grid, fam)
            members = []
            for off, conic in zip(web.offsets, web.members):
                geom = parabola_focus_directrix(conic)
                members.append(
                    {
                        "row": off,
                        "vertex": pts(geom.vertex)[0],
                        "polyline": pts(sample_parabola(geom, 1.5 * grid.diameter, 200)),
                    }
                )
            fams.append({"family": fam, "focus": pts(web.focus)[0], "axis": web.axis.normalized().tolist(), "members": members})
        scene["parabolas"] = fams
    if "skip1" in wanted:
        out = []
        for conic, name in zip(parabolas.skip1_parabolas(a, b, c, "C", tri=tri), ("odd", "even")):
            geom = parabola_focus_directrix(conic.to_cartesian())
            out.append({"name": name, "focus": pts(geom.focus)[0], "polyline": pts(sample_parabola(geom, 1.5 * grid.diameter, 200))})
        scene["skip1"] = out
    if "directrices" in wanted:
        d = parabolas.directrix_equilateral(a, b, c, tri=tri)
        scene["directrices"] = {
            "lines": [parabolas.directrix_line(a, b, c, f, tri).normalized().tolist() for f in parabolas.FAMILIES],
            "vertices": pts(d.vertices),
            "s_prime": d.s_prime,
            "centroid": pts(d.centroid)[0],
            "X617": pts(d.x617)[0],
            "parabola_vertices": pts(d.parabola_vertices),
        }
    if wanted & {"satellites", "second_level"}:
        h = satellite_hexagon(tri)
        p = np.asarray(spec.p if spec.p is not None else tri.A, float)
        con = hexgrid.satellites(h, p)
        scene["satellites"] = {
            "hexagon": pts(h.v),
            "p": pts(p)[0],
            "apexes": pts(con.apexes),
            "triangles": [pts([s.apex, s.base1, s.base2]) for s in con.satellites],
            "signed_areas": [s.signed_area for s in con.satellites],
            "area_sum": hexgrid.satellite_area_sum(h, p),
            "hexagon_area": h.area,
            "closure_gap": con.closure_gap,
        }
        if "second_level" in wanted:
            layer = {}
            for kind in ("X2", "X3", "X4", "X5"):
                try:
                    hk = hexgrid.second_level_hexagon(h, p, kind)
                except GeometryError:
                    continue
                layer[kind] = {"vertices": pts(hk), "angles": hexgrid.polygon_angles(hk).tolist()}
            scene["second_level"] = layer
    if "poncelet" in wanted:
        fam = poncelet.make_family(spec.poncelet_kind, tri)
        members = [pts(fam.member(t).vertices) for t in fam.params(spec.samples)]
        scene["poncelet"] = {
            "kind": fam.kind,
            "samples": spec.samples,
            "members": members,
            "stationary": {k: pts(v)[0] for k, v in fam.stationary_points.items()},
        }
    centers_layer = {}
    for kind in ("X2", "X3", "X6", "X15", "X16", "X617"):
        centers_layer[kind] = _center_or_none(tri, kind)
    scene["centers"] = centers_layer
    return scene
