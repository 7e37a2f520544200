"""Freeze oracle values into tests/data/frozen.json.

Run from the repository root: python tools/freeze_oracles.py
Only the oracles in tests/oracles.py are used; the package is not imported.
"""

import json
import math
import sys
from pathlib import Path

import numpy as np

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "tests"))
import oracles as o  # noqa: E402

SEEDS = {
    "534": [(0.0, 0.0), (4.0, 0.0), (0.0, 3.0)],
    "skew": [(0.3, -0.2), (4.1, 0.7), (1.2, 3.3)],
}


def foci(A, B, C):
    """Foci of the three row parabolas through the seed vertices."""
    g = o.OracleGrid(A, B, C)
    out = {}
    for v in "ABC":
        pts = g.grain_row(v)
        coeffs = o.conic_through(pts[[0, 1, 2, 4, 5]])
        f, n, d = o.parabola_focus(coeffs)
        out[v] = f.tolist()
    return out


def freeze():
    data = {}
    for name, (A, B, C) in SEEDS.items():
        x15, x16 = o.apollonius_points(A, B, C)
        x13, x14 = o.fermat_points(A, B, C)
        w1, w2 = o.brocard_points(A, B, C)
        entry = {
            "vertices": [list(A), list(B), list(C)],
            "sides": list(o.sides(A, B, C)),
            "X3": o.circumcenter(A, B, C).tolist(),
            "X4": o.orthocenter(A, B, C).tolist(),
            "X6": o.symmedian(A, B, C).tolist(),
            "X13": x13.tolist(),
            "X14": x14.tolist(),
            "X15": x15.tolist(),
            "X16": x16.tolist(),
            "X39": ((w1 + w2) / 2).tolist(),
            "X617": o.anticomplement(A, B, C, x14).tolist(),
            "brocard1": w1.tolist(),
            "brocard2": w2.tolist(),
            "flanks": {v: [p.tolist() for p in o.flank(A, B, C, v)] for v in "ABC"},
            "focus": foci(A, B, C),
        }
        data[name] = entry
    data["unit_hexagon_left"] = [p.tolist() for p in o.hexagon((0, 0), (1, 0))]
    # right-hand hexagon on the same edge: mirror image, listed clockwise from (0,0)
    data["unit_hexagon_right"] = [[p[0], -p[1]] for p in data["unit_hexagon_left"]]
    return data


if __name__ == "__main__":
    out = ROOT / "tests" / "data" / "frozen.json"
    out.write_text(json.dumps(freeze(), indent=1) + "\n")
    print(out)
