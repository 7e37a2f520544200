"""Grow a grid on the 3-4-5 triangle, fit its three parabola webs, and look at the foci.

    python3 demos/focal_equilateral.py
"""

import numpy as np

from hexaweb import Triangle, centers, hexgrid, parabolas

tri = Triangle.from_sides(5, 3, 4)
grid = hexgrid.grow_grid(tri, rings=3)
print(f"grid: {len(grid.hexagons)} hexagons, {len(grid.triangle_keys())} triangles")

webs = [parabolas.confocal_family(grid, f) for f in "ABC"]
for w in webs:
    print(f"family {w.family}: {len(w.members)} rows, focus {np.round(w.focus, 9)}, spread {w.focus_spread:.2e}")

# the three foci form an equilateral centered on X16
foc = parabolas.focal_triple(5, 3, 4, tri)
print("focal sides", np.round(foc.sides, 12))
print("closed forms of s:", foc.s, foc.s_alt)
print("centroid vs X16:", np.linalg.norm(foc.centroid - centers.center_point(tri, "X16")))
print("axis angles (deg):", np.round(np.degrees(parabolas.axis_angles(webs)), 9))
