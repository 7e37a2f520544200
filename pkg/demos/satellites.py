"""Six satellite flanks around a regular hexagon: their areas always add up to the hexagon.

    python3 demos/satellites.py
"""

import numpy as np

from hexaweb import hexgrid

h = hexgrid.erect_hexagon((0.0, 0.0), (1.0, 0.0), "left")
print("hexagon area", h.area)
rng = np.random.default_rng(0)
for _ in range(5):
    p = rng.uniform(-0.5, 1.5, size=2)
    print(
        f"P={np.round(p, 3)}  triangle sum={hexgrid.satellite_area_sum(h, p):.15f}"
        f"  hexagon sum={hexgrid.satellite_hex_area_sum(h, p):.15f}"
    )
