"""Walk the homothetic and Brocard Poncelet families of a scalene triangle.

    python3 demos/poncelet_families.py
"""

import numpy as np

from hexaweb import Triangle, poncelet

seed = Triangle.from_sides(6, 5, 4)
for kind in ("homothetic", "brocard"):
    fam = poncelet.make_family(kind, seed)
    reports = poncelet.family_report(fam, 24)
    omega = [r.omega for r in reports]
    focal = [r.focal_s for r in reports]
    gaps = [fam.closure_gap(t) for t in fam.params(24)]
    print(f"{kind}: omega spread {poncelet.spread(omega):.2e}, focal side spread {poncelet.spread(focal):.2e}, "
          f"worst closure {max(gaps):.2e}")
    for what in ("flank_barycenters", "hexagon_centroids"):
        fit = poncelet.locus_fit(fam, what, 36)
        print(f"  {what}: {fit.kind}, center {np.round(fit.center, 9)}, semi-axes {np.round(fit.semi_axes, 9)}")
