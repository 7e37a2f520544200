"""Default tolerances and the global scale knob.

All tolerances are relative: point distances are compared against the scene
diameter, areas against diameter squared, and conic coefficients after
normalization. ``HEXAWEB_TOL_SCALE`` multiplies every default.
"""

import os

DEFAULTS = {
    "point": 1e-9,  # relative to scene diameter
    "classify": 1e-7,  # |B^2 - 4AC| after quadratic-part normalization
    "on_conic": 1e-8,  # algebraic residual, unit-diameter coordinates
    "x16": 1e-8,
    "angle": 1e-8,  # radians
    "relative": 1e-9,  # conserved quantities
    "conditioning": 1e-4,  # minimum |cot(omega) - sqrt(3)|
    "x16_quality": 1e-6,  # minimum |u+v+w| / max|u,v,w| for X16
    "snap": 1e-10,  # closure walk ratio and angle
    "flank_bary": 1e-10,  # normalized barycentric distance
    "off_conic": 1e-4,  # minimum residual for negative controls
    "forms": 1e-12,  # agreement of two closed forms of one quantity
    "s_prime": 1e-7,  # directrix equilateral side, relative
    "aspect": 1e-6,  # locus shape comparisons
    "scalene": 1e-3,  # minimum side spread to call a triangle scalene
}


def scale() -> float:
    return float(os.environ.get("HEXAWEB_TOL_SCALE", "1"))


def tol(name: str, overrides: dict | None = None) -> float:
    if overrides and name in overrides:
        return float(overrides[name])
    return DEFAULTS[name] * scale()
