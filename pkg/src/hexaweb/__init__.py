"""Regular hexagons erected on triangles: flanks, grids, parabola webs, Poncelet families."""

from .geometry import Triangle
from .errors import GeometryError

__version__ = "0.1.0"

__all__ = ["Triangle", "GeometryError", "__version__"]
