"""Exception hierarchy.

Every construction failure derives from :class:`GeometryError`; the CLI maps
these to exit code 3 and prints ``<ClassName>: <message>``.
"""


class GeometryError(Exception):
    """Base class for degenerate or inconsistent constructions."""


class DegenerateTriangle(GeometryError):
    pass


class DegenerateSeed(DegenerateTriangle):
    pass


class EquilateralDegenerate(GeometryError):
    """X16 (and everything built from it) is at infinity for an equilateral."""


class PointAtInfinity(GeometryError):
    pass


class CoincidentPoints(GeometryError):
    pass


class DegenerateLine(GeometryError):
    pass


class RankDeficient(GeometryError):
    """The conic through the given points is not unique."""


class DegenerateFit(GeometryError):
    pass


class NotAParabola(GeometryError):
    pass


class ParallelDirectrices(GeometryError):
    pass


class ClosureViolation(GeometryError):
    pass


class InsufficientGrid(GeometryError):
    pass


class TangentMiss(GeometryError):
    pass


class NumericalTangentCollapse(GeometryError):
    pass


class PAtCenter(GeometryError):
    pass


class PExterior(GeometryError):
    pass


class ConstructionFailed(GeometryError):
    pass
