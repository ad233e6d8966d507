"""Exception hierarchy shared by all trisum modules."""


class GeometryError(Exception):
    """Base class for every error raised by trisum."""


class ZeroVector(GeometryError, ValueError):
    pass


class CoincidentPoints(GeometryError):
    pass


class CoincidentLines(GeometryError):
    pass


class NotCollinear(GeometryError):
    pass


class DegeneratePoints(GeometryError):
    pass


class DegenerateQuadruple(GeometryError):
    pass


class UnderDetermined(GeometryError):
    pass


class TangentParameter(GeometryError):
    """The parameter line touches the conic at the base point.

    ``point`` holds the base point so a caller can decide what to do with it.
    """

    def __init__(self, point):
        super().__init__(f"parameter line is tangent at {point}")
        self.point = point


class DegenerateConstruction(GeometryError):
    """A construction step is undefined; ``label`` names the first such element."""

    def __init__(self, label, detail=""):
        msg = f"{label} is undefined" + (f" ({detail})" if detail else "")
        super().__init__(msg)
        self.label = label


class GeneralPositionExhausted(GeometryError):
    pass


class SideMismatch(GeometryError):
    pass


class ZeroSum(GeometryError):
    pass


class KindError(GeometryError):
    """An operation received an element of the wrong kind."""


class Unsupported(GeometryError):
    pass


class ParseError(GeometryError, ValueError):
    pass
