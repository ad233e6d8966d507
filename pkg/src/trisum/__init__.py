"""Exact projective configurations and the additive group of triangles."""

from trisum._backend import BACKEND
from trisum.projective import (
    Conic,
    HomLine,
    HomPoint,
    ProjMap,
    collinear,
    concurrent,
    conic_rational_point,
    conic_through_5,
    cross_ratio,
    harmonic_conjugate,
    incident,
    join,
    map_from_correspondence,
    meet,
)

__version__ = "0.1.0"
