"""Exact computations with plane quartics, their maximal tangency lines and sextactic points."""

from __future__ import annotations

__version__ = "0.1.0"

from .errors import QuarticaError
from .field import QQ, FieldElement, TowerField, make_tower
from .poly import MultiPoly, UniPoly, resultant, squarefree_decomposition, vanishing_order
from .geometry import Conic, ProjLine, ProjPoint, cross_ratio, dualize, is_harmonic, join, line_census, meet, restrict_to_line

__all__ = [
    "QQ",
    "Conic",
    "FieldElement",
    "MultiPoly",
    "ProjLine",
    "ProjPoint",
    "QuarticaError",
    "TowerField",
    "UniPoly",
    "__version__",
    "cross_ratio",
    "dualize",
    "is_harmonic",
    "join",
    "line_census",
    "make_tower",
    "meet",
    "resultant",
    "restrict_to_line",
    "squarefree_decomposition",
    "vanishing_order",
]
