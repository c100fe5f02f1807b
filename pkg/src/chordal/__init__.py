"""Gauss diagrams of virtual and twisted knots and chord-index invariants."""
from __future__ import annotations

from .gauss import (BAR, Bar, ChordEnd, FlatDiagram, GaussCodeError, GaussDiagram,
                    crossing_change, delete_chord, diagram, flat_projection, mirror,
                    parse_gauss_code, reverse, serialize, writhe)
from .laurent import LaurentPoly

__all__ = [
    "BAR", "Bar", "ChordEnd", "FlatDiagram", "GaussCodeError", "GaussDiagram", "LaurentPoly",
    "crossing_change", "delete_chord", "diagram", "flat_projection", "mirror",
    "parse_gauss_code", "reverse", "serialize", "writhe",
]
