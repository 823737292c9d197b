"""Characteristic polynomials of central hyperplane arrangements, computed three ways."""

from .bridge import (
    SimpleGraph,
    analyze_sequence,
    chromatic_deletion_contraction,
    chromatic_via_arrangement,
    coefficient_sequence,
    complete_graph,
    count_proper_colorings,
    graphic_arrangement,
    make_graph,
    matroid_char_poly_subsets,
    matroid_of_arrangement,
)
from .core import (
    Arrangement,
    Hyperplane,
    build_lattice,
    char_poly_lattice,
    delete,
    make_arrangement,
    rank,
    restrict,
)
from .exact import Poly, format_poly
from .formats import format_arrangement, parse_arrangement
from .multidegrees import (
    MultidegreeSequence,
    char_poly_from_multidegrees,
    multidegrees_dr,
    multidegrees_from_char_poly,
)
from .oracle import multidegrees_partial, pencil
from .report import verify

__all__ = [
    "Arrangement",
    "Hyperplane",
    "MultidegreeSequence",
    "Poly",
    "SimpleGraph",
    "analyze_sequence",
    "build_lattice",
    "char_poly_from_multidegrees",
    "char_poly_lattice",
    "chromatic_deletion_contraction",
    "chromatic_via_arrangement",
    "coefficient_sequence",
    "complete_graph",
    "count_proper_colorings",
    "delete",
    "format_arrangement",
    "format_poly",
    "graphic_arrangement",
    "make_arrangement",
    "make_graph",
    "matroid_char_poly_subsets",
    "matroid_of_arrangement",
    "multidegrees_dr",
    "multidegrees_from_char_poly",
    "multidegrees_partial",
    "parse_arrangement",
    "pencil",
    "rank",
    "restrict",
    "verify",
]
