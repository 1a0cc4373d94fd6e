"""Symbolic ordinal arithmetic and the Szlenk indices of C([0, alpha])."""

from .classification import IsoVerdict, canonical_representative, isomorphic
from .indices import IndexReport, dentability_index, gamma_of, index_report, szlenk_index
from .notation import format_ordinal, format_space, parse_ordinal, parse_space
from .ordinals import OMEGA, ONE, ZERO, Ordinal, compare, omega_atom, ordinal
from .space_algebra import check_trace, decompose_bp, normalize, szlenk_bounds

__all__ = [
    "IndexReport",
    "IsoVerdict",
    "OMEGA",
    "ONE",
    "Ordinal",
    "ZERO",
    "canonical_representative",
    "check_trace",
    "compare",
    "decompose_bp",
    "dentability_index",
    "format_ordinal",
    "format_space",
    "gamma_of",
    "index_report",
    "isomorphic",
    "normalize",
    "omega_atom",
    "ordinal",
    "parse_ordinal",
    "parse_space",
    "szlenk_bounds",
    "szlenk_index",
]
