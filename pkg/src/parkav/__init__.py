"""Exact counting, enumeration and bijections for pattern-restricted parking
functions, their lattice-path and tree correspondences, and the class counts
of generalized parking functions.  All arithmetic is exact."""

from .counting import CountResult, generic_weighted_pk, pf_count, pk_count
from .parking import ParkingFunction, parking_function, simulate
from .permutations import PatternSet, Permutation, pattern_set, perm
from .trees import OrderedTree, parse_tree, serialize_tree

__all__ = [
    "CountResult",
    "OrderedTree",
    "ParkingFunction",
    "PatternSet",
    "Permutation",
    "generic_weighted_pk",
    "parking_function",
    "parse_tree",
    "pattern_set",
    "perm",
    "pf_count",
    "pk_count",
    "serialize_tree",
    "simulate",
]

__version__ = "0.1.0"
