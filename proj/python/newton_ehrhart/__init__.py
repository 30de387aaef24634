"""Newton polytopes of Schur and inflated symmetric Grothendieck polynomials.

Exact lattice-point counts, Ehrhart h*-vectors, reflexivity and Gorenstein
classification, saturated-Newton-polytope and integer-decomposition checks.
All arithmetic is exact; large values arrive as python ints.
"""

from ._core import (
    ValidationError,
    DegenerateError,
    LimitError,
    make_partition,
    dominates,
    reduce_by_translation,
    dominating_sequence,
    in_A,
    schur_expansion,
    grothendieck_expansion,
    skew_strict_fillings_count,
    lattice_points,
    count_lattice_points,
    vertices,
    contains,
    facets,
    count_dilate,
    hstar,
    ehrhart_polynomial,
    is_reflexive,
    schur_reflexive,
    schur_gorenstein,
    grothendieck_reflexive,
    hstar_single_row,
    hstar_near_hook,
    hstar_two_row_family,
    bounded_compositions,
    is_palindromic,
    is_unimodal,
    gorenstein_index,
    idp_brute,
    decompose_schur,
    decompose_grothendieck,
    snp_check,
)

__all__ = [
    "ValidationError",
    "DegenerateError",
    "LimitError",
    "make_partition",
    "dominates",
    "reduce_by_translation",
    "dominating_sequence",
    "in_A",
    "schur_expansion",
    "grothendieck_expansion",
    "skew_strict_fillings_count",
    "lattice_points",
    "count_lattice_points",
    "vertices",
    "contains",
    "facets",
    "count_dilate",
    "hstar",
    "ehrhart_polynomial",
    "is_reflexive",
    "schur_reflexive",
    "schur_gorenstein",
    "grothendieck_reflexive",
    "hstar_single_row",
    "hstar_near_hook",
    "hstar_two_row_family",
    "bounded_compositions",
    "is_palindromic",
    "is_unimodal",
    "gorenstein_index",
    "idp_brute",
    "decompose_schur",
    "decompose_grothendieck",
    "snp_check",
]
