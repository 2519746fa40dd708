"""Exact V-filtration, weight and Hodge data for equivariant D-modules, read off b-function roots."""

from .bfun import AffineBFamily, BFunction, FamilyDataError, c_poly, transport
from .filtration import (
    PFunction,
    PiSets,
    fdf_matrices,
    fs_hodge_test,
    grv_exponent,
    grw_grv_membership,
    hodge_level,
    nu,
    p_function,
    v_cap_f_basis,
    v_ideal_structure,
    weight_level,
)
from .ratpoly import DensePoly, RootPoly, pochhammer
from .spaces import builtin, graded_character, ideal_weight_membership, ideal_weight_set, load_family

__all__ = [
    "AffineBFamily",
    "BFunction",
    "DensePoly",
    "FamilyDataError",
    "PFunction",
    "PiSets",
    "RootPoly",
    "builtin",
    "c_poly",
    "fdf_matrices",
    "fs_hodge_test",
    "graded_character",
    "grv_exponent",
    "grw_grv_membership",
    "hodge_level",
    "ideal_weight_membership",
    "ideal_weight_set",
    "load_family",
    "nu",
    "p_function",
    "pochhammer",
    "transport",
    "v_cap_f_basis",
    "v_ideal_structure",
    "weight_level",
]

__version__ = "0.1.0"
