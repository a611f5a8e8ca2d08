"""Transformations of the restricted 3F2 family and their corollaries."""

from src.hyper3f2.corollaries import (
    bailey_involution_check,
    bailey_slater_check,
    bailey_slater_params,
    dual_symbols_shared_rows,
    family_params,
    family_stability_check,
    reduce_to_2f1,
    reduction_e,
    shared_exponent_rows,
    very_well_poised_check,
)
from src.hyper3f2.poisedness import PoisednessClass, classify_poisedness
from src.hyper3f2.transforms import (
    EULER_LIKE,
    PFAFF_LIKE,
    SWAP_UPPER,
    THREEF2_FAMILY,
    apply_3f2_rule,
    euler_e_map,
    euler_like,
    pfaff_e_map,
    pfaff_like,
    restricted_group,
    transform_residual,
)

__all__ = [
    "EULER_LIKE",
    "PFAFF_LIKE",
    "SWAP_UPPER",
    "THREEF2_FAMILY",
    "PoisednessClass",
    "apply_3f2_rule",
    "bailey_involution_check",
    "bailey_slater_check",
    "bailey_slater_params",
    "classify_poisedness",
    "dual_symbols_shared_rows",
    "euler_e_map",
    "euler_like",
    "family_params",
    "family_stability_check",
    "pfaff_e_map",
    "pfaff_like",
    "reduce_to_2f1",
    "reduction_e",
    "restricted_group",
    "shared_exponent_rows",
    "transform_residual",
    "very_well_poised_check",
]
