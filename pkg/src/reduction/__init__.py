"""Reduction of Hl to 3F2 on the apparent-singularity curve."""

from src.reduction.curve import (
    ApparentCurvePoint,
    apparent_row_residual,
    contiguity_residual,
    curve_contiguity_residual,
    curve_point,
    curve_point_residual,
    curve_residual,
    eval_G,
    g_equals_3f2_residual,
    g_two_representations,
    heun_to_gauss_params,
    heun_to_gauss_residual,
    punctures,
    qprime_residual,
    relabeled,
)
from src.reduction.factorization import (
    difference_factorization_residual,
    differential_factorization_residual,
    factored_recurrence_row,
    heun_recurrence_row,
)

__all__ = [
    "ApparentCurvePoint",
    "apparent_row_residual",
    "contiguity_residual",
    "curve_contiguity_residual",
    "curve_point",
    "curve_point_residual",
    "curve_residual",
    "difference_factorization_residual",
    "differential_factorization_residual",
    "eval_G",
    "factored_recurrence_row",
    "g_equals_3f2_residual",
    "g_two_representations",
    "heun_recurrence_row",
    "heun_to_gauss_params",
    "heun_to_gauss_residual",
    "punctures",
    "qprime_residual",
    "relabeled",
]
