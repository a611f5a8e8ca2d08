"""Numeric kernel: parameter records, series coefficients and evaluation."""

from src.kernel.classify import classify_2term, classify_3term, forward_2term, forward_3term
from src.kernel.params import (
    EvalPolicy,
    GaussParams,
    HeunParams,
    QuadraticPoly,
    Restricted3F2Params,
    ThreeF2Params,
    is_nonpositive_integer,
)
from src.kernel.series import (
    DEFAULT_POLICY,
    CoefficientSequence,
    eval_2F1,
    eval_3F2,
    eval_Hl,
    eval_series,
    gauss_coeffs,
    heun_coeffs,
    iter_heun,
    p3f2_coeffs,
    series_derivative,
)

__all__ = [
    "DEFAULT_POLICY",
    "CoefficientSequence",
    "EvalPolicy",
    "GaussParams",
    "HeunParams",
    "QuadraticPoly",
    "Restricted3F2Params",
    "ThreeF2Params",
    "classify_2term",
    "classify_3term",
    "eval_2F1",
    "eval_3F2",
    "eval_Hl",
    "eval_series",
    "forward_2term",
    "forward_3term",
    "gauss_coeffs",
    "heun_coeffs",
    "is_nonpositive_integer",
    "iter_heun",
    "p3f2_coeffs",
    "series_derivative",
]
