"""Transformation rules of 2F1 and Hl, and the quadratic lifts of Hl.

Symbolic rendering lives in ``src.transforms.render`` and is imported on
demand.
"""

from src.transforms.closure import cayley_graph, generate_group, generator_word, is_closed
from src.transforms.gauss import (
    GAUSS_FAMILY,
    apply_gauss_rule,
    compose_gauss_rules,
    gauss_generators,
    kummer_group,
    kummer_rules,
)
from src.transforms.heun import (
    AFFINE_SHADOWS,
    HEUN_FAMILY,
    QBar,
    apply_hl_rule,
    compose_hl_rules,
    derivative_identity_check,
    derivative_qprime,
    fhomotopy_hl_rule_at_1,
    generate_hl_group,
    he_operator_residual,
    local_solution_at_a,
    local_solution_residual,
    mobius_group,
    mobius_hl_rules,
    q_of_qbar,
    qbar_naturality_residual,
    qbar_of,
)
from src.transforms.quadratic import (
    QuadraticLiftData,
    biquad_map_S,
    biquadratic_rule,
    constraint_residual,
    h_duplication_check,
    lift_from_t,
    quad_map_R,
    quadratic_rule,
)
from src.transforms.rule import (
    PowerFactor,
    RuleFamily,
    RuleStep,
    TransformRule,
    apply_rule,
    identity_rule,
    infer_label,
)
from src.transforms.signed_permutation import SignedPermutation, coxeter_order

__all__ = [
    "AFFINE_SHADOWS",
    "GAUSS_FAMILY",
    "HEUN_FAMILY",
    "PowerFactor",
    "QBar",
    "QuadraticLiftData",
    "RuleFamily",
    "RuleStep",
    "SignedPermutation",
    "TransformRule",
    "apply_gauss_rule",
    "apply_hl_rule",
    "apply_rule",
    "biquad_map_S",
    "biquadratic_rule",
    "cayley_graph",
    "compose_gauss_rules",
    "compose_hl_rules",
    "constraint_residual",
    "coxeter_order",
    "derivative_identity_check",
    "derivative_qprime",
    "fhomotopy_hl_rule_at_1",
    "gauss_generators",
    "generate_group",
    "generate_hl_group",
    "generator_word",
    "h_duplication_check",
    "he_operator_residual",
    "identity_rule",
    "infer_label",
    "is_closed",
    "kummer_group",
    "kummer_rules",
    "lift_from_t",
    "local_solution_at_a",
    "local_solution_residual",
    "mobius_group",
    "mobius_hl_rules",
    "q_of_qbar",
    "qbar_naturality_residual",
    "qbar_of",
    "quad_map_R",
    "quadratic_rule",
]
