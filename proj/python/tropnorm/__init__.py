"""Exact normalization of tropical polynomials on rational polytopes."""

from ._core import (
    CanonicalForm,
    MonoidPair,
    MonomialIdeal,
    TropPoly,
    cancels,
    canonical_form,
    dependence_oracle,
    essential_slopes,
    eval,
    ideal_power,
    ideal_product,
    ideal_sum,
    integral_closure,
    integral_over,
    is_integrally_closed,
    join,
    linearity_cells,
    monoid_member,
    plus,
    pointwise_eq,
    pointwise_leq,
    proptest_suites,
    reduction_number,
    run_proptest,
    saturate,
    saturate_coeff,
    scale,
    syntactic_eq,
    syntactic_leq,
)

__all__ = [
    "CanonicalForm",
    "MonoidPair",
    "MonomialIdeal",
    "TropPoly",
    "cancels",
    "canonical_form",
    "dependence_oracle",
    "essential_slopes",
    "eval",
    "ideal_power",
    "ideal_product",
    "ideal_sum",
    "integral_closure",
    "integral_over",
    "is_integrally_closed",
    "join",
    "linearity_cells",
    "monoid_member",
    "plus",
    "pointwise_eq",
    "pointwise_leq",
    "proptest_suites",
    "reduction_number",
    "run_proptest",
    "saturate",
    "saturate_coeff",
    "scale",
    "syntactic_eq",
    "syntactic_leq",
]

__version__ = "0.1.0"
