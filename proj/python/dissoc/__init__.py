"""Dissociated-set toolkit: greedy generators, class checkers, exact ladder
densities, and the random dyadic family experiment."""

from ._dissoc import (
    BudgetError,
    CapacityError,
    InvariantViolation,
    PrecisionError,
    big_u,
    c_star,
    central_binomial,
    classify,
    gp_experiment,
    greedy,
    has_three_term_gp,
    in_nc,
    interval_density,
    is_dissociated,
    is_dk_set,
    isoperimetric_check,
    max_multinomial,
    min_representation_bound,
    n0_upper_bound,
    preset_shrinkage,
    size_bound_rhs,
    theoretical_density,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetError",
    "CapacityError",
    "InvariantViolation",
    "PrecisionError",
    "big_u",
    "c_star",
    "central_binomial",
    "classify",
    "gp_experiment",
    "greedy",
    "has_three_term_gp",
    "in_nc",
    "interval_density",
    "is_dissociated",
    "is_dk_set",
    "isoperimetric_check",
    "max_multinomial",
    "min_representation_bound",
    "n0_upper_bound",
    "preset_shrinkage",
    "size_bound_rhs",
    "theoretical_density",
]
