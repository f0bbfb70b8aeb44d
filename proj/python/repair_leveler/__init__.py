"""Levelling of annual preventive equipment repair plans.

Plans are lists of rows (one per item) of non-negative monthly repair hours.
Exact values such as means and deviations are returned as ``fractions.Fraction``.
"""

from ._core import (
    BoundaryError,
    BudgetExceededError,
    ConstraintError,
    FeasibilityError,
    LevelerError,
    ParseError,
    UnsupportedLengthError,
    ValidationError,
    apply_shift_matrix,
    apply_transfers,
    brute_force_shifts,
    brute_force_subset,
    brute_force_transfers,
    column_sums,
    deviation,
    mean_load,
    parse_plan,
    realize_transfers,
    run_pipeline,
    solve,
    standard_form,
    subset_select,
)

__all__ = [
    "BoundaryError",
    "BudgetExceededError",
    "ConstraintError",
    "FeasibilityError",
    "LevelerError",
    "ParseError",
    "UnsupportedLengthError",
    "ValidationError",
    "apply_shift_matrix",
    "apply_transfers",
    "brute_force_shifts",
    "brute_force_subset",
    "brute_force_transfers",
    "column_sums",
    "deviation",
    "mean_load",
    "parse_plan",
    "realize_transfers",
    "run_pipeline",
    "solve",
    "standard_form",
    "subset_select",
]
