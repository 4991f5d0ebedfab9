"""Generalized Bajraktarevic means: evaluation and comparison.

Structured inputs (pairs, families, measures, means) are JSON descriptor
strings; see the project README for the schemas.  Report-producing
functions return JSON strings.
"""

from ._core import (
    InputError,
    CapabilityError,
    NumericError,
    eval_implicit,
    eval_explicit,
    gini_mean,
    holder_mean,
    stolarsky_mean,
    delta_gini,
    capital_delta_gini,
    diagonal_derivatives,
    compare_local,
    gini_global,
    holder_compare,
    brute_force_compare,
    run_scenario,
    scenario_names,
)

__all__ = [
    "InputError",
    "CapabilityError",
    "NumericError",
    "eval_implicit",
    "eval_explicit",
    "gini_mean",
    "holder_mean",
    "stolarsky_mean",
    "delta_gini",
    "capital_delta_gini",
    "diagonal_derivatives",
    "compare_local",
    "gini_global",
    "holder_compare",
    "brute_force_compare",
    "run_scenario",
    "scenario_names",
]
