"""Exact i-column counting and binomial identity verification."""

from ._core import (
    __version__,
    bernoulli_row,
    binom,
    build_incidence,
    count_binary_bivariate,
    count_direct,
    count_inclusion_exclusion,
    count_subsets_brute,
    count_subsets_formula,
    count_uniform,
    eval_identity,
    identity_names,
    identity_params,
    mismatch_count,
    theorem_input_table,
    verify_counting,
    verify_identity,
    verify_pipeline,
)

__all__ = [
    "__version__",
    "bernoulli_row",
    "binom",
    "build_incidence",
    "count_binary_bivariate",
    "count_direct",
    "count_inclusion_exclusion",
    "count_subsets_brute",
    "count_subsets_formula",
    "count_uniform",
    "eval_identity",
    "identity_names",
    "identity_params",
    "mismatch_count",
    "theorem_input_table",
    "verify_counting",
    "verify_identity",
    "verify_pipeline",
]
