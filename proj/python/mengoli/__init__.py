"""Closed-form sums of 1/prod(n + q_i) over distinct rational shifts."""

from ._core import (
    DEFAULT_PRECISION,
    EvalResult,
    gauss_sum,
    gauss_sum_shifted,
    multi_sum,
    pair_sum,
    pair_sum_digamma,
    pair_sum_int,
    truncated_sum,
    verify,
    zeta4_closed_form,
    zeta_limit,
)

__all__ = [
    "DEFAULT_PRECISION",
    "EvalResult",
    "gauss_sum",
    "gauss_sum_shifted",
    "multi_sum",
    "pair_sum",
    "pair_sum_digamma",
    "pair_sum_int",
    "truncated_sum",
    "verify",
    "zeta4_closed_form",
    "zeta_limit",
]
