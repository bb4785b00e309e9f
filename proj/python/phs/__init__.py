"""Pliable regression under a shared horseshoe prior."""

from phs._core import (
    credible_interval,
    fit_gaussian,
    fit_logistic,
    sample_polya_gamma_1,
    select_variables,
    simulate,
)

__all__ = [
    "credible_interval",
    "fit_gaussian",
    "fit_logistic",
    "sample_polya_gamma_1",
    "select_variables",
    "simulate",
]
