"""Moments of folded and zero-truncated Student's t variates."""

from ._core import (
    DomainError,
    Moments,
    NonexistentMoment,
    OracleError,
    cdf,
    mean_folded,
    mean_truncated,
    moments_folded,
    moments_truncated,
    pdf,
    prob_positive,
    quad_moment,
    quantile,
    sample,
    second_moment_truncated,
    sweep,
    variance_folded,
    variance_truncated,
    verify,
)

__all__ = [
    "DomainError",
    "Moments",
    "NonexistentMoment",
    "OracleError",
    "cdf",
    "mean_folded",
    "mean_truncated",
    "moments_folded",
    "moments_truncated",
    "pdf",
    "prob_positive",
    "quad_moment",
    "quantile",
    "sample",
    "second_moment_truncated",
    "sweep",
    "variance_folded",
    "variance_truncated",
    "verify",
]
