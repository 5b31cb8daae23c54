"""Waring ranks and power-sum decompositions of forms.

Polynomials are passed as text such as ``"x^6 + 3*x*y^5 + y^6"``. Decompositions
come back as dicts (the JSON certificate layout of the ``waring`` tool) and can be
re-checked with :func:`verify`.
"""

from ._waring import (
    AmbiguityError,
    InternalConsistencyError,
    ModeMismatch,
    ParseError,
    PreconditionError,
    WaringError,
    canonical_form,
    froeberg_series,
    generic_k_rank,
    krank_bound,
    monomial_factor,
    run_cli,
    secant_codim,
    si_thresholds,
    sylvester,
    three_cubes,
    verify,
)

__all__ = [
    "AmbiguityError",
    "InternalConsistencyError",
    "ModeMismatch",
    "ParseError",
    "PreconditionError",
    "WaringError",
    "canonical_form",
    "froeberg_series",
    "generic_k_rank",
    "krank_bound",
    "monomial_factor",
    "run_cli",
    "secant_codim",
    "si_thresholds",
    "sylvester",
    "three_cubes",
    "verify",
]
