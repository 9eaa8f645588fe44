"""Exact p-Bernoulli numbers computed by recurrence and by closed-form EGF."""

from ._core import (
    PBernTable,
    PoleCancellationError,
    Series,
    SeriesDivisionByZero,
    TruncationError,
    VerifyReport,
    binomial,
    check_recurrence,
    classical_bernoulli,
    closed_form_egf,
    closed_form_laurent,
    closed_form_table,
    exp_linear,
    expm1,
    factorial,
    harmonic,
    recurrence_table,
    run_cli,
    verify_base_case,
    verify_ode,
    verify_pole_cancellation,
    verify_theorem,
)

__all__ = [
    "PBernTable",
    "PoleCancellationError",
    "Series",
    "SeriesDivisionByZero",
    "TruncationError",
    "VerifyReport",
    "binomial",
    "check_recurrence",
    "classical_bernoulli",
    "closed_form_egf",
    "closed_form_laurent",
    "closed_form_table",
    "exp_linear",
    "expm1",
    "factorial",
    "harmonic",
    "recurrence_table",
    "run_cli",
    "verify_base_case",
    "verify_ode",
    "verify_pole_cancellation",
    "verify_theorem",
]
