"""Exact arithmetic for degenerate special numbers and polynomials.

Computes degenerate Stirling numbers of both kinds, degenerate
(hyper)harmonic numbers, and degenerate Bernoulli, Euler, Bell, and Fubini
polynomials over exact rationals, and mechanically checks the algebraic
identities relating them over parameter grids with counterexample
reporting.
"""

from .algebra import (
    Poly,
    Rational,
    X,
    binom_poly,
    dfact,
    ffact_int,
    format_rational,
    gfact_falling,
    gfact_rising,
    parse_rational,
    poly_derivative,
    poly_eval,
    poly_int_over_t,
)
from .identities import (
    ALL_IDENTITY_IDS,
    BindingError,
    CheckResult,
    DEFAULT_GRID,
    Grid,
    SuiteReport,
    Tables,
    UnknownIdentityError,
    list_identities,
    run_identity,
    run_suite,
    suite_report_json,
)
from .sequences import (
    SequenceValue,
    StirlingTriangle,
    bell_from_triangle,
    dbell_poly,
    dbernoulli_poly,
    dbernoulli_poly_stirling,
    deuler_poly,
    dfubini_poly,
    dfubini_series_oracle,
    dharmonic,
    dhyperharmonic,
    fubini_from_triangle,
    power_sum,
    s1_triangle,
    s2_triangle,
    sequence_value,
    stirling_series_oracle,
)
from .series import (
    Series,
    binom_series,
    dexp,
    dlog,
    dpolylog,
    identity_series,
    ser_comp_inverse,
    ser_compose,
    ser_mul,
    ser_reciprocal,
    ser_shift_down,
)

__version__ = "0.1.0"
