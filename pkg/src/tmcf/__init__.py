"""Continued fractions in Q((1/T)) of the series attached to the Thue-Morse-type words W(i)."""
from .cfengine import (
    CertifiedExpansion,
    ContinuedFraction,
    ConvergentPair,
    approximation_order,
    cf_of_rational,
    cf_of_series,
    convergents,
    fold,
)
from .conjecture import (
    b_poly,
    lambda_coeff,
    nu2,
    p_poly,
    p_values_at_one,
    predicted_degree,
    predicted_quotient,
)
from .exactalg import (
    LaurentSeries,
    Polynomial,
    T,
    format_polynomial,
    parse_polynomial,
    poly_compose_power,
    poly_derivative,
    poly_divrem,
    poly_eval,
    series_from_word,
    series_invert,
    series_mul,
    series_sub,
)
from .verify import irrationality_estimate, required_precision, verify_expansion
from .words import letter_at, word_prefix, word_step

__version__ = "0.1.0"
