"""Exact lengths and s-multiplicities of 2x2 determinantal rings under
mixed ordinary and Frobenius powers of the maximal ideal.

Everything is computed in exact arithmetic, and every headline number
can be reached by independent routes that the test suite plays against
each other.
"""

from .exactmath import Polynomial, binom, interpolate, monus
from .length import (
    LengthQuery,
    length_closed,
    length_oracle,
    length_tu,
    regular_length,
)
from .multiplicity import (
    MultiplicityResult,
    analyze,
    e_s_value,
    fit_length_polynomial,
    h_s_value,
    normalizer,
)

__version__ = "0.1.0"

__all__ = [
    "Polynomial",
    "binom",
    "interpolate",
    "monus",
    "LengthQuery",
    "length_closed",
    "length_oracle",
    "length_tu",
    "regular_length",
    "MultiplicityResult",
    "analyze",
    "e_s_value",
    "fit_length_polynomial",
    "h_s_value",
    "normalizer",
    "__version__",
]
