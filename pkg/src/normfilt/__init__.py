"""Exact integral-closure filtration toolkit for monomial and semigroup-ring ideals."""

from .backends import PolynomialBackend, SemigroupBackend
from .errors import (
    HorizonError,
    InputError,
    NormfiltError,
    NotMPrimary,
    PreconditionError,
    UnsupportedDimension,
)
from .filtration import Filtration, fit_coefficients, length_table, series_coeff
from .theorems import CHECKS, EntryData, analyze, run_checks

__version__ = "1.0.0"

__all__ = [
    "CHECKS",
    "EntryData",
    "Filtration",
    "HorizonError",
    "InputError",
    "NormfiltError",
    "NotMPrimary",
    "PolynomialBackend",
    "PreconditionError",
    "SemigroupBackend",
    "UnsupportedDimension",
    "analyze",
    "fit_coefficients",
    "length_table",
    "run_checks",
    "series_coeff",
    "__version__",
]
