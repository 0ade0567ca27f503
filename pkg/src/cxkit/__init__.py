"""Twisted Coxeter group computations with certified word reduction."""

from .coxeter import CoxeterSystem, WeylElement, build_system, format_word, parse_word
from .errors import (
    BudgetExceeded,
    CoxeterMatrixViolation,
    CxkitError,
    GuardExceeded,
    ParseError,
)
from .polynomial import QPolynomial
from .reduction import ReductionResult, check_trace, reduce_word, verify_trace
from .twist import Twist, build_twist, registry_twist

__all__ = [
    "BudgetExceeded",
    "CoxeterMatrixViolation",
    "CoxeterSystem",
    "CxkitError",
    "GuardExceeded",
    "ParseError",
    "QPolynomial",
    "ReductionResult",
    "Twist",
    "WeylElement",
    "build_system",
    "build_twist",
    "check_trace",
    "format_word",
    "parse_word",
    "reduce_word",
    "registry_twist",
    "verify_trace",
]

__version__ = "0.1.0"
