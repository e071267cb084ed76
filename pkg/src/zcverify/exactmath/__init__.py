"""Exact rational, cyclotomic and integer-matrix arithmetic, plus bounded
integer-point enumeration. No floating point anywhere."""

from .cyclo import (
    Cyclotomic,
    Rational,
    cyclo_canonicalize,
    cyclotomic_polynomial,
    divisors,
    euler_phi,
    galois_apply,
    lcm,
    moebius,
    prime_factors,
    rational_trace,
)
from .intmat import IntMatrix, hermite_normal_form, integer_solve, smith_normal_form
from .linsys import LinearSystem, UnboundedSystemError, enumerate_integer_points

__all__ = [
    "Cyclotomic",
    "Rational",
    "IntMatrix",
    "LinearSystem",
    "UnboundedSystemError",
    "cyclo_canonicalize",
    "cyclotomic_polynomial",
    "divisors",
    "euler_phi",
    "galois_apply",
    "hermite_normal_form",
    "integer_solve",
    "smith_normal_form",
    "enumerate_integer_points",
    "lcm",
    "moebius",
    "prime_factors",
    "rational_trace",
]
