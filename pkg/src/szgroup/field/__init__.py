"""Finite fields of characteristic 2 used throughout the package."""
from .dlog import discrete_log, mult_order, solve_norm_equation
from .ext import QuadExt, ext2, ext4
from .gf import (
    PRIMITIVE_POLYS,
    FieldParams,
    factor_qpow_minus1,
    frobenius_t,
    in_subfield,
    make_field,
    sqrt,
)
from .ntheory import factor_int
from .poly import roots_univariate

__all__ = [
    "FieldParams", "QuadExt", "PRIMITIVE_POLYS", "make_field", "ext2", "ext4",
    "frobenius_t", "sqrt", "in_subfield", "factor_qpow_minus1", "factor_int",
    "discrete_log", "mult_order", "solve_norm_equation", "roots_univariate",
]
