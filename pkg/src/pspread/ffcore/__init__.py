"""Finite-field arithmetic, companion-matrix algebras and linear algebra over F_q."""

from .algebra import (
    algebra_element,
    algebra_to_ext,
    companion_matrix,
    ext_to_algebra,
    is_algebra_element,
    lift_last_rows,
)
from .fields import (
    BaseField,
    ExtElem,
    FieldCtx,
    as_base_field,
    base_field,
    field_for,
    is_irreducible,
    make_field,
    prime_power,
)
from .matrix import (
    RREF,
    as_matrix,
    identity,
    is_invertible,
    last_rows,
    matadd,
    matmul,
    matpow,
    matsub,
    nullspace,
    rank,
    rref,
    scalar_mul,
    submatrix,
    zeros,
)
from .poly import eval_poly_matrix, smallest_irreducible

__all__ = [
    "BaseField", "ExtElem", "FieldCtx", "RREF",
    "algebra_element", "algebra_to_ext", "as_base_field", "as_matrix", "base_field",
    "companion_matrix", "eval_poly_matrix", "ext_to_algebra", "field_for", "identity",
    "is_algebra_element", "is_invertible", "is_irreducible", "last_rows", "lift_last_rows",
    "make_field", "matadd", "matmul", "matpow", "matsub", "nullspace", "prime_power", "rank",
    "rref", "scalar_mul", "smallest_irreducible", "submatrix", "zeros",
]
