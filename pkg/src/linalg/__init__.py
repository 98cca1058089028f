"""
Exact linear algebra over Z, Z/n, F_p and finite-dimensional F_p-algebras
"""
from .echelon import echelon_form, hermite_rows, xgcd
from .matrix import Mat
from .rings import FinDimAlgebra, Integers, IntegersMod, PrimeField, RingSpec
from .smith import SmithForm, smith_form, smith_normal_form
from .solve import (
    flatten,
    hermite_normal_form,
    left_kernel,
    linear_map_matrix,
    solve_left,
    solve_linear,
    solve_middle_linear,
    solve_rows,
    unflatten,
)

__all__ = [
    "FinDimAlgebra",
    "Integers",
    "IntegersMod",
    "Mat",
    "PrimeField",
    "RingSpec",
    "SmithForm",
    "echelon_form",
    "flatten",
    "hermite_normal_form",
    "hermite_rows",
    "left_kernel",
    "linear_map_matrix",
    "smith_form",
    "smith_normal_form",
    "solve_left",
    "solve_linear",
    "solve_middle_linear",
    "solve_rows",
    "unflatten",
    "xgcd",
]
