from app.complexes.algebra import ALGEBRAS, BETA, DIAGONAL, KHOVANOV, EdgeAlgebra, change_of_basis
from app.complexes.cube import (
    BigradedComplex,
    StateBasis,
    build_khovanov,
    build_reduced,
    build_state_basis,
    euler_characteristic,
    verify_complex,
)
from app.complexes.filtered import (
    DiagonalComplex,
    barnatan_column,
    build_barnatan_column,
    build_diagonal,
    build_filtered,
    filtered_from_complex,
    total_complex,
)

__all__ = [
    "ALGEBRAS",
    "BETA",
    "BigradedComplex",
    "DIAGONAL",
    "DiagonalComplex",
    "EdgeAlgebra",
    "KHOVANOV",
    "StateBasis",
    "barnatan_column",
    "build_barnatan_column",
    "build_diagonal",
    "build_filtered",
    "build_khovanov",
    "build_reduced",
    "build_state_basis",
    "change_of_basis",
    "euler_characteristic",
    "filtered_from_complex",
    "total_complex",
    "verify_complex",
]
