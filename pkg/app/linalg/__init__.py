from app.linalg.gf2 import (
    GF2Matrix,
    RowReduceResult,
    image_basis,
    in_row_space,
    kernel_basis,
    rank,
    row_reduce,
    solve,
)
from app.linalg.subquotient import Subquotient, induced_map, subquotient, whole_space, zero_space

__all__ = [
    "GF2Matrix",
    "RowReduceResult",
    "Subquotient",
    "image_basis",
    "in_row_space",
    "induced_map",
    "kernel_basis",
    "rank",
    "row_reduce",
    "solve",
    "subquotient",
    "whole_space",
    "zero_space",
]
