"""Exact linear algebra substrate: integer normal forms and field elimination."""

from . import fields
from .integers import (
    HermiteForm,
    IntMatrix,
    SmithForm,
    hermite,
    int_kernel,
    int_solve,
    int_solve_matrix,
    lattice_rank,
    smith,
)

__all__ = [
    "IntMatrix",
    "HermiteForm",
    "SmithForm",
    "hermite",
    "smith",
    "int_solve",
    "int_solve_matrix",
    "int_kernel",
    "lattice_rank",
    "fields",
]
