"""Exact computations in the sheaf categories of rainbow-closed positive braids.

Objects are points of a braid variety over a field, graded morphisms are
the kernel and cokernel of an explicit linear map, and compositions are
Hadamard or braided products of representatives.
"""

from .braid import BraidWord, parse_braid, permutation_of, thurston_bennequin, is_knot
from .category import Category, ExtClass, GradedHom, SheafObject, compose, graded_hom
from .errors import (
    BudgetExceeded,
    FieldError,
    IllegalDegree,
    InvalidPoint,
    InvariantViolation,
    LegcatError,
    ParseError,
    ShapeError,
    SingularMatrixError,
)
from .exactlin import Matrix, PrimeField, Rationals, parse_field
from .variety import enumerate_reduced, enumerate_variety, is_member, orbit_equivalent, torus_act

__version__ = "0.1.0"
