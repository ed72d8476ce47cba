"""Exception hierarchy shared by the library and the CLI exit-code mapping."""

from __future__ import annotations


class LegcatError(Exception):
    """Base class for all library errors."""


class ParseError(LegcatError, ValueError):
    """Malformed braid, field or point specification."""


class ShapeError(LegcatError, ValueError):
    """Dimension or length mismatch between operands."""


class SingularMatrixError(LegcatError, ArithmeticError):
    pass


class BudgetExceeded(LegcatError, RuntimeError):
    """A brute-force sweep would exceed the configured work budget."""


class InvalidPoint(LegcatError, ValueError):
    """A tuple that is not a point of the braid variety."""


class IllegalDegree(LegcatError, ValueError):
    """Composition of two degree-1 classes was requested.

    Ext^p vanishes for p >= 2 (hereditary-type property), so the product
    of two degree-1 classes has no target.
    """


class InvariantViolation(LegcatError, AssertionError):
    """A structural property that should always hold was observed to fail."""


class FieldError(LegcatError, ValueError):
    """Operation needs a finite field but was given Q (or vice versa)."""
