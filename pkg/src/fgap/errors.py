"""Error types shared across the package.

Exit-code mapping used by the CLI: InvalidInputError and its subclasses are
input/validation failures (exit 1), AmbiguityError is a certified-precision
failure (exit 2).
"""


class InvalidInputError(ValueError):
    """Input violates a documented precondition."""


class UnsupportedRingError(InvalidInputError):
    """Ring is valid but outside the supported class (e.g. noncommutative)."""


class DegreeCapError(InvalidInputError):
    """Polynomial degree exceeds the factorization cap."""


class AmbiguityError(ArithmeticError):
    """A sign or floor could not be certified within the precision cap."""
