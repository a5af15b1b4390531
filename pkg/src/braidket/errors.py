"""Exception types shared across the package.

The CLI maps these onto its exit-code taxonomy, so computation modules
should raise the most specific class that applies.
"""


class ParseError(ValueError):
    """Malformed braid word, PD code, or other user-supplied input."""


class SizeLimitError(ValueError):
    """Input exceeds one of the desk-scale guards (state counts, matrix dims)."""


class MismatchError(RuntimeError):
    """Two evaluation paths that must agree produced different values."""


class InvalidAngleError(ValueError):
    """Braiding angle outside the unitary range (delta^2 < 1)."""


class ExactDivisionError(ArithmeticError):
    """Laurent division left a remainder where exactness was required."""


class InvariantError(RuntimeError):
    """An internal algebraic invariant failed; indicates an implementation bug."""
