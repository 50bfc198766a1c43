"""Exception classes shared across the package.

The CLI maps these to its exit-code contract: input/syntax problems exit 2,
validation failures (grading or axioms) exit 3, precondition failures exit 4,
inconclusive results exit 5.
"""


class InputError(ValueError):
    """Malformed input: dimension mismatch, bad parameters, bad syntax."""


class GradingError(InputError):
    """Data violates the parity grading (cross-parity entries and the like)."""

    exit_code = 3


class AxiomError(ValueError):
    """An algebra or form failed its defining axioms; carries the report."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class PreconditionError(ValueError):
    """An operation was called outside its stated preconditions."""


class InconclusiveError(RuntimeError):
    """A bounded search could not decide; never a silent guess."""
