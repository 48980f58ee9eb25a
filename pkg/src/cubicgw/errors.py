"""Exception types shared across the package."""


class CubicGWError(Exception):
    """Base class for all package-specific errors."""


class BoundMismatchError(CubicGWError):
    """Two truncated series (or ring elements) with different bounds were combined."""


class NonlinearTermError(CubicGWError):
    """A product of two linear forms would create an unknown-times-unknown term.

    This never happens on legal inputs: an unknown of working degree d only
    occurs on the t^d coefficient, so such a product belongs at t^(2d) and
    should have been dropped by truncation before the scalars were multiplied.
    Seeing this error means the caller's truncation logic is broken.
    """


class UnsolvedDegreeError(CubicGWError):
    """A concrete lookup reached past the solved part of the table."""


class TableCommitError(CubicGWError):
    """A degree commit was malformed: out-of-order degree or wrong unknown set."""


class SlabConfigError(CubicGWError):
    """A slab coefficient needed for seeding is not configured."""


class GradingError(CubicGWError):
    """A punctured-count query violates the contact-order grading."""


class UnderdeterminedSystemError(CubicGWError):
    """The constraint system left some unknowns free."""

    def __init__(self, message, free_unknowns=()):
        super().__init__(message)
        self.free_unknowns = tuple(free_unknowns)


class InconsistentSystemError(CubicGWError):
    """The constraint system admits no exact solution."""

    def __init__(self, message, provenance=None):
        super().__init__(message)
        self.provenance = provenance
