"""Exception hierarchy shared by every module.

The CLI maps these onto exit codes: precondition problems exit with 2,
exhausted budgets with 3 and broken internal invariants with 1.
"""


class BraidRackError(Exception):
    """Base class for all errors raised by this package."""


class PreconditionError(BraidRackError, ValueError):
    """An input violates the documented precondition of an operation."""


class StructureError(PreconditionError):
    """A table or file is malformed (wrong shape, index out of range...)."""


class ResourceError(BraidRackError, RuntimeError):
    """A configured enumeration or memory budget was exceeded."""

    def __init__(self, message, frontier=None):
        super().__init__(message)
        self.frontier = frontier


class InvariantError(BraidRackError, AssertionError):
    """An internal consistency check failed. Always a bug."""
