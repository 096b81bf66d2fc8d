"""Exception types shared across the library.

``DomainError`` and its subclasses mark mathematically meaningful
rejections (a critical level, a vector outside the coweight lattice);
``RationalSyntaxError`` and ``LieTypeError`` mark malformed input.  The
CLI maps the former to exit code 1 and the latter to exit code 2.
"""


class InputError(ValueError):
    """Malformed input: bad token, bad shape, bad name."""


class LieTypeError(InputError):
    """Invalid (family, rank) combination."""


class RationalSyntaxError(InputError):
    """String is not an exact rational of the form "a" or "a/b"."""


class DomainError(ValueError):
    """Argument lies outside the mathematical domain of an operation."""


class CriticalLevelError(DomainError):
    """Level equals minus the dual Coxeter number."""


class NotAdmissibleError(DomainError):
    """Level fails the admissibility criterion."""


class GroupTooLargeError(RuntimeError):
    """Weyl group enumeration refused: order exceeds the configured cap."""


class SearchBoundError(RuntimeError):
    """Internal certification of a bounded search failed."""
