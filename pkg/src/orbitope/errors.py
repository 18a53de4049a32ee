"""Exception types shared across the package.

Each class maps to one failure mode of the public operations; the CLI
translates them into exit codes (precondition failures -> 3, resource
caps -> 4).
"""


class OrbitopeError(Exception):
    """Base class for all package-specific errors."""


class PreconditionError(OrbitopeError):
    """An operation was called on input outside its stated domain."""


class SingularGramError(PreconditionError):
    """The Gram matrix of a vector family is singular (family does not span)."""


class NotASymmetryError(PreconditionError):
    """A permutation does not act as a linear symmetry of the family."""


class NotGeneratingError(PreconditionError):
    """The (centered) orbit of the point does not span the ambient space."""


class NoGeneratingPointError(PreconditionError):
    """No point of the space generates a full-dimensional orbit."""


class NotIdempotentError(PreconditionError):
    """A group algebra element fails f*f == f."""


class NotOrthogonalError(PreconditionError):
    """An idempotent fails the orthogonality condition <1-f, f> == 0."""


class BoundViolatedError(OrbitopeError):
    """An enumeration contradicts a proved cut-set size bound (internal bug)."""


class ResourceCapError(OrbitopeError):
    """A computation exceeds a configured size cap."""


class OrderExceededError(ResourceCapError):
    """Group closure passed the configured maximum order."""


class DimensionTooLargeError(ResourceCapError):
    """An exact search is over the configured dimension cap."""
