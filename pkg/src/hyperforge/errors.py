"""Exception hierarchy shared by every module."""


class HyperforgeError(Exception):
    """Base class for all library errors."""


class DomainError(HyperforgeError, ValueError):
    """An argument lies outside the domain of an operation."""


class ArityError(DomainError):
    """A tuple has the wrong length for the operation it is applied to."""


class EmptySubsetError(DomainError):
    """An operation that needs a non-empty subset received the empty one."""


class PreconditionError(HyperforgeError):
    """A documented precondition (identity, congruence, ...) does not hold."""


class ResourceError(HyperforgeError):
    """A search would exceed its configured cap."""


class ConsistencyError(HyperforgeError):
    """Internal cross-validation failed; indicates a bug, not bad input."""


class StructureFormatError(HyperforgeError):
    """A structure file failed to parse or validate.

    ``flat_index`` and ``tuple`` locate the offending table entry when the
    problem is tied to one.
    """

    def __init__(self, message, flat_index=None, tuple=None):
        super().__init__(message)
        self.flat_index = flat_index
        self.tuple = tuple
