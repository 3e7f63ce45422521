"""Exception classes for ytc."""


class YTCError(Exception):
    """Base exception for all ytc errors."""

    pass


class DomainError(YTCError):
    """Raised when a request is mathematically undefined."""

    pass


class PreconditionError(DomainError):
    """Raised when an operation is used outside the regime it covers."""

    pass


class PartitionParseError(DomainError):
    """Raised when partition text cannot be parsed."""

    def __init__(self, message: str, index: int) -> None:
        super().__init__(message)
        self.index = index


class CapacityError(YTCError):
    """Raised when an enumeration bound is exceeded."""

    def __init__(self, what: str, value: int, bound: int) -> None:
        super().__init__(f"{what} is {value}, above the bound of {bound}")
        self.what = what
        self.value = value
        self.bound = bound


class InternalError(YTCError):
    """Raised when an internal invariant is violated."""

    pass
