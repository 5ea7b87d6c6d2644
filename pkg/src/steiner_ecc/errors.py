"""Exception hierarchy shared by every algorithm module."""


class SteinerEccError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(SteinerEccError):
    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


class PreconditionError(SteinerEccError):
    """An input violates an algorithm's precondition."""


class DisconnectedError(PreconditionError):
    pass


class InvalidK(PreconditionError):
    pass


class NotATreeError(PreconditionError):
    pass


class NotBlockGraphError(PreconditionError):
    pass


class WeightedUnsupportedError(PreconditionError):
    pass


class TooSmallError(PreconditionError):
    pass


class TooLargeError(PreconditionError):
    pass


class CyclomaticCapExceeded(SteinerEccError):
    def __init__(self, nu: int, cap: int):
        super().__init__(f"cyclomatic number {nu} exceeds cap {cap}")
        self.nu = nu
        self.cap = cap
