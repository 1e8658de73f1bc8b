"""Exception types shared by all hamsense modules."""


class InvalidParameterError(ValueError):
    """An argument violates a documented precondition."""


class CapacityExceededError(RuntimeError):
    """The requested computation is larger than the configured limits allow."""


class FormatError(ValueError):
    """A file or text blob does not parse under one of the documented formats."""

    def __init__(self, message, line=None, position=None):
        loc = []
        if line is not None:
            loc.append(f"line {line}")
        if position is not None:
            loc.append(f"position {position}")
        if loc:
            message = f"{message} ({', '.join(loc)})"
        super().__init__(message)
        self.line = line
        self.position = position
