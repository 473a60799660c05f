"""Exception hierarchy shared by all modules."""


class McaError(Exception):
    pass


class BoundExceedsSet(McaError, ValueError):
    """An mc-atom or c-atom whose bounds cannot be met by its atom set."""


class InvalidAtom(McaError, ValueError):
    pass


class LimitExceeded(McaError):
    """A brute-force enumeration would exceed the configured size limit."""

    def __init__(self, size: int, limit: int, what: str = "atoms"):
        super().__init__(f"{size} {what} exceeds the enumeration limit of {limit}")
        self.size = size
        self.limit = limit


class NotHorn(McaError):
    pass


class NotDeterministic(McaError):
    pass


class NotAModel(McaError):
    pass


class HasConstraints(McaError):
    pass


class ParseError(McaError):
    def __init__(self, line: int, column: int, message: str, expected: str = ""):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column
        self.message = message
        self.expected = expected
