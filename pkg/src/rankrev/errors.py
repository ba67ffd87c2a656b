"""Error types shared across the package."""


class InputError(ValueError):
    """Raised when a caller hands an operation an ill-formed or mismatched value."""


class ParseError(InputError):
    """A diagnostic tied to a position in a model file, script, or expression."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"{line}:{column}: {message}")
        self.message = message
        self.line = line
        self.column = column
