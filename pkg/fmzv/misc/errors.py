class FmzvError(Exception):
    pass


class InvalidArgumentError(FmzvError, ValueError):
    pass


class DimensionError(FmzvError, ValueError):
    pass


class AlphabetMismatchError(FmzvError, ValueError):
    pass


class BudgetExceededError(FmzvError):
    pass


class ParseError(FmzvError, ValueError):
    def __init__(self, message: str, position: int, expected: str):
        self.message = message
        self.position = position
        self.expected = expected
        super().__init__(f"{message} at position {position}: expected {expected}")
