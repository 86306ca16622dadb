"""Exception hierarchy shared by all modules."""


class FreeLieError(Exception):
    """Base class for errors raised by this package."""


class InputError(FreeLieError, ValueError):
    """Malformed or out-of-range input (bad letter, bad occurrence, bad bound)."""


class DomainError(FreeLieError, ValueError):
    """Input is well formed but outside the domain of the operation."""


class NotLieElementError(DomainError):
    """An associative polynomial that is not the expansion of a Lie element."""


class ParseError(InputError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class InvariantViolation(FreeLieError, AssertionError):
    """A property guaranteed by the theory failed; indicates a bug."""
