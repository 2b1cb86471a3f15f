"""Exception hierarchy shared by every module of the toolkit."""


class GroebnerCheckError(Exception):
    """Base class for all toolkit errors."""


class DivisionByZero(GroebnerCheckError, ZeroDivisionError):
    pass


class BadReduction(GroebnerCheckError):
    """A prime divides a denominator, so the input has no image mod p."""


class NotPrime(GroebnerCheckError, ValueError):
    pass


class TableMismatch(GroebnerCheckError):
    pass


class ZeroPolynomial(GroebnerCheckError):
    pass


class NotBihomogeneous(GroebnerCheckError):
    def __init__(self, message, offending=()):
        super().__init__(message)
        self.offending = list(offending)


class NonDivisible(GroebnerCheckError):
    pass


class ZeroDivisor(GroebnerCheckError, ZeroDivisionError):
    pass


class NotLinear(GroebnerCheckError):
    pass


class ResourceLimit(GroebnerCheckError):
    pass


class CapExceeded(GroebnerCheckError):
    pass


class ParseError(GroebnerCheckError):
    """Base for fixture-format errors; carries a 1-based line/column."""

    def __init__(self, message, line=None, column=None, source=None):
        self.line = line
        self.column = column
        self.source = source
        self.message = message
        loc = ""
        if source is not None:
            loc += f"{source}:"
        if line is not None:
            loc += f"{line}:{column}: " if column is not None else f"{line}: "
        elif loc:
            loc += " "
        super().__init__(loc + message)


class PolySyntaxError(ParseError):
    def __init__(self, message, line=None, column=None, source=None, expected=()):
        self.expected = list(expected)
        if self.expected:
            message = f"{message} (expected {', '.join(self.expected)})"
        super().__init__(message, line, column, source)


class UnknownVariable(ParseError):
    pass


class ZeroDenominator(ParseError):
    pass


class DuplicateName(ParseError):
    pass


class FixtureMissing(GroebnerCheckError):
    pass


class IoError(GroebnerCheckError, OSError):
    """A fixture or system file could not be read."""
