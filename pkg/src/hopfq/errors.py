"""Exception types raised across the package."""


class HopfqError(Exception):
    """Base class for every error raised by hopfq."""


class FieldMismatch(HopfqError, TypeError):
    """Arithmetic attempted between scalars of two different fields."""


class InvalidInput(HopfqError):
    """Structural problem with user-supplied data (CLI exit code 2)."""


class TableParseError(InvalidInput):
    def __init__(self, message: str, line: int, column: int = 0):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class NotLatinSquare(InvalidInput):
    def __init__(self, kind: str, index: int, symbol):
        super().__init__(f"NotLatinSquare: symbol {symbol!r} repeated in {kind} {index}")
        self.kind = kind
        self.index = index
        self.symbol = symbol


class NoIdentity(InvalidInput):
    pass


class NoTwoSidedInverse(InvalidInput):
    pass


class NotIPLoop(InvalidInput):
    pass


class BoundExceeded(HopfqError):
    pass


class StructureError(InvalidInput):
    """Structure constants that do not describe a well-formed algebra."""


class NotAnIntegral(HopfqError):
    pass


class NoFaithfulIntegral(HopfqError):
    pass


class InconsistentModularElement(HopfqError):
    pass


class SingularEvaluationMatrix(HopfqError):
    pass


class RepresentationMismatch(HopfqError):
    pass


class IncompatibleActions(HopfqError):
    pass
