from typing import Optional, Tuple


class LieSchurError(Exception):
    """Base class for every error raised by lieschur."""


class ConfigError(LieSchurError, ValueError):
    pass


class DimensionMismatchError(LieSchurError, ValueError):
    pass


class NotNilpotentError(LieSchurError):
    """Raised by class-dependent operations when the lower central series stalls above zero."""

    def __init__(self, message: str, stable_dim: Optional[int] = None) -> None:
        super().__init__(message)
        self.stable_dim = stable_dim


class InvalidParameterError(LieSchurError, ValueError):
    pass


class ParseError(LieSchurError):
    """Syntax error in a structure-constant file. Line and column are 1-based."""

    def __init__(self, line: int, column: int, message: str) -> None:
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
        self.message = message


class SemanticError(LieSchurError):
    """A well-formed file that does not describe a Lie algebra."""

    def __init__(self, message: str, line: Optional[int] = None) -> None:
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class IndexOutOfRangeError(SemanticError):
    pass


class DuplicateBracketError(SemanticError):
    pass


class OrientationError(SemanticError):
    pass


class JacobiViolationError(SemanticError):
    def __init__(self, triple: Tuple[int, int, int], line: Optional[int] = None) -> None:
        i, j, k = triple
        super().__init__(f"Jacobi identity fails on basis triple ({i},{j},{k})", line)
        self.triple = triple
