from .exceptions import (LieSchurError, ConfigError, DimensionMismatchError, NotNilpotentError,
                         InvalidParameterError, ParseError, SemanticError, IndexOutOfRangeError,
                         DuplicateBracketError, OrientationError, JacobiViolationError)
