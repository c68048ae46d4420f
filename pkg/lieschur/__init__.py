from .log_manager import LogManager
from .parameter_config import ParameterConfig
from .exceptions import LieSchurError, NotNilpotentError, ParseError, SemanticError, InvalidParameterError
from .witt import moebius, witt_dimension, witt_table, bound_class_generators
from .free_lie import hall_basis, free_nilpotent
from .lie_core import LieAlgebra, validate, lower_central_series, nilpotency_class, min_generators, quotient_by_last_term
from .multiplier import multiplier_dimension, homology_profile
from .bounds import bound_new, bound_hardy, bound_moneyhun, compare, compare_many
from .catalog import builtin, from_spec, parse, serialize

logger = LogManager()
