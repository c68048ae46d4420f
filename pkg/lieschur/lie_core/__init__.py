from .lie_core import (LieAlgebra, Subspace, ValidationReport, validate, whole, zero, product_space,
                       derived_algebra, lower_central_series, nilpotency_class, min_generators,
                       graded_dimensions, center, is_ideal, quotient, quotient_by_last_term,
                       change_basis, structurally_equal)
