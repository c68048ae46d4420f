from .multiplier import (ExteriorBasisIndex, ExteriorBasis, HomologyProfile, exterior_index, lambda3_columns,
                         ce_boundary_2, ce_boundary_3, multiplier_dimension, homology_profile,
                         multiplier_of_free_nilpotent)
