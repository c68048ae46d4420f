from .exact_linalg import (Rational, Scalar, SparseMatrix, to_rational, rank, nullity, multiply, transpose,
                           row_space_canonical, nullspace, inverse)
