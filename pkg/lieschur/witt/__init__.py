from .witt import (WittTable, divisors, moebius, witt_dimension, witt_table, bound_class_generators,
                   free_nilpotent_dimension)
