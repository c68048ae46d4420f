from .free_lie import HallTree, HallBasis, LieElement, generator_names, hall_basis, collect_bracket, free_nilpotent
