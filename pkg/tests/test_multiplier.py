import pytest

from lieschur.catalog import abelian, filiform, heisenberg, random_algebra
from lieschur.exact_linalg import SparseMatrix, multiply, rank
from lieschur.exceptions import InvalidParameterError
from lieschur.free_lie import free_nilpotent
from lieschur.lie_core import LieAlgebra, change_basis, derived_algebra
from lieschur.multiplier import (ExteriorBasis, ce_boundary_2, ce_boundary_3, exterior_index, homology_profile,
                                 lambda3_columns, multiplier_dimension, multiplier_of_free_nilpotent)


def test_exterior_index_is_lexicographic():
    pairs = exterior_index(4, 2)
    assert [p.indices for p in pairs] == [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    assert [p.position for p in pairs] == list(range(6))
    assert len(exterior_index(6, 3)) == lambda3_columns(6) == 20
    with pytest.raises(InvalidParameterError):
        exterior_index(4, 4)


def test_wedge_signs():
    basis = ExteriorBasis(3, 2)
    assert basis.wedge(0, 2) == (1, 1)
    assert basis.wedge(2, 0) == (-1, 1)
    assert basis.wedge(1, 1)[0] == 0


def test_boundaries_of_abelian_vanish():
    L = abelian(4)
    assert ce_boundary_2(L).is_zero()
    assert ce_boundary_3(L).is_zero()


def test_heisenberg_boundaries(heis):
    d2 = ce_boundary_2(heis)
    assert d2.shape == (3, 3)
    assert list(d2.entries()) == [(2, 0, 1)]
    d3 = ce_boundary_3(heis)
    assert d3.shape == (3, 1)
    assert d3.is_zero()


@pytest.mark.parametrize("L", [
    heisenberg(2),
    filiform(6),
    free_nilpotent(2, 4),
    free_nilpotent(3, 2),
    random_algebra(3),
])
def test_chain_complex(L):
    assert multiply(ce_boundary_2(L), ce_boundary_3(L)).is_zero()
    assert rank(ce_boundary_2(L)) == derived_algebra(L).dim


def test_boundary_of_non_jacobi_algebra_is_not_a_complex(broken_heis):
    assert not multiply(ce_boundary_2(broken_heis), ce_boundary_3(broken_heis)).is_zero()


@pytest.mark.parametrize("n", range(1, 7))
def test_abelian_attains_moneyhun(n):
    assert multiplier_dimension(abelian(n)) == n * (n - 1) // 2


def test_small_algebras():
    assert multiplier_dimension(LieAlgebra(0)) == 0
    assert multiplier_dimension(abelian(1)) == 0
    assert multiplier_dimension(heisenberg(1)) == 2
    assert multiplier_dimension(free_nilpotent(2, 3)) == 3


def test_homology_profile(heis):
    profile = homology_profile(heis)
    assert profile.as_dict() == {"dim": 3, "nullity_d2": 2, "rank_d2": 1, "rank_d3": 0, "multiplier": 2}


@pytest.mark.parametrize("n, c, expected", [(2, 1, 1), (2, 2, 2), (2, 3, 3), (2, 4, 6), (3, 2, 8)])
def test_closed_form(n, c, expected):
    assert multiplier_of_free_nilpotent(n, c) == expected


def test_closed_form_needs_two_generators():
    with pytest.raises(InvalidParameterError):
        multiplier_of_free_nilpotent(1, 3)


@pytest.mark.parametrize("n, c", [(2, c) for c in range(1, 5)] + [(3, c) for c in range(1, 3)])
def test_homology_matches_closed_form(n, c):
    assert multiplier_dimension(free_nilpotent(n, c)) == multiplier_of_free_nilpotent(n, c)


@pytest.mark.slow
@pytest.mark.parametrize("n, c", [(2, 5), (3, 3)])
def test_homology_matches_closed_form_dimension_fourteen(n, c):
    assert multiplier_dimension(free_nilpotent(n, c)) == multiplier_of_free_nilpotent(n, c)


def test_multiplier_invariant_under_basis_change(free_2_3):
    P = SparseMatrix.from_dense([[0, 1, 0, 0, 0], [1, 1, 0, 0, 0], [0, 0, 1, 0, 0], [0, 2, 0, 1, 0], [0, 0, 0, 1, 1]])
    assert multiplier_dimension(change_basis(free_2_3, P)) == multiplier_dimension(free_2_3) == 3


@pytest.mark.parametrize("seed", range(5))
def test_random_algebras_have_nonzero_multiplier(seed):
    assert multiplier_dimension(random_algebra(seed)) >= 1
