import pytest

from lieschur.bounds import (Winner, VerdictStatus, bound_hardy, bound_moneyhun, bound_new, compare, compare_many,
                             euler_identity_free_nilpotent, exact_sequence_profile, inductive_step,
                             verify_nontriviality, verify_sigma_bound)
from lieschur.catalog import abelian, filiform, heisenberg, random_algebra
from lieschur.exceptions import InvalidParameterError, NotNilpotentError
from lieschur.free_lie import free_nilpotent
from lieschur.lie_core import LieAlgebra, Subspace, center, derived_algebra, lower_central_series


def test_first_worked_example():
    report = compare(free_nilpotent(2, 2), "free:2,2")
    assert (report.dim, report.bound_new, report.bound_hardy) == (3, 3, 2)
    assert report.winner is Winner.HARDY
    assert report.multiplier_dim == 2


def test_second_worked_example():
    report = compare(free_nilpotent(2, 3), "free:2,3")
    assert (report.dim, report.class_c, report.generators_n) == (5, 3, 2)
    assert (report.bound_new, report.bound_hardy, report.bound_moneyhun) == (6, 7, 10)
    assert report.winner is Winner.NEW
    assert report.multiplier_dim == 3
    assert report.sound()


@pytest.mark.parametrize("n", range(1, 7))
def test_abelian_bounds_tie(n):
    L = abelian(n)
    expected = n * (n - 1) // 2
    assert bound_new(L) == bound_hardy(L) == bound_moneyhun(L) == expected
    report = compare(L, f"abelian:{n}")
    assert report.winner is Winner.TIE
    assert report.multiplier_dim == expected
    assert report.sigma_image_dim is None


def test_moneyhun_values():
    assert bound_moneyhun(abelian(1)) == 0
    assert bound_moneyhun(heisenberg(1)) == 3
    assert bound_moneyhun(free_nilpotent(2, 3)) == 10


def test_bounds_need_nilpotent():
    L = LieAlgebra(3, {(0, 1): {1: 1}})
    with pytest.raises(NotNilpotentError):
        bound_new(L)
    with pytest.raises(NotNilpotentError):
        compare(L, "solvable")


def test_nontriviality():
    verdict = verify_nontriviality(heisenberg(1))
    assert verdict.status is VerdictStatus.PASS
    assert verdict.details["multiplier_dim"] == 2
    verdict = verify_nontriviality(abelian(1))
    assert verdict.status is VerdictStatus.HYPOTHESIS_NOT_MET
    assert verdict.details["multiplier_dim"] == 0
    assert verify_nontriviality(abelian(5)).details["multiplier_dim"] == 10
    assert verify_nontriviality(abelian(3), multiplier_dim=0).status is VerdictStatus.FAIL


@pytest.mark.parametrize("n, c, terms", [(2, 2, (2, 2, 1, 1)), (2, 3, (3, 3, 2, 2)), (3, 2, (8, 8, 3, 3))])
def test_euler_identity(n, c, terms):
    verdict = euler_identity_free_nilpotent(n, c)
    assert verdict.passed
    details = verdict.details
    assert (details["sigma_image_dim"], details["multiplier_dim"], details["quotient_multiplier_dim"],
            details["last_term_dim"]) == terms
    assert details["cross_checked"]
    assert not details["mismatches"]


def test_euler_identity_closed_form_beyond_dim_limit():
    verdict = euler_identity_free_nilpotent(4, 6, dim_limit=35)
    assert verdict.passed
    assert not verdict.details["cross_checked"]


@pytest.mark.parametrize("n, c", [(1, 3), (2, 1)])
def test_euler_identity_rejects_small_parameters(n, c):
    with pytest.raises(InvalidParameterError):
        euler_identity_free_nilpotent(n, c)


@pytest.mark.parametrize("L", [free_nilpotent(2, 3), free_nilpotent(3, 2), heisenberg(2), filiform(5), random_algebra(1)])
def test_sigma_bound(L):
    verdict = verify_sigma_bound(L)
    assert verdict.passed
    assert verdict.details["sigma_image_dim"] <= verdict.details["limit"]


def test_sigma_bound_is_attained_by_free_algebras():
    details = verify_sigma_bound(free_nilpotent(2, 4)).details
    assert details["sigma_image_dim"] == details["limit"] == 6


def test_sigma_bound_hypothesis():
    assert verify_sigma_bound(abelian(3)).status is VerdictStatus.HYPOTHESIS_NOT_MET


def test_exact_sequence_profile(heis):
    profile = exact_sequence_profile(heis, center(heis))
    assert profile.as_dict() == {"ideal_dim": 1, "sigma_image_dim": 2, "multiplier_dim": 2,
                                 "quotient_multiplier_dim": 1, "tail_dim": 1}
    assert profile.consistent
    whole_profile = exact_sequence_profile(heis, derived_algebra(heis))
    assert whole_profile.sigma_image_dim == profile.sigma_image_dim


def test_exact_sequence_profile_rejects_non_ideal(heis):
    with pytest.raises(InvalidParameterError):
        exact_sequence_profile(heis, Subspace(3, [{0: 1}]))


@pytest.mark.parametrize("n, c", [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3)])
def test_inductive_step(n, c):
    step = inductive_step(free_nilpotent(n, c))
    assert step.holds


def test_compare_many_sorted_by_name():
    reports = compare_many([("heisenberg:1", heisenberg(1)), ("abelian:2", abelian(2))])
    assert [r.algebra_name for r in reports] == ["abelian:2", "heisenberg:1"]
    assert all(r.sound() for r in reports)


@pytest.mark.parametrize("L", [heisenberg(3), filiform(7), free_nilpotent(2, 4), random_algebra(2)])
def test_bound_soundness(L):
    report = compare(L, "algebra")
    assert report.sound()
    assert report.bound_hardy <= report.bound_moneyhun
    assert report.dim_derived == lower_central_series(L)[1].dim


@pytest.mark.parametrize("n, c", [(n, c) for n in range(2, 5) for c in range(2, 7)])
def test_euler_identity_sweep(n, c):
    verdict = euler_identity_free_nilpotent(n, c, dim_limit=14)
    assert verdict.passed
    assert verdict.details["alternating_sum"] == 0


@pytest.mark.slow
@pytest.mark.parametrize("n, c", [(n, c) for n in range(2, 5) for c in range(2, 7)])
def test_euler_identity_sweep_cross_checked(n, c):
    verdict = euler_identity_free_nilpotent(n, c)
    assert verdict.passed
    assert not verdict.details.get("mismatches")
