"""
Upper bounds for dim M(L), the nontriviality theorem and the dimension
consequences of the four-term exact sequence

    0 -> A -> M(L) -> M(L/N) -> (N ∩ L²)/[N, L] -> 0.

Two different "n" appear in the bounds: the generator count for the class/generator
bound and dim L for the Hardy and Moneyhun bounds. Reports keep them apart as
generators_n and dim.
"""
from enum import Enum
from typing import Any, Dict, Iterable, List, Optional, Tuple

from lieschur.exceptions import InvalidParameterError
from lieschur.free_lie import free_nilpotent
from lieschur.lie_core import (LieAlgebra, Subspace, derived_algebra, is_ideal, lower_central_series,
                               min_generators, nilpotency_class, product_space, quotient,
                               quotient_by_last_term, whole)
from lieschur.log_manager import LogManager
from lieschur.multiplier import multiplier_dimension
from lieschur.witt import bound_class_generators, free_nilpotent_dimension, witt_dimension


class Winner(Enum):
    NEW = "new"
    HARDY = "hardy"
    TIE = "tie"


class VerdictStatus(Enum):
    PASS = "pass"
    FAIL = "fail"
    HYPOTHESIS_NOT_MET = "hypothesis-not-met"


class Verdict:
    """Outcome of one theorem check, with the numbers it was decided on."""
    __slots__ = ['_check', '_status', '_details']

    def __init__(self, check: str, status: VerdictStatus, details: Optional[Dict[str, Any]] = None) -> None:
        self._check = check
        self._status = status
        self._details = dict(details or {})

    @property
    def check(self) -> str:
        return self._check

    @property
    def status(self) -> VerdictStatus:
        return self._status

    @property
    def details(self) -> Dict[str, Any]:
        return dict(self._details)

    @property
    def passed(self) -> bool:
        return self._status is not VerdictStatus.FAIL

    def __bool__(self) -> bool:
        return self.passed

    def __repr__(self) -> str:
        return f"Verdict({self._check}: {self._status.value}, {self._details})"


def bound_new(L: LieAlgebra) -> int:
    """sum_{j=1}^{c} l_n(j+1) with c the class and n the generator count of L."""
    return bound_class_generators(min_generators(L), nilpotency_class(L))


def bound_hardy(L: LieAlgebra) -> int:
    """dim(dim - 1)/2 - dim L², left unclamped."""
    return L.dim * (L.dim - 1) // 2 - derived_algebra(L).dim


def bound_moneyhun(L: LieAlgebra) -> int:
    return L.dim * (L.dim - 1) // 2


def verify_nontriviality(L: LieAlgebra, multiplier_dim: Optional[int] = None) -> Verdict:
    """
    A nilpotent algebra of dimension > 1 has a nonzero multiplier.
    Raises:
        NotNilpotentError: L is not nilpotent.
    """
    if L.dim >= 1:
        nilpotency_class(L)
    multiplier_dim = multiplier_dimension(L) if multiplier_dim is None else multiplier_dim
    details = {"dim": L.dim, "multiplier_dim": multiplier_dim}
    if L.dim <= 1:
        return Verdict("nontriviality", VerdictStatus.HYPOTHESIS_NOT_MET, details)
    return Verdict("nontriviality", VerdictStatus.PASS if multiplier_dim >= 1 else VerdictStatus.FAIL, details)


class SequenceProfile:
    """Dimensions along the exact sequence for an ideal N of L."""
    __slots__ = ['multiplier_dim', 'quotient_multiplier_dim', 'tail_dim', 'ideal_dim']

    def __init__(self, multiplier_dim: int, quotient_multiplier_dim: int, tail_dim: int, ideal_dim: int) -> None:
        self.multiplier_dim = multiplier_dim
        self.quotient_multiplier_dim = quotient_multiplier_dim
        self.tail_dim = tail_dim
        self.ideal_dim = ideal_dim

    @property
    def sigma_image_dim(self) -> int:
        """dim A forced by exactness."""
        return self.multiplier_dim - self.quotient_multiplier_dim + self.tail_dim

    @property
    def consistent(self) -> bool:
        return 0 <= self.sigma_image_dim <= self.multiplier_dim

    def as_dict(self) -> Dict[str, int]:
        return {"ideal_dim": self.ideal_dim, "sigma_image_dim": self.sigma_image_dim,
                "multiplier_dim": self.multiplier_dim, "quotient_multiplier_dim": self.quotient_multiplier_dim,
                "tail_dim": self.tail_dim}

    def __repr__(self) -> str:
        return f"SequenceProfile({self.as_dict()})"


def exact_sequence_profile(L: LieAlgebra, N: Subspace, multiplier_dim: Optional[int] = None) -> SequenceProfile:
    """
    Dimensions of M(L), M(L/N) and (N ∩ L²)/[N, L] for an ideal N, and the first term implied by exactness.
    Raises:
        InvalidParameterError: N is not an ideal of L.
    """
    if not is_ideal(L, N):
        raise InvalidParameterError("Subspace is not an ideal")
    derived = derived_algebra(L)
    tail_dim = N.intersection_dim(derived) - product_space(L, N, whole(L)).dim
    multiplier_dim = multiplier_dimension(L) if multiplier_dim is None else multiplier_dim
    return SequenceProfile(multiplier_dim, multiplier_dimension(quotient(L, N)), tail_dim, N.dim)


def verify_sigma_bound(L: LieAlgebra, multiplier_dim: Optional[int] = None) -> Verdict:
    """
    With N = L^c the first term A of the sequence is an image of F^(c+1)/F^(c+2), so dim A <= l_n(c+1).
    Class 1 algebras do not meet the hypothesis.
    """
    c = nilpotency_class(L)
    n = min_generators(L)
    if c < 2:
        return Verdict("sigma-image", VerdictStatus.HYPOTHESIS_NOT_MET, {"class": c})
    last_term = lower_central_series(L)[c - 1]
    profile = exact_sequence_profile(L, last_term, multiplier_dim)
    limit = witt_dimension(n, c + 1)
    details = {**profile.as_dict(), "limit": limit}
    holds = profile.consistent and profile.tail_dim == last_term.dim and profile.sigma_image_dim <= limit
    return Verdict("sigma-image", VerdictStatus.PASS if holds else VerdictStatus.FAIL, details)


class InductiveStep:
    """bound_new(L) against bound_new(L/L^c) + l_n(c+1)."""
    __slots__ = ['bound', 'quotient_bound', 'increment']

    def __init__(self, bound: int, quotient_bound: int, increment: int) -> None:
        self.bound = bound
        self.quotient_bound = quotient_bound
        self.increment = increment

    @property
    def holds(self) -> bool:
        return self.bound == self.quotient_bound + self.increment

    def __repr__(self) -> str:
        return f"InductiveStep({self.bound} = {self.quotient_bound} + {self.increment}: {self.holds})"


def inductive_step(L: LieAlgebra) -> InductiveStep:
    """
    Raises:
        InvalidParameterError: class below 2.
    """
    c = nilpotency_class(L)
    n = min_generators(L)
    return InductiveStep(bound_new(L), bound_new(quotient_by_last_term(L)), witt_dimension(n, c + 1))


def euler_identity_free_nilpotent(n: int, c: int, cross_check: bool = True, dim_limit: int = 35) -> Verdict:
    """
    Alternating sum of the sequence terms for L = F/F^(c+1) and N = L^c:
    dim A - dim M(L) + dim M(L/L^c) - dim L^c with A = l_n(c+1), M(L) = l_n(c+1),
    M(L/L^c) = l_n(c) and L^c = l_n(c). When the algebra has dimension <= dim_limit the
    multipliers and dim L^c are recomputed from the constructed algebras.
    Raises:
        InvalidParameterError: n < 2 or c < 2.
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 2:
        raise InvalidParameterError(f"n must be at least 2, got {n!r}")
    if isinstance(c, bool) or not isinstance(c, int) or c < 2:
        raise InvalidParameterError(f"c must be at least 2, got {c!r}")
    sigma_image = multiplier = witt_dimension(n, c + 1)
    quotient_multiplier = last_term = witt_dimension(n, c)
    alternating = sigma_image - multiplier + quotient_multiplier - last_term
    details = {"n": n, "c": c, "sigma_image_dim": sigma_image, "multiplier_dim": multiplier,
               "quotient_multiplier_dim": quotient_multiplier, "last_term_dim": last_term,
               "alternating_sum": alternating, "cross_checked": False}
    holds = alternating == 0

    if cross_check and free_nilpotent_dimension(n, c) <= dim_limit:
        L = free_nilpotent(n, c)
        series = lower_central_series(L)
        computed = {"multiplier_dim": multiplier_dimension(L),
                    "quotient_multiplier_dim": multiplier_dimension(quotient_by_last_term(L)),
                    "last_term_dim": series[c - 1].dim}
        mismatches = {key: value for key, value in computed.items() if value != details[key]}
        details.update(cross_checked=True, mismatches=mismatches)
        holds = holds and not mismatches
        LogManager().get_logger("lieschur.bounds").debug(f"euler identity ({n}, {c}) cross-check {computed}")

    return Verdict("euler-identity", VerdictStatus.PASS if holds else VerdictStatus.FAIL, details)


class BoundReport:
    """All bounds for one algebra next to its exact multiplier."""
    __slots__ = ['algebra_name', 'dim', 'class_c', 'generators_n', 'dim_derived', 'multiplier_dim',
                 'bound_new', 'bound_hardy', 'bound_moneyhun', 'winner', 'nontrivial_ok', 'sigma_image_dim']

    def __init__(self, algebra_name: str, dim: int, class_c: int, generators_n: int, dim_derived: int,
                 multiplier_dim: int, bound_new: int, bound_hardy: int, bound_moneyhun: int, winner: Winner,
                 nontrivial_ok: bool, sigma_image_dim: Optional[int] = None) -> None:
        self.algebra_name = algebra_name
        self.dim = dim
        self.class_c = class_c
        self.generators_n = generators_n
        self.dim_derived = dim_derived
        self.multiplier_dim = multiplier_dim
        self.bound_new = bound_new
        self.bound_hardy = bound_hardy
        self.bound_moneyhun = bound_moneyhun
        self.winner = winner
        self.nontrivial_ok = nontrivial_ok
        self.sigma_image_dim = sigma_image_dim

    def sound(self) -> bool:
        """Every bound holds and the nontriviality verdict is positive."""
        return (self.multiplier_dim <= self.bound_new and self.multiplier_dim <= self.bound_hardy
                and self.multiplier_dim <= self.bound_moneyhun and self.nontrivial_ok)

    def as_dict(self) -> Dict[str, Any]:
        return {"algebra_name": self.algebra_name, "dim": self.dim, "class_c": self.class_c,
                "generators_n": self.generators_n, "dim_derived": self.dim_derived,
                "multiplier_dim": self.multiplier_dim, "bound_new": self.bound_new,
                "bound_hardy": self.bound_hardy, "bound_moneyhun": self.bound_moneyhun,
                "winner": self.winner.value, "nontrivial_ok": self.nontrivial_ok,
                "sigma_image_dim": self.sigma_image_dim}

    def __repr__(self) -> str:
        return f"BoundReport({self.as_dict()})"


def _winner(new: int, hardy: int) -> Winner:
    if hardy < new:
        return Winner.HARDY
    if new < hardy:
        return Winner.NEW
    return Winner.TIE


def compare(L: LieAlgebra, name: str) -> BoundReport:
    """
    Fill a BoundReport for a nilpotent algebra.
    Raises:
        NotNilpotentError: L is not nilpotent.
    """
    log = LogManager().get_logger("lieschur.bounds")
    c = nilpotency_class(L)
    n = min_generators(L)
    multiplier_dim = multiplier_dimension(L)
    new, hardy = bound_class_generators(n, c), bound_hardy(L)
    sigma = verify_sigma_bound(L, multiplier_dim).details.get("sigma_image_dim") if c >= 2 else None
    report = BoundReport(
        algebra_name=name,
        dim=L.dim,
        class_c=c,
        generators_n=n,
        dim_derived=L.dim - n,
        multiplier_dim=multiplier_dim,
        bound_new=new,
        bound_hardy=hardy,
        bound_moneyhun=bound_moneyhun(L),
        winner=_winner(new, hardy),
        nontrivial_ok=bool(verify_nontriviality(L, multiplier_dim)),
        sigma_image_dim=sigma,
    )
    log.debug(report.as_dict())
    return report


def compare_many(algebras: Iterable[Tuple[str, LieAlgebra]]) -> List[BoundReport]:
    """Reports ordered by algebra name."""
    return [compare(L, name) for name, L in sorted(algebras, key=lambda item: item[0])]
