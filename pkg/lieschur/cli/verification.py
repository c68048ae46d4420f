"""
The property suite behind `lieschur verify`. Every check aggregates one property
over its scope and never raises: library errors on a single algebra count as a
failure of that check.
"""
from typing import Callable, Dict, List, Tuple

from lieschur.bounds import (bound_hardy, bound_moneyhun, compare, euler_identity_free_nilpotent, inductive_step,
                             verify_nontriviality, verify_sigma_bound)
from lieschur.catalog import catalog_algebras, parse, random_algebra, serialize
from lieschur.exact_linalg import multiply
from lieschur.exceptions import LieSchurError
from lieschur.free_lie import HallBasis, free_nilpotent
from lieschur.lie_core import LieAlgebra, validate
from lieschur.log_manager import LogManager
from lieschur.multiplier import ce_boundary_2, ce_boundary_3, multiplier_dimension
from lieschur.witt import free_nilpotent_dimension, witt_dimension, witt_table

RANDOM_SAMPLES = 20


class CheckResult:
    __slots__ = ['name', 'scope', 'cases', 'failures']

    def __init__(self, name: str, scope: str) -> None:
        self.name = name
        self.scope = scope
        self.cases = 0
        self.failures: List[str] = []

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, label: str, predicate: Callable[[], bool]) -> None:
        self.cases += 1
        try:
            ok = predicate()
        except (LieSchurError, AssertionError) as e:
            self.failures.append(f"{label}: {type(e).__name__}: {e}")
            return
        if not ok:
            self.failures.append(label)

    def as_dict(self) -> Dict[str, object]:
        return {"check": self.name, "scope": self.scope, "cases": self.cases,
                "verdict": "pass" if self.passed else "fail", "failures": list(self.failures)}

    def __repr__(self) -> str:
        return f"CheckResult({self.name}, {self.cases} cases, {'pass' if self.passed else 'fail'})"


def _zero_product(L: LieAlgebra) -> bool:
    return multiply(ce_boundary_2(L), ce_boundary_3(L)).is_zero()


def run_verification(max_n: int = 2, max_class: int = 4, dim_limit: int = 35, random_seed: int = 0) -> List[CheckResult]:
    """
    Run every theorem and consistency check on the free nilpotent sweep
    n = 2..max_n, c = 1..max_class, on the golden catalog and on randomly
    perturbed algebras. Homological checks are limited to dimension <= dim_limit.
    """
    log = LogManager().get_logger("lieschur.verify")
    sweep: List[Tuple[int, int]] = [(n, c) for n in range(2, max_n + 1) for c in range(1, max_class + 1)]
    homological = [(n, c) for n, c in sweep if free_nilpotent_dimension(n, c) <= dim_limit]
    sweep_scope = f"n<={max_n}, c<={max_class}"

    free_cache: Dict[Tuple[int, int], LieAlgebra] = {}
    multiplier_cache: Dict[str, int] = {}

    def free(n: int, c: int) -> LieAlgebra:
        if (n, c) not in free_cache:
            free_cache[(n, c)] = free_nilpotent(n, c)
        return free_cache[(n, c)]

    def multiplier_of(name: str, L: LieAlgebra) -> int:
        if name not in multiplier_cache:
            multiplier_cache[name] = multiplier_dimension(L)
        return multiplier_cache[name]

    algebras: List[Tuple[str, LieAlgebra]] = []
    for entry, L in catalog_algebras(max_dim=dim_limit):
        algebras.append((entry.name, L))
    for n, c in homological:
        algebras.append((f"free:{n},{c}", free(n, c)))
    for seed in range(random_seed, random_seed + RANDOM_SAMPLES):
        algebras.append((f"random:{seed}", random_algebra(seed)))
    algebras = sorted(dict(algebras).items())
    algebra_scope = f"catalog + free sweep (dim<={dim_limit}) + {RANDOM_SAMPLES} random"

    results: List[CheckResult] = []

    check = CheckResult("witt-necklace", f"n<={max(max_n, 2)}, d<={max(8, max_class + 1)}")
    for n in range(1, max(max_n, 2) + 1):
        check.record(f"n={n}", lambda n=n: witt_table(n, max(8, max_class + 1)).check_necklace())
    results.append(check)

    check = CheckResult("hall-counts", sweep_scope)
    for n, c in sweep:
        check.record(f"free:{n},{c}", lambda n=n, c=c: HallBasis(n, c).degree_counts() == [witt_dimension(n, d) for d in range(1, c + 1)])
    results.append(check)

    check = CheckResult("jacobi", sweep_scope)
    for n, c in sweep:
        check.record(f"free:{n},{c}", lambda n=n, c=c: validate(free(n, c)).ok)
    results.append(check)

    check = CheckResult("oracle-equivalence", f"{sweep_scope}, dim<={dim_limit}")
    for n, c in homological:
        check.record(f"free:{n},{c}", lambda n=n, c=c: multiplier_of(f"free:{n},{c}", free(n, c)) == witt_dimension(n, c + 1))
    results.append(check)

    check = CheckResult("chain-complex", algebra_scope)
    for name, L in algebras:
        check.record(name, lambda L=L: _zero_product(L))
    results.append(check)

    check = CheckResult("nontriviality", algebra_scope)
    for name, L in algebras:
        check.record(name, lambda name=name, L=L: verify_nontriviality(L, multiplier_of(name, L)).passed)
    results.append(check)

    check = CheckResult("bound-soundness", algebra_scope)
    for name, L in algebras:
        check.record(name, lambda name=name, L=L: compare(L, name).sound() and bound_hardy(L) <= bound_moneyhun(L))
    results.append(check)

    check = CheckResult("sigma-image", algebra_scope)
    for name, L in algebras:
        check.record(name, lambda name=name, L=L: verify_sigma_bound(L, multiplier_of(name, L)).passed)
    results.append(check)

    check = CheckResult("euler-identity", f"n<={max_n}, 2<=c<={max_class}")
    for n, c in sweep:
        if c >= 2:
            check.record(f"free:{n},{c}", lambda n=n, c=c: euler_identity_free_nilpotent(n, c, dim_limit=dim_limit).passed)
    results.append(check)

    check = CheckResult("inductive-step", sweep_scope)
    for n, c in sweep:
        if c >= 2:
            check.record(f"free:{n},{c}", lambda n=n, c=c: inductive_step(free(n, c)).holds)
    results.append(check)

    check = CheckResult("round-trip", "catalog + random")
    for name, L in algebras:
        check.record(name, lambda L=L: parse(serialize(L)) == L)
    results.append(check)

    for result in results:
        log.info(f"{result.name}: {result.cases} cases, {'pass' if result.passed else 'fail'}")
    return results
