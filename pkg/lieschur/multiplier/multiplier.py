"""
dim M(L) as the second homology of the Chevalley-Eilenberg complex with trivial
coefficients,

    Λ³L --∂₃--> Λ²L --∂₂--> L,

so that dim M(L) = nullity(∂₂) - rank(∂₃). Over a field this agrees with the
free-presentation description (F² ∩ R)/[F, R]; for free nilpotent algebras the
closed form l_n(c+1) is available and is used as an oracle.
"""
import time
from math import comb
from itertools import combinations
from fractions import Fraction
from typing import Dict, List, Tuple

from lieschur.exact_linalg import SparseMatrix, rank
from lieschur.exceptions import InvalidParameterError
from lieschur.lie_core import LieAlgebra
from lieschur.log_manager import LogManager
from lieschur.witt import witt_dimension


class ExteriorBasisIndex:
    __slots__ = ['_indices', '_position']

    def __init__(self, indices: Tuple[int, ...], position: int) -> None:
        assert all(a < b for a, b in zip(indices, indices[1:])), f"Indices must increase: {indices}"
        self._indices = tuple(indices)
        self._position = position

    @property
    def arity(self) -> int:
        return len(self._indices)

    @property
    def indices(self) -> Tuple[int, ...]:
        return self._indices

    @property
    def position(self) -> int:
        return self._position

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExteriorBasisIndex):
            return NotImplemented
        return self._indices == other._indices and self._position == other._position

    def __hash__(self) -> int:
        return hash((self._indices, self._position))

    def __repr__(self) -> str:
        return f"ExteriorBasisIndex({self._indices}, position={self._position})"


class ExteriorBasis:
    """Lexicographic basis of Λ^arity of an N-dimensional space, with position lookup."""
    __slots__ = ['_dim', '_arity', '_elements', '_position']

    def __init__(self, dim: int, arity: int) -> None:
        self._dim = dim
        self._arity = arity
        self._elements = [ExteriorBasisIndex(t, p) for p, t in enumerate(combinations(range(dim), arity))]
        self._position = {e.indices: e.position for e in self._elements}

    def __len__(self) -> int:
        return len(self._elements)

    def __iter__(self):
        return iter(self._elements)

    def __getitem__(self, position: int) -> ExteriorBasisIndex:
        return self._elements[position]

    def position(self, indices: Tuple[int, ...]) -> int:
        return self._position[tuple(indices)]

    def wedge(self, a: int, b: int) -> Tuple[int, int]:
        """e_a ∧ e_b as (sign, position); sign 0 when a == b."""
        if a == b:
            return 0, -1
        if a < b:
            return 1, self._position[(a, b)]
        return -1, self._position[(b, a)]


def exterior_index(dim: int, arity: int) -> List[ExteriorBasisIndex]:
    if arity not in (2, 3):
        raise InvalidParameterError(f"Only arities 2 and 3 are used, got {arity}")
    return list(ExteriorBasis(dim, arity))


def lambda3_columns(dim: int) -> int:
    return comb(dim, 3)


def ce_boundary_2(L: LieAlgebra) -> SparseMatrix:
    """N x C(N,2) matrix of e_i ∧ e_j -> [e_i, e_j]."""
    pairs = ExteriorBasis(L.dim, 2)
    entries = {}
    for element in pairs:
        i, j = element.indices
        for k, c in L.bracket_basis(i, j).items():
            entries[(k, element.position)] = c
    return SparseMatrix(L.dim, len(pairs), entries)


def ce_boundary_3(L: LieAlgebra) -> SparseMatrix:
    """
    C(N,2) x C(N,3) matrix of
    e_i ∧ e_j ∧ e_k -> [e_i,e_j] ∧ e_k - [e_i,e_k] ∧ e_j + [e_j,e_k] ∧ e_i,
    wedge terms normalized to increasing index order.
    """
    log = LogManager().get_logger("lieschur.multiplier")
    start = time.perf_counter()
    pairs = ExteriorBasis(L.dim, 2)
    triples = ExteriorBasis(L.dim, 3)
    entries: Dict[Tuple[int, int], Fraction] = {}
    for element in triples:
        i, j, k = element.indices
        column: Dict[int, Fraction] = {}
        for (a, b, other), sign in (((i, j, k), 1), ((i, k, j), -1), ((j, k, i), 1)):
            for m, c in L.bracket_basis(a, b).items():
                wedge_sign, row = pairs.wedge(m, other)
                if wedge_sign:
                    column[row] = column.get(row, 0) + sign * wedge_sign * c
        for row, value in column.items():
            if value:
                entries[(row, element.position)] = value
    log.debug(f"assembled boundary of shape ({len(pairs)}, {len(triples)}) with {len(entries)} entries "
              f"in {time.perf_counter() - start:.3f}s")
    return SparseMatrix(len(pairs), len(triples), entries)


class HomologyProfile:
    """Ranks behind one multiplier computation."""
    __slots__ = ['dim', 'nullity_boundary_2', 'rank_boundary_2', 'rank_boundary_3']

    def __init__(self, dim: int, nullity_boundary_2: int, rank_boundary_2: int, rank_boundary_3: int) -> None:
        self.dim = dim
        self.nullity_boundary_2 = nullity_boundary_2
        self.rank_boundary_2 = rank_boundary_2
        self.rank_boundary_3 = rank_boundary_3

    @property
    def multiplier(self) -> int:
        return self.nullity_boundary_2 - self.rank_boundary_3

    def as_dict(self) -> Dict[str, int]:
        return {"dim": self.dim, "nullity_d2": self.nullity_boundary_2, "rank_d2": self.rank_boundary_2,
                "rank_d3": self.rank_boundary_3, "multiplier": self.multiplier}

    def __repr__(self) -> str:
        return f"HomologyProfile({self.as_dict()})"


def homology_profile(L: LieAlgebra) -> HomologyProfile:
    log = LogManager().get_logger("lieschur.multiplier")
    d2 = ce_boundary_2(L)
    rank_d2 = rank(d2)
    rank_d3 = rank(ce_boundary_3(L)) if L.dim >= 3 else 0
    profile = HomologyProfile(L.dim, d2.cols - rank_d2, rank_d2, rank_d3)
    assert profile.multiplier >= 0, f"Negative homology dimension {profile}"
    log.debug(f"homology profile {profile.as_dict()}")
    return profile


def multiplier_dimension(L: LieAlgebra) -> int:
    """dim M(L) = nullity(∂₂) - rank(∂₃)."""
    return homology_profile(L).multiplier


def multiplier_of_free_nilpotent(n: int, c: int) -> int:
    """
    Closed form dim M(F/F^(c+1)) = l_n(c+1): the relations are R = F^(c+1) and [F, R] = F^(c+2).
    Raises:
        InvalidParameterError: n < 2 or c < 1.
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 2:
        raise InvalidParameterError(f"The closed form needs n >= 2 generators, got {n!r}")
    if isinstance(c, bool) or not isinstance(c, int) or c < 1:
        raise InvalidParameterError(f"c must be a positive integer, got {c!r}")
    return witt_dimension(n, c + 1)
