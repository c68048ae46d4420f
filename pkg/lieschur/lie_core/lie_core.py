"""
Finite-dimensional Lie algebras given by structure constants, and the subspace
arithmetic (products, lower central series, quotients) built on top of them.

Basis indices are 0-based internally; anything user-facing (labels, violation
triples) is 1-based.
"""
from itertools import combinations
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from lieschur.exact_linalg import SparseMatrix, Scalar, to_rational, row_space_canonical, nullspace, inverse
from lieschur.exceptions import DimensionMismatchError, InvalidParameterError, NotNilpotentError
from lieschur.log_manager import LogManager

Vector = Dict[int, Fraction]


def _add_scaled(target: Vector, source: Mapping[int, Fraction], scale: Fraction) -> None:
    for k, v in source.items():
        value = target.get(k, 0) + scale * v
        if value:
            target[k] = value
        else:
            target.pop(k, None)


class LieAlgebra:
    """
    Lie algebra on the basis e_0..e_{N-1} with [e_i, e_j] = sum_k c_ij^k e_k.
    Parameters:
        dim (int): Dimension N.
        structure (mapping): (i, j) -> {k: c_ij^k} for i < j. Pairs not listed bracket to zero.
        labels (list of str, optional): Printable basis names, default e1..eN.
        grading (list of int, optional): Degree of each basis element for graded algebras.
    """
    __slots__ = ['_dim', '_labels', '_structure', '_grading']

    def __init__(self, dim: int, structure: Optional[Mapping[Tuple[int, int], Mapping[int, Scalar]]] = None,
                 labels: Optional[Sequence[str]] = None, grading: Optional[Sequence[int]] = None) -> None:
        if isinstance(dim, bool) or not isinstance(dim, int) or dim < 0:
            raise InvalidParameterError(f"dim must be a nonnegative integer, got {dim!r}")
        labels = list(labels) if labels is not None else [f"e{i + 1}" for i in range(dim)]
        if len(labels) != dim:
            raise InvalidParameterError(f"Expected {dim} labels, got {len(labels)}")
        if grading is not None and len(grading) != dim:
            raise InvalidParameterError(f"Expected {dim} degrees, got {len(grading)}")

        table: Dict[Tuple[int, int], Vector] = {}
        for (i, j), combination in (structure or {}).items():
            if not (0 <= i < j < dim):
                raise InvalidParameterError(f"Structure key ({i}, {j}) must satisfy 0 <= i < j < {dim}")
            vector = {}
            for k, c in combination.items():
                if not 0 <= k < dim:
                    raise InvalidParameterError(f"Basis index {k} out of range for dim {dim}")
                c = to_rational(c)
                if c:
                    vector[k] = c
            if vector:
                table[(i, j)] = vector

        self._dim = dim
        self._labels = labels
        self._structure = table
        self._grading = list(grading) if grading is not None else None

    @property
    def dim(self) -> int:
        return self._dim

    @property
    def labels(self) -> List[str]:
        return list(self._labels)

    @property
    def grading(self) -> Optional[List[int]]:
        return list(self._grading) if self._grading is not None else None

    @property
    def structure(self) -> Dict[Tuple[int, int], Vector]:
        return {key: dict(v) for key, v in self._structure.items()}

    def structure_constants(self) -> Iterable[Tuple[int, int, int, Fraction]]:
        """Stored constants (i, j, k, c) with i < j, sorted by (i, j, k)."""
        for (i, j) in sorted(self._structure):
            vector = self._structure[(i, j)]
            for k in sorted(vector):
                yield i, j, k, vector[k]

    def bracket_basis(self, i: int, j: int) -> Vector:
        """[e_i, e_j] as a sparse coordinate vector."""
        if i == j:
            return {}
        if i < j:
            return dict(self._structure.get((i, j), {}))
        return {k: -v for k, v in self._structure.get((j, i), {}).items()}

    def bracket(self, u: Mapping[int, Scalar], v: Mapping[int, Scalar]) -> Vector:
        """[u, v] for sparse coordinate vectors u and v."""
        result: Vector = {}
        for i, a in u.items():
            for j, b in v.items():
                if i == j:
                    continue
                if i < j:
                    vector, sign = self._structure.get((i, j)), 1
                else:
                    vector, sign = self._structure.get((j, i)), -1
                if vector:
                    _add_scaled(result, vector, sign * a * b)
        return result

    def is_abelian(self) -> bool:
        return not self._structure

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return structurally_equal(self, other)

    def __hash__(self) -> int:
        return hash((self._dim, tuple(self.structure_constants())))

    def __repr__(self) -> str:
        return f"LieAlgebra(dim={self._dim}, nonzero_brackets={len(self._structure)})"


def structurally_equal(a: LieAlgebra, b: LieAlgebra, compare_labels: bool = True) -> bool:
    """Same dimension and identical structure constants (and labels unless disabled)."""
    if a.dim != b.dim or a._structure != b._structure:
        return False
    return not compare_labels or a._labels == b._labels


class ValidationReport:
    """Outcome of validate; truthy when the Jacobi identity holds everywhere."""
    __slots__ = ['_triple', '_residual']

    def __init__(self, triple: Optional[Tuple[int, int, int]] = None, residual: Optional[Vector] = None) -> None:
        self._triple = triple
        self._residual = residual or {}

    @property
    def ok(self) -> bool:
        return self._triple is None

    @property
    def triple(self) -> Optional[Tuple[int, int, int]]:
        """First violating basis triple, 1-based."""
        return self._triple

    @property
    def residual(self) -> Vector:
        return dict(self._residual)

    def __bool__(self) -> bool:
        return self.ok

    def __repr__(self) -> str:
        return "ValidationReport(ok)" if self.ok else f"ValidationReport(violation at {self._triple})"


def validate(L: LieAlgebra) -> ValidationReport:
    """
    Exhaustive Jacobi check over all triples i < j < k, in lexicographic order.
    Antisymmetry holds by construction of LieAlgebra.
    """
    n = L.dim
    for i, j, k in combinations(range(n), 3):
        jacobi: Vector = {}
        for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
            inner = L.bracket_basis(a, b)
            if inner:
                _add_scaled(jacobi, L.bracket(inner, {c: Fraction(1)}), Fraction(1))
        if jacobi:
            LogManager().get_logger("lieschur.lie_core").debug(f"Jacobi violation at ({i + 1},{j + 1},{k + 1})")
            return ValidationReport((i + 1, j + 1, k + 1), jacobi)
    return ValidationReport()


class Subspace:
    """
    Subspace of an ambient coordinate space, stored as the reduced row-echelon form of a spanning set.
    Equal subspaces have identical bases.
    """
    __slots__ = ['_ambient_dim', '_basis']

    def __init__(self, ambient_dim: int, vectors: Iterable[Mapping[int, Scalar]] = ()) -> None:
        self._ambient_dim = ambient_dim
        self._basis = row_space_canonical(SparseMatrix.from_row_dicts(list(vectors), ambient_dim))

    @classmethod
    def from_matrix(cls, matrix: SparseMatrix) -> 'Subspace':
        return cls(matrix.cols, matrix.row_dicts())

    @property
    def ambient_dim(self) -> int:
        return self._ambient_dim

    @property
    def basis(self) -> SparseMatrix:
        return self._basis

    @property
    def dim(self) -> int:
        return self._basis.rows

    def vectors(self) -> List[Vector]:
        return self._basis.row_dicts()

    def pivots(self) -> List[int]:
        return [min(row) for row in self.vectors()]

    def reduce(self, v: Mapping[int, Scalar]) -> Vector:
        """Remainder of v modulo the subspace; zero on pivot coordinates."""
        remainder = {k: to_rational(c) for k, c in v.items() if c}
        for pivot, row in zip(self.pivots(), self.vectors()):
            a = remainder.get(pivot)
            if a:
                _add_scaled(remainder, row, -a)
        return remainder

    def contains(self, v: Mapping[int, Scalar]) -> bool:
        return not self.reduce(v)

    def contains_subspace(self, other: 'Subspace') -> bool:
        return all(self.contains(v) for v in other.vectors())

    def sum(self, other: 'Subspace') -> 'Subspace':
        _check_ambient(self, other)
        return Subspace(self._ambient_dim, self.vectors() + other.vectors())

    def intersection_dim(self, other: 'Subspace') -> int:
        return self.dim + other.dim - self.sum(other).dim

    def is_zero(self) -> bool:
        return self.dim == 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self._ambient_dim == other._ambient_dim and self._basis == other._basis

    def __hash__(self) -> int:
        return hash((self._ambient_dim, self._basis))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient_dim={self._ambient_dim})"


def _check_ambient(*spaces: Subspace) -> None:
    dims = {s.ambient_dim for s in spaces}
    if len(dims) != 1:
        raise DimensionMismatchError(f"Subspaces live in different ambient dimensions {sorted(dims)}")


def whole(L: LieAlgebra) -> Subspace:
    return Subspace(L.dim, [{i: 1} for i in range(L.dim)])


def zero(L: LieAlgebra) -> Subspace:
    return Subspace(L.dim)


def product_space(L: LieAlgebra, U: Subspace, V: Subspace) -> Subspace:
    """Span of [u, v] over basis vectors u of U and v of V."""
    _check_ambient(U, V)
    if U.ambient_dim != L.dim:
        raise DimensionMismatchError(f"Subspaces of dimension-{U.ambient_dim} space used with a dimension-{L.dim} algebra")
    spanning = []
    for u in U.vectors():
        for v in V.vectors():
            w = L.bracket(u, v)
            if w:
                spanning.append(w)
    return Subspace(L.dim, spanning)


def derived_algebra(L: LieAlgebra) -> Subspace:
    full = whole(L)
    return product_space(L, full, full)


def lower_central_series(L: LieAlgebra) -> List[Subspace]:
    """
    L^1 = L, L^(k+1) = [L, L^k], listed until a term repeats (the repeat is not listed).
    A nilpotent algebra ends with the zero subspace.
    """
    full = whole(L)
    series = [full]
    while True:
        following = product_space(L, full, series[-1])
        if following.dim == series[-1].dim:
            break
        series.append(following)
        if following.is_zero():
            break
    LogManager().get_logger("lieschur.lie_core").debug(f"lower central series dims {[s.dim for s in series]}")
    return series


def nilpotency_class(L: LieAlgebra) -> int:
    """
    Smallest c with L^(c+1) = 0.
    Raises:
        NotNilpotentError: the series stabilizes at a nonzero subspace.
    """
    if L.dim < 1:
        raise InvalidParameterError("Nilpotency class needs an algebra of dimension at least 1")
    series = lower_central_series(L)
    if not series[-1].is_zero():
        raise NotNilpotentError(f"Lower central series stabilizes at dimension {series[-1].dim}", series[-1].dim)
    return len(series) - 1


def min_generators(L: LieAlgebra) -> int:
    """dim L - dim L^2, the generator count of a nilpotent algebra."""
    if L.dim >= 1:
        nilpotency_class(L)
    return L.dim - derived_algebra(L).dim


def graded_dimensions(L: LieAlgebra) -> List[int]:
    """dim L^k - dim L^(k+1) for k = 1..c."""
    series = lower_central_series(L)
    if not series[-1].is_zero():
        raise NotNilpotentError(f"Lower central series stabilizes at dimension {series[-1].dim}", series[-1].dim)
    return [a.dim - b.dim for a, b in zip(series, series[1:])]


def center(L: LieAlgebra) -> Subspace:
    """Kernel of ad: all v with [v, e_j] = 0 for every j."""
    n = L.dim
    entries = {}
    for i in range(n):
        for j in range(n):
            for k, c in L.bracket_basis(i, j).items():
                entries[(j * n + k, i)] = c
    return Subspace.from_matrix(nullspace(SparseMatrix(n * n, n, entries)))


def is_ideal(L: LieAlgebra, U: Subspace) -> bool:
    return U.contains_subspace(product_space(L, whole(L), U))


def quotient(L: LieAlgebra, ideal: Subspace) -> LieAlgebra:
    """
    L / ideal on the complement spanned by the standard basis vectors that are not
    pivots of the ideal's echelon basis, in index order. Constants are read off by
    reducing modulo the ideal.
    Raises:
        InvalidParameterError: the subspace is not an ideal.
    """
    if ideal.ambient_dim != L.dim:
        raise DimensionMismatchError(f"Ideal of dimension-{ideal.ambient_dim} space used with a dimension-{L.dim} algebra")
    if not is_ideal(L, ideal):
        raise InvalidParameterError("Subspace is not an ideal")
    pivots = set(ideal.pivots())
    complement = [i for i in range(L.dim) if i not in pivots]
    position = {old: new for new, old in enumerate(complement)}
    structure = {}
    for a, b in combinations(range(len(complement)), 2):
        image = ideal.reduce(L.bracket_basis(complement[a], complement[b]))
        if image:
            structure[(a, b)] = {position[k]: c for k, c in image.items()}
    labels = [L.labels[i] for i in complement]
    grading = [L.grading[i] for i in complement] if L.grading is not None else None
    return LieAlgebra(len(complement), structure, labels, grading)


def quotient_by_last_term(L: LieAlgebra) -> LieAlgebra:
    """
    L / L^c for L nilpotent of class c >= 2.
    Raises:
        NotNilpotentError: L is not nilpotent.
        InvalidParameterError: class below 2.
    """
    c = nilpotency_class(L)
    if c < 2:
        raise InvalidParameterError(f"Quotient by the last term needs class >= 2, got class {c}")
    return quotient(L, lower_central_series(L)[c - 1])


def change_basis(L: LieAlgebra, P: SparseMatrix) -> LieAlgebra:
    """
    Structure constants in the basis f_r = sum_i P[r, i] e_i.
    Raises:
        DimensionMismatchError: P is not an invertible dim x dim matrix.
    """
    if P.shape != (L.dim, L.dim):
        raise DimensionMismatchError(f"Basis change {P.shape} does not fit dimension {L.dim}")
    P_inv = inverse(P)
    inverse_rows = P_inv.row_dicts()
    new_basis = P.row_dicts()
    structure = {}
    for r, s in combinations(range(L.dim), 2):
        w = L.bracket(new_basis[r], new_basis[s])
        coordinates: Vector = {}
        for i, a in w.items():
            _add_scaled(coordinates, inverse_rows[i], a)
        if coordinates:
            structure[(r, s)] = coordinates
    return LieAlgebra(L.dim, structure)
