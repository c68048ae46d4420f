"""
Exact sparse linear algebra over the rationals.

Matrices are stored as a dict of rows, each row a dict mapping column index to a
nonzero ``Fraction``. Nothing in this module touches floating point.
"""
import heapq
from math import gcd, lcm
from fractions import Fraction
from collections import Counter
from typing import Dict, Iterable, Iterator, List, Mapping, Sequence, Tuple, Union

from lieschur.exceptions import DimensionMismatchError

Rational = Fraction
Scalar = Union[int, Fraction]


def to_rational(value: Union[Scalar, str]) -> Fraction:
    """Coerce an int, Fraction or "p/q" string to a reduced Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise TypeError(f"Not an exact scalar: {value!r}")
    return Fraction(value)


class SparseMatrix:
    """
    Immutable sparse matrix with exact rational entries.
    Parameters:
        rows (int): Number of rows.
        cols (int): Number of columns.
        entries (mapping): (row, col) -> scalar; zero values are dropped.
    """
    __slots__ = ['_rows', '_cols', '_data']

    def __init__(self, rows: int, cols: int, entries: Mapping[Tuple[int, int], Scalar] = None) -> None:
        if rows < 0 or cols < 0:
            raise DimensionMismatchError(f"Negative shape ({rows}, {cols})")
        self._rows = rows
        self._cols = cols
        data: Dict[int, Dict[int, Fraction]] = {}
        for (i, j), value in (entries or {}).items():
            if not (0 <= i < rows and 0 <= j < cols):
                raise DimensionMismatchError(f"Entry ({i}, {j}) outside shape ({rows}, {cols})")
            value = to_rational(value)
            if value:
                data.setdefault(i, {})[j] = value
        self._data = data

    @classmethod
    def from_row_dicts(cls, row_dicts: Sequence[Mapping[int, Scalar]], cols: int) -> 'SparseMatrix':
        """Build a matrix whose i-th row is the sparse vector row_dicts[i]."""
        return cls(len(row_dicts), cols, {(i, j): v for i, row in enumerate(row_dicts) for j, v in row.items()})

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence[Scalar]], cols: int = None) -> 'SparseMatrix':
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise DimensionMismatchError("Ragged dense input")
        return cls(len(rows), cols, {(i, j): v for i, r in enumerate(rows) for j, v in enumerate(r) if v})

    @classmethod
    def zeros(cls, rows: int, cols: int) -> 'SparseMatrix':
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> 'SparseMatrix':
        return cls(n, n, {(i, i): 1 for i in range(n)})

    @property
    def rows(self) -> int:
        return self._rows

    @property
    def cols(self) -> int:
        return self._cols

    @property
    def shape(self) -> Tuple[int, int]:
        return self._rows, self._cols

    @property
    def nnz(self) -> int:
        return sum(len(r) for r in self._data.values())

    def get(self, i: int, j: int) -> Fraction:
        return self._data.get(i, {}).get(j, Fraction(0))

    def row(self, i: int) -> Dict[int, Fraction]:
        """Copy of row i as a sparse dict."""
        return dict(self._data.get(i, {}))

    def row_dicts(self) -> List[Dict[int, Fraction]]:
        return [self.row(i) for i in range(self._rows)]

    def entries(self) -> Iterator[Tuple[int, int, Fraction]]:
        """Nonzero entries in (row, col) order."""
        for i in sorted(self._data):
            row = self._data[i]
            for j in sorted(row):
                yield i, j, row[j]

    def is_zero(self) -> bool:
        return not self._data

    def to_dense(self) -> List[List[Fraction]]:
        return [[self.get(i, j) for j in range(self._cols)] for i in range(self._rows)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        return hash((self.shape, tuple(self.entries())))

    def __repr__(self) -> str:
        return f"SparseMatrix(shape={self.shape}, nnz={self.nnz})"


def transpose(m: SparseMatrix) -> SparseMatrix:
    return SparseMatrix(m.cols, m.rows, {(j, i): v for i, j, v in m.entries()})


def multiply(a: SparseMatrix, b: SparseMatrix) -> SparseMatrix:
    """
    Exact product a · b.
    Raises:
        DimensionMismatchError: a.cols != b.rows.
    """
    if a.cols != b.rows:
        raise DimensionMismatchError(f"Cannot multiply {a.shape} by {b.shape}")
    b_rows = {i: b.row(i) for i in range(b.rows)}
    b_nonzero = {i for i, r in b_rows.items() if r}
    product: Dict[Tuple[int, int], Fraction] = {}
    for i in range(a.rows):
        a_row = a.row(i)
        c_row: Dict[int, Fraction] = {}
        for k in a_row.keys() & b_nonzero:
            a_ik = a_row[k]
            for j, b_kj in b_rows[k].items():
                c_row[j] = c_row.get(j, 0) + a_ik * b_kj
        product.update(((i, j), v) for j, v in c_row.items() if v)
    return SparseMatrix(a.rows, b.cols, product)


def _primitive_integer_row(row: Mapping[int, Fraction]) -> Dict[int, int]:
    """Scale a rational row to coprime integers; the row space is unchanged."""
    denominator = lcm(*(v.denominator for v in row.values()))
    ints = {j: int(v * denominator) for j, v in row.items()}
    content = gcd(*ints.values())
    return {j: v // content for j, v in ints.items()}


def _fraction_free_rank(vectors: List[Dict[int, int]]) -> int:
    """
    Rank of a list of sparse integer vectors by fraction-free elimination.

    Vectors are consumed shortest first. Each surviving vector picks as pivot the
    column with the fewest entries in the input, which keeps fill-in low. Pivot
    vectors never hold entries in pivot columns created before them, so a new
    vector is reduced in pivot creation order; every step is p*row - a*pivot_row
    followed by division by the content.
    """
    column_count = Counter(j for v in vectors for j in v)
    order = sorted(range(len(vectors)), key=lambda i: (len(vectors[i]), i))
    pivots: Dict[int, Tuple[int, Dict[int, int]]] = {}
    for index in order:
        row = dict(vectors[index])
        heap = [(pivots[j][0], j) for j in row if j in pivots]
        heapq.heapify(heap)
        while heap:
            _, j = heapq.heappop(heap)
            a = row.get(j)
            if a is None:
                continue
            pivot_row = pivots[j][1]
            p = pivot_row[j]
            reduced = {k: v * p for k, v in row.items()}
            for k, v in pivot_row.items():
                value = reduced.get(k, 0) - a * v
                if value:
                    if k not in reduced and k in pivots:
                        heapq.heappush(heap, (pivots[k][0], k))
                    reduced[k] = value
                else:
                    reduced.pop(k, None)
            if reduced:
                content = gcd(*reduced.values())
                if content != 1:
                    reduced = {k: v // content for k, v in reduced.items()}
            row = reduced
        if row:
            pivot_col = min(row, key=lambda k: (column_count[k], k))
            pivots[pivot_col] = (len(pivots), row)
    return len(pivots)


def rank(m: SparseMatrix) -> int:
    """
    Exact rank over the rationals.
    The elimination runs over whichever of rows or columns gives the shorter vectors.
    """
    source = m if m.cols <= m.rows else transpose(m)
    vectors = [_primitive_integer_row(r) for r in source.row_dicts() if r]
    return _fraction_free_rank(vectors)


def nullity(m: SparseMatrix) -> int:
    return m.cols - rank(m)


def _rref_rows(rows: Iterable[Mapping[int, Fraction]]) -> Dict[int, Dict[int, Fraction]]:
    """Gauss-Jordan over Fraction; returns pivot column -> reduced row with leading 1."""
    pivots: Dict[int, Dict[int, Fraction]] = {}
    for source in rows:
        row = dict(source)
        for j in sorted(row.keys() & pivots.keys()):
            a = row.get(j)
            if not a:
                continue
            for k, v in pivots[j].items():
                value = row.get(k, 0) - a * v
                if value:
                    row[k] = value
                else:
                    row.pop(k, None)
        if not row:
            continue
        lead = min(row)
        scale = row[lead]
        row = {k: v / scale for k, v in row.items()}
        for pivot_row in pivots.values():
            a = pivot_row.get(lead)
            if a:
                for k, v in row.items():
                    value = pivot_row.get(k, 0) - a * v
                    if value:
                        pivot_row[k] = value
                    else:
                        pivot_row.pop(k, None)
        pivots[lead] = row
    return pivots


def row_space_canonical(m: SparseMatrix) -> SparseMatrix:
    """
    Reduced row-echelon form with zero rows dropped.
    Two matrices with the same column count have equal row spaces iff their canonical forms are equal.
    """
    pivots = _rref_rows(m.row_dicts())
    return SparseMatrix.from_row_dicts([pivots[j] for j in sorted(pivots)], m.cols)


def nullspace(m: SparseMatrix) -> SparseMatrix:
    """Canonical basis (as rows) of {x : m · x = 0}."""
    pivots = _rref_rows(m.row_dicts())
    free_cols = [j for j in range(m.cols) if j not in pivots]
    basis = []
    for f in free_cols:
        vector = {f: Fraction(1)}
        for p, row in pivots.items():
            if f in row:
                vector[p] = -row[f]
        basis.append(vector)
    return row_space_canonical(SparseMatrix.from_row_dicts(basis, m.cols))


def inverse(m: SparseMatrix) -> SparseMatrix:
    """
    Exact inverse of a square matrix.
    Raises:
        DimensionMismatchError: m is not square or is singular.
    """
    n = m.rows
    if m.cols != n:
        raise DimensionMismatchError(f"Cannot invert non-square matrix {m.shape}")
    augmented = [{**row, **{n + i: Fraction(1)}} for i, row in enumerate(m.row_dicts())]
    pivots = _rref_rows(augmented)
    if sorted(pivots) != list(range(n)):
        raise DimensionMismatchError("Matrix is singular")
    return SparseMatrix.from_row_dicts([{k - n: v for k, v in pivots[i].items() if k >= n} for i in range(n)], n)
