"""
Hall bases of free Lie algebras and structure constants of the free nilpotent
quotients F/F^(c+1).

Convention: trees are ordered by degree, then by construction order inside a
degree, and a node (u, v) belongs to the basis iff u > v and, when u = (a, b),
b <= v. This is the classical basic-commutator family of M. Hall.
"""
from fractions import Fraction
from itertools import combinations
from collections import Counter
from typing import Dict, List, Optional, Tuple

from lieschur.exceptions import InvalidParameterError
from lieschur.lie_core import LieAlgebra
from lieschur.log_manager import LogManager


def generator_names(n: int) -> List[str]:
    return ["x", "y", "z", "w"][:n] if n <= 4 else [f"x{i + 1}" for i in range(n)]


class HallTree:
    """
    Basis element of a free Lie algebra: a generator leaf or a bracket of two Hall trees.
    Trees remember the HallBasis that built them and their position in it.
    """
    __slots__ = ['_basis', '_index', '_degree', '_generator', '_left', '_right']

    def __init__(self, basis: 'HallBasis', index: int, generator: Optional[int] = None,
                 left: Optional['HallTree'] = None, right: Optional['HallTree'] = None) -> None:
        self._basis = basis
        self._index = index
        self._generator = generator
        self._left = left
        self._right = right
        self._degree = 1 if generator is not None else left.degree + right.degree

    @property
    def index(self) -> int:
        return self._index

    @property
    def degree(self) -> int:
        return self._degree

    @property
    def is_leaf(self) -> bool:
        return self._generator is not None

    @property
    def generator(self) -> Optional[int]:
        return self._generator

    @property
    def left(self) -> Optional['HallTree']:
        return self._left

    @property
    def right(self) -> Optional['HallTree']:
        return self._right

    @property
    def basis(self) -> 'HallBasis':
        return self._basis

    def foliage(self) -> Tuple[int, ...]:
        """Underlying word of generator indices, read left to right."""
        return (self._generator,) if self.is_leaf else self._left.foliage() + self._right.foliage()

    def label(self, names: Optional[List[str]] = None) -> str:
        names = names or generator_names(self._basis.n)
        if self.is_leaf:
            return names[self._generator]
        return f"[{self._left.label(names)},{self._right.label(names)}]"

    def __repr__(self) -> str:
        return f"HallTree({self.label()}, index={self._index})"


class LieElement(dict):
    """Sparse combination of Hall trees: basis index -> nonzero Fraction."""

    def __init__(self, coefficients: Optional[Dict[int, int]] = None) -> None:
        super().__init__({k: Fraction(v) for k, v in (coefficients or {}).items() if v})

    def __neg__(self) -> 'LieElement':
        return LieElement({k: -v for k, v in self.items()})

    def is_integral(self) -> bool:
        return all(v.denominator == 1 for v in self.values())


class HallBasis:
    """
    All Hall trees on n generators up to degree maxdeg, with a memoized collection
    routine rewriting brackets of trees in the basis. The memo table belongs to the
    instance.
    """
    __slots__ = ['_n', '_maxdeg', '_trees', '_node_index', '_memo']

    def __init__(self, n: int, maxdeg: int) -> None:
        for name, value in (("n", n), ("maxdeg", maxdeg)):
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                raise InvalidParameterError(f"{name} must be a positive integer, got {value!r}")
        self._n = n
        self._maxdeg = maxdeg
        self._trees: List[HallTree] = [HallTree(self, i, generator=i) for i in range(n)]
        self._node_index: Dict[Tuple[int, int], int] = {}
        self._memo: Dict[Tuple[int, int], Dict[int, int]] = {}

        by_degree: Dict[int, List[HallTree]] = {1: list(self._trees)}
        for degree in range(2, maxdeg + 1):
            layer = []
            for right_degree in range(1, degree):
                for v in by_degree[right_degree]:
                    for u in by_degree[degree - right_degree]:
                        if u.index <= v.index:
                            continue
                        if not u.is_leaf and u.right.index > v.index:
                            continue
                        tree = HallTree(self, len(self._trees) + len(layer), left=u, right=v)
                        layer.append(tree)
            for tree in layer:
                self._node_index[(tree.left.index, tree.right.index)] = tree.index
            self._trees.extend(layer)
            by_degree[degree] = layer

    @property
    def n(self) -> int:
        return self._n

    @property
    def maxdeg(self) -> int:
        return self._maxdeg

    @property
    def trees(self) -> List[HallTree]:
        return list(self._trees)

    @property
    def memo_size(self) -> int:
        return len(self._memo)

    def __len__(self) -> int:
        return len(self._trees)

    def __getitem__(self, index: int) -> HallTree:
        return self._trees[index]

    def degree_counts(self) -> List[int]:
        counts = Counter(t.degree for t in self._trees)
        return [counts[d] for d in range(1, self._maxdeg + 1)]

    def labels(self) -> List[str]:
        names = generator_names(self._n)
        return [t.label(names) for t in self._trees]

    def owns(self, tree: HallTree) -> bool:
        return tree.basis is self and 0 <= tree.index < len(self._trees) and self._trees[tree.index] is tree

    def collect(self, i: int, j: int) -> Dict[int, int]:
        """
        Expansion of [t_i, t_j] in the basis, truncated above maxdeg.
        The returned dict is shared with the memo table and must not be mutated.
        """
        if i == j:
            return {}
        u, v = self._trees[i], self._trees[j]
        if u.degree + v.degree > self._maxdeg:
            return {}
        key = (i, j)
        cached = self._memo.get(key)
        if cached is not None:
            return cached
        if i < j:
            result = {k: -c for k, c in self.collect(j, i).items()}
        elif u.is_leaf or u.right.index <= j:
            result = {self._node_index[key]: 1}
        else:
            # [[a, b], v] = [[a, v], b] + [a, [b, v]]
            a, b = u.left.index, u.right.index
            result = {}
            for t, c in self.collect(a, j).items():
                _accumulate(result, self.collect(t, b), c)
            for s, c in self.collect(b, j).items():
                _accumulate(result, self.collect(a, s), c)
        self._memo[key] = result
        return result


def _accumulate(target: Dict[int, int], source: Dict[int, int], scale: int) -> None:
    for k, c in source.items():
        value = target.get(k, 0) + scale * c
        if value:
            target[k] = value
        else:
            target.pop(k, None)


def hall_basis(n: int, maxdeg: int) -> List[HallTree]:
    """All Hall trees of degree <= maxdeg, by degree then construction order."""
    return HallBasis(n, maxdeg).trees


def collect_bracket(u: HallTree, v: HallTree, maxdeg: int) -> LieElement:
    """
    [u, v] rewritten in the Hall basis u and v were drawn from; zero above maxdeg.
    Raises:
        InvalidParameterError: the trees come from different bases or a basis of another maxdeg.
    """
    basis = u.basis
    if not (basis.owns(u) and basis.owns(v)) or basis.maxdeg != maxdeg:
        raise InvalidParameterError(f"Trees are not drawn from the same Hall basis of degree <= {maxdeg}")
    return LieElement(basis.collect(u.index, v.index))


def free_nilpotent(n: int, c: int) -> LieAlgebra:
    """
    Free nilpotent Lie algebra F/F^(c+1) on n generators, on its Hall basis of degree <= c.
    The grading records the degree of each basis tree.
    """
    log = LogManager().get_logger("lieschur.free_lie")
    basis = HallBasis(n, c)
    structure = {}
    for i, j in combinations(range(len(basis)), 2):
        expansion = LieElement(basis.collect(i, j))
        assert expansion.is_integral(), f"Non-integral Hall collection for ({i}, {j})"
        if expansion:
            structure[(i, j)] = dict(expansion)
    log.debug(f"free_nilpotent({n}, {c}): dim {len(basis)}, degree counts {basis.degree_counts()}, memo {basis.memo_size}")
    return LieAlgebra(len(basis), structure, basis.labels(), [t.degree for t in basis.trees])
