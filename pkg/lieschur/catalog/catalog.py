"""
Built-in test algebras, the golden catalog and the structure-constant text format:

    dim 3
    labels a b c                 # optional, N names
    bracket 1 2 -> 1*3           # 1-based, i < j, coefficients p or p/q

Omitted pairs bracket to zero and '#' starts a comment.
"""
import os
import re
import json
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np

from lieschur.exact_linalg import SparseMatrix
from lieschur.exceptions import (InvalidParameterError, ParseError, IndexOutOfRangeError, DuplicateBracketError,
                                 OrientationError, JacobiViolationError)
from lieschur.free_lie import free_nilpotent
from lieschur.lie_core import LieAlgebra, validate, lower_central_series, quotient, change_basis, Subspace
from lieschur.log_manager import LogManager

CATALOG_PATH = os.path.join(os.path.dirname(os.path.abspath(__file__)), "data", "catalog.json")

_DIM_RE = re.compile(r"^dim\s+(\S+)$")
_LABELS_RE = re.compile(r"^labels(\s+.*)?$")
_BRACKET_RE = re.compile(r"^bracket\s+(\S+)\s+(\S+)\s*->\s*(.*)$")
_TERM_RE = re.compile(r"^([+-]?[0-9]+(?:/[0-9]+)?)\s*\*\s*(\S+)$")
_SPEC_RE = re.compile(r"^([a-z_]+):(-?[0-9]+(?:,-?[0-9]+)*)$")
_INDEX_RE = re.compile(r"[0-9]+")


def abelian(n: int) -> LieAlgebra:
    if n < 1:
        raise InvalidParameterError(f"abelian(n) needs n >= 1, got {n}")
    return LieAlgebra(n)


def heisenberg(k: int) -> LieAlgebra:
    """Dimension 2k+1 with [e_(2i-1), e_(2i)] = e_(2k+1)."""
    if k < 1:
        raise InvalidParameterError(f"heisenberg(k) needs k >= 1, got {k}")
    return LieAlgebra(2 * k + 1, {(2 * i, 2 * i + 1): {2 * k: 1} for i in range(k)})


def filiform(m: int) -> LieAlgebra:
    """Dimension m with [e_1, e_i] = e_(i+1) for 2 <= i < m; class m - 1."""
    if m < 2:
        raise InvalidParameterError(f"filiform(m) needs m >= 2, got {m}")
    return LieAlgebra(m, {(0, i): {i + 1: 1} for i in range(1, m - 1)})


def random_algebra(seed: int) -> LieAlgebra:
    """
    A valid nilpotent algebra of dimension <= 8: a free nilpotent algebra modulo a random
    subspace of its central last term, then rewritten in a random unimodular basis.
    """
    if seed < 0:
        raise InvalidParameterError(f"random(seed) needs seed >= 0, got {seed}")
    rng = np.random.default_rng(seed)
    n, c = [(2, 3), (3, 2), (2, 4)][int(rng.integers(0, 3))]
    L = free_nilpotent(n, c)
    last_term = lower_central_series(L)[c - 1]
    killed = int(rng.integers(0, last_term.dim))
    vectors = []
    for _ in range(killed):
        weights = rng.integers(-2, 3, size=last_term.dim)
        vector: Dict[int, Fraction] = {}
        for w, row in zip(weights, last_term.vectors()):
            for k, v in row.items():
                vector[k] = vector.get(k, 0) + int(w) * v
        vectors.append(vector)
    Q = quotient(L, Subspace(L.dim, vectors))

    dim = Q.dim
    unitriangular = np.eye(dim, dtype=np.int64) + np.tril(rng.integers(-1, 2, size=(dim, dim)), k=-1)
    P = unitriangular[rng.permutation(dim)]
    return change_basis(Q, SparseMatrix.from_dense([[int(x) for x in row] for row in P]))


FAMILIES: Dict[str, Tuple[int, Callable[..., LieAlgebra]]] = {
    "abelian": (1, abelian),
    "heisenberg": (1, heisenberg),
    "filiform": (1, filiform),
    "free": (2, free_nilpotent),
    "random": (1, random_algebra),
}


def builtin(name: str, params: List[int]) -> LieAlgebra:
    """
    Construct and validate a built-in algebra.
    Raises:
        InvalidParameterError: unknown family, wrong parameter count or invalid values.
    """
    if name not in FAMILIES:
        raise InvalidParameterError(f"Unknown family {name!r}; known: {', '.join(sorted(FAMILIES))}")
    arity, constructor = FAMILIES[name]
    if len(params) != arity or not all(isinstance(p, int) and not isinstance(p, bool) for p in params):
        raise InvalidParameterError(f"{name} takes {arity} integer parameter(s), got {params!r}")
    L = constructor(*params)
    report = validate(L)
    assert report.ok, f"builtin {name}{tuple(params)} fails Jacobi at {report.triple}"
    return L


def parse_spec(spec: str) -> Tuple[str, List[int]]:
    """'free:2,3' -> ('free', [2, 3])."""
    match = _SPEC_RE.match(spec.strip())
    if not match:
        raise InvalidParameterError(f"Builtin spec must look like family:p1,p2, got {spec!r}")
    return match.group(1), [int(p) for p in match.group(2).split(",")]


def from_spec(spec: str) -> LieAlgebra:
    return builtin(*parse_spec(spec))


def _parse_index(token: str, line_no: int, column: int, dim: int) -> int:
    if not _INDEX_RE.fullmatch(token):
        raise ParseError(line_no, column, f"expected a basis index, got {token!r}")
    value = int(token)
    if not 1 <= value <= dim:
        raise IndexOutOfRangeError(f"basis index {value} outside 1..{dim}", line_no)
    return value - 1


def parse(text: str) -> LieAlgebra:
    """
    Parse the structure-constant format into a validated LieAlgebra.
    Raises:
        ParseError: syntax errors, with line and column.
        IndexOutOfRangeError, OrientationError, DuplicateBracketError, JacobiViolationError: semantic errors.
    """
    dim: Optional[int] = None
    labels: Optional[List[str]] = None
    structure: Dict[Tuple[int, int], Dict[int, Fraction]] = {}
    content_lines = 0

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        offset = len(line) - len(line.lstrip())
        line = line.strip()
        if not line:
            continue
        content_lines += 1

        if dim is None:
            match = _DIM_RE.match(line)
            if not match or not _INDEX_RE.fullmatch(match.group(1)):
                raise ParseError(line_no, offset + 1, "first line must be 'dim N'")
            dim = int(match.group(1))
            continue

        if line.startswith("labels") and _LABELS_RE.match(line):
            if content_lines != 2:
                raise ParseError(line_no, offset + 1, "'labels' must directly follow 'dim'")
            labels = line.split()[1:]
            if len(labels) != dim:
                raise ParseError(line_no, offset + 1, f"expected {dim} labels, got {len(labels)}")
            continue

        match = _BRACKET_RE.match(line)
        if not match:
            raise ParseError(line_no, offset + 1, "expected 'bracket i j -> c1*k1 + c2*k2 + ...'")
        i = _parse_index(match.group(1), line_no, offset + match.start(1) + 1, dim)
        j = _parse_index(match.group(2), line_no, offset + match.start(2) + 1, dim)
        if i >= j:
            raise OrientationError(f"bracket {i + 1} {j + 1} must have i < j", line_no)
        if (i, j) in structure:
            raise DuplicateBracketError(f"bracket {i + 1} {j + 1} given twice", line_no)

        vector: Dict[int, Fraction] = {}
        rhs_start = offset + match.start(3)
        position = 0
        for term in match.group(3).split("+"):
            column = rhs_start + position + (len(term) - len(term.lstrip())) + 1
            position += len(term) + 1
            term_match = _TERM_RE.match(term.strip())
            if not term_match:
                raise ParseError(line_no, column, f"expected 'coefficient*index', got {term.strip()!r}")
            coefficient_text, index_text = term_match.groups()
            if "/" in coefficient_text and int(coefficient_text.split("/")[1]) == 0:
                raise ParseError(line_no, column, "zero denominator")
            k = _parse_index(index_text, line_no, column, dim)
            if k in vector:
                raise DuplicateBracketError(f"basis index {k + 1} repeated in bracket {i + 1} {j + 1}", line_no)
            vector[k] = Fraction(coefficient_text)
        structure[(i, j)] = {k: c for k, c in vector.items() if c}

    if dim is None:
        raise ParseError(1, 1, "empty input, expected 'dim N'")
    L = LieAlgebra(dim, structure, labels)
    report = validate(L)
    if not report.ok:
        raise JacobiViolationError(report.triple)
    return L


def serialize(L: LieAlgebra) -> str:
    """Canonical text form: labels only when they differ from e1..eN, entries sorted by (i, j, k)."""
    lines = [f"dim {L.dim}"]
    if L.labels != [f"e{i + 1}" for i in range(L.dim)]:
        if any(not label or re.search(r"[\s#]", label) for label in L.labels):
            raise InvalidParameterError("Labels must be nonempty and free of whitespace and '#'")
        lines.append("labels " + " ".join(L.labels))
    terms: Dict[Tuple[int, int], List[str]] = {}
    for i, j, k, c in L.structure_constants():
        terms.setdefault((i, j), []).append(f"{c}*{k + 1}")
    for (i, j), parts in terms.items():
        lines.append(f"bracket {i + 1} {j + 1} -> " + " + ".join(parts))
    return "\n".join(lines) + "\n"


class CatalogEntry:
    """
    Named builtin with optional golden values. Each expected value is stored in the
    data file together with its provenance tag.
    """
    __slots__ = ['_name', '_family', '_params', '_expected']

    def __init__(self, name: str, family: str, params: List[int], expected: Optional[Dict[str, Dict]] = None) -> None:
        self._name = name
        self._family = family
        self._params = list(params)
        self._expected = dict(expected or {})
        for key, record in self._expected.items():
            assert "value" in record and "provenance" in record, f"{name}: expected {key} lacks value or provenance"

    @property
    def name(self) -> str:
        return self._name

    @property
    def family(self) -> str:
        return self._family

    @property
    def params(self) -> List[int]:
        return list(self._params)

    def expected(self, key: str) -> Optional[int]:
        record = self._expected.get(key)
        return None if record is None else record["value"]

    def provenance(self, key: str) -> Optional[str]:
        record = self._expected.get(key)
        return None if record is None else record["provenance"]

    def build(self) -> LieAlgebra:
        return builtin(self._family, self._params)

    def __repr__(self) -> str:
        return f"CatalogEntry({self._name})"


def load_catalog(path: str = CATALOG_PATH) -> List[CatalogEntry]:
    with open(path, "r", encoding="utf-8") as f:
        data = json.load(f)
    entries = [CatalogEntry(e["name"], e["family"], e["params"], e.get("expected")) for e in data["entries"]]
    LogManager().get_logger("lieschur.catalog").debug(f"loaded {len(entries)} catalog entries from {path}")
    return entries


def catalog_algebras(max_dim: Optional[int] = None, path: str = CATALOG_PATH) -> List[Tuple[CatalogEntry, LieAlgebra]]:
    """Build every catalog entry, optionally skipping algebras above max_dim."""
    built = []
    for entry in load_catalog(path):
        L = entry.build()
        if max_dim is None or L.dim <= max_dim:
            built.append((entry, L))
    return built
