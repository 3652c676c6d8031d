"""
rank_macwilliams.linalg.matrix_gf
~~~~~~~~~~~~
Linear algebra over the two layers of a field tower, GF(q) and GF(q^m):
reduced row echelon form, null spaces, expansion matrices and the rank norm.

Vectors are tuples of element codes (see gfq.field_tower). GF(q) elements are
the codes below q, so a single elimination routine serves both layers.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import List, NamedTuple, Sequence, Tuple

import numpy as np

from exceptions import DimensionMismatchError, PreconditionError, TowerMismatchError
from gfq.field_tower import FieldTower

logger = logging.getLogger(__name__)

Vector = Tuple[int, ...]


class Layer(Enum):
    """Which field of the tower the matrix entries live in"""

    BASE = "base"
    EXTENSION = "extension"


@dataclass(frozen=True)
class MatrixGF:
    """
    Dense row-major matrix over one layer of a field tower

    Attributes:
        owner: the field tower
        layer: BASE for GF(q) entries, EXTENSION for GF(q^m) entries
        rows: number of rows
        cols: number of columns
        entries: row tuples of element codes
    """

    owner: FieldTower
    layer: Layer
    rows: int
    cols: int
    entries: Tuple[Vector, ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows or any(len(row) != self.cols for row in self.entries):
            raise DimensionMismatchError((self.rows, self.cols), [len(row) for row in self.entries], "Ragged matrix")
        bound = self.owner.q if self.layer is Layer.BASE else self.owner.order
        for row in self.entries:
            for value in row:
                if not 0 <= value < bound:
                    raise PreconditionError(f"Entry {value} does not belong to the {self.layer.value} layer of {self.owner!r}")

    @classmethod
    def from_rows(cls, owner: FieldTower, layer: Layer, rows: Sequence[Sequence[int]], cols: int = None) -> "MatrixGF":
        entries = tuple(tuple(int(v) for v in row) for row in rows)
        if cols is None:
            if not entries:
                raise DimensionMismatchError("explicit column count", "empty row list")
            cols = len(entries[0])
        return cls(owner, layer, len(entries), cols, entries)

    @classmethod
    def zeros(cls, owner: FieldTower, layer: Layer, rows: int, cols: int) -> "MatrixGF":
        return cls(owner, layer, rows, cols, tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, owner: FieldTower, layer: Layer, size: int) -> "MatrixGF":
        return cls(owner, layer, size, size, tuple(tuple(int(i == j) for j in range(size)) for i in range(size)))

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.entries)

    def transpose(self) -> "MatrixGF":
        return MatrixGF(self.owner, self.layer, self.cols, self.rows, tuple(self.column(j) for j in range(self.cols)))

    def as_layer(self, layer: Layer) -> "MatrixGF":
        return MatrixGF(self.owner, layer, self.rows, self.cols, self.entries)

    def negate(self) -> "MatrixGF":
        neg = self.owner.neg
        return MatrixGF(self.owner, self.layer, self.rows, self.cols, tuple(tuple(neg(v) for v in row) for row in self.entries))

    def hstack(self, other: "MatrixGF") -> "MatrixGF":
        if self.rows != other.rows:
            raise DimensionMismatchError(self.rows, other.rows, "hstack row count")
        layer = _joint_layer(self, other)
        return MatrixGF(self.owner, layer, self.rows, self.cols + other.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def vstack(self, other: "MatrixGF") -> "MatrixGF":
        if self.cols != other.cols:
            raise DimensionMismatchError(self.cols, other.cols, "vstack column count")
        layer = _joint_layer(self, other)
        return MatrixGF(self.owner, layer, self.rows + other.rows, self.cols, self.entries + other.entries)

    def __matmul__(self, other: "MatrixGF") -> "MatrixGF":
        if self.cols != other.rows:
            raise DimensionMismatchError(self.cols, other.rows, "matrix product inner dimension")
        layer = _joint_layer(self, other)
        columns = [other.column(j) for j in range(other.cols)]
        entries = tuple(tuple(dot(self.owner, row, col) for col in columns) for row in self.entries)
        return MatrixGF(self.owner, layer, self.rows, other.cols, entries)

    def is_zero(self) -> bool:
        return all(v == 0 for row in self.entries for v in row)

    def to_galois(self):
        """The matrix as a galois FieldArray over GF(q) (BASE layer only)."""
        if self.layer is not Layer.BASE:
            raise PreconditionError("Only GF(q) matrices convert to a galois array")
        return self.owner.base_field(np.array(self.entries, dtype=int).reshape(self.rows, self.cols))


def _joint_layer(a: MatrixGF, b: MatrixGF) -> Layer:
    if a.owner != b.owner:
        raise TowerMismatchError(a.owner, b.owner, "Matrices over different towers")
    if a.layer is Layer.EXTENSION or b.layer is Layer.EXTENSION:
        return Layer.EXTENSION
    return Layer.BASE


class RrefResult(NamedTuple):
    reduced: MatrixGF
    rank: int
    pivot_cols: List[int]


def dot(tower: FieldTower, u: Sequence[int], v: Sequence[int]) -> int:
    """Standard bilinear form Σ u_i v_i."""
    if len(u) != len(v):
        raise DimensionMismatchError(len(u), len(v), "dot product length")
    total = 0
    for a, b in zip(u, v):
        if a and b:
            total = tower.add(total, tower.mul(a, b))
    return total


def rref(matrix: MatrixGF) -> RrefResult:
    """
    Gauss-Jordan elimination with first-nonzero pivoting.

    Args:
        matrix: matrix over either layer

    Returns:
        (R, rank, pivot_cols) with R in reduced row echelon form
    """
    f = matrix.owner
    work: List[List[int]] = [list(row) for row in matrix.entries]
    pivot_cols: List[int] = []
    r = 0
    for c in range(matrix.cols):
        if r == matrix.rows:
            break
        pivot = next((i for i in range(r, matrix.rows) if work[i][c]), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        scale = f.inv(work[r][c])
        work[r] = [f.mul(scale, x) for x in work[r]]
        for i in range(matrix.rows):
            factor = work[i][c]
            if i != r and factor:
                work[i] = [f.sub(x, f.mul(factor, y)) for x, y in zip(work[i], work[r])]
        pivot_cols.append(c)
        r += 1
    reduced = MatrixGF(f, matrix.layer, matrix.rows, matrix.cols, tuple(tuple(row) for row in work))
    return RrefResult(reduced, r, pivot_cols)


def row_space_basis(matrix: MatrixGF) -> MatrixGF:
    """Canonical basis of the row space: the nonzero rows of the RREF."""
    result = rref(matrix)
    return MatrixGF(matrix.owner, matrix.layer, result.rank, matrix.cols, result.reduced.entries[: result.rank])


def null_space(matrix: MatrixGF) -> MatrixGF:
    """
    Basis of {v : M·vᵀ = 0} over the matrix layer.

    Returns:
        Matrix with cols - rank(M) rows, one per free column
    """
    f = matrix.owner
    reduced, rank, pivot_cols = rref(matrix)
    free_cols = [c for c in range(matrix.cols) if c not in pivot_cols]
    basis = []
    for free in free_cols:
        vec = [0] * matrix.cols
        vec[free] = 1
        for i, pc in enumerate(pivot_cols):
            vec[pc] = f.neg(reduced.entries[i][free])
        basis.append(tuple(vec))
    logger.debug(f"Null space of a {matrix.rows}x{matrix.cols} matrix of rank {rank} has dimension {len(basis)}")
    return MatrixGF(f, matrix.layer, len(basis), matrix.cols, tuple(basis))


def expand_vector(tower: FieldTower, v: Sequence[int], n: int = None) -> MatrixGF:
    """
    m×n expansion matrix over GF(q): column j holds the coordinates of v_j.

    Args:
        tower: field tower of the entries
        v: vector over GF(q^m)
        n: expected length (checked when given)
    """
    if n is not None and len(v) != n:
        raise DimensionMismatchError(n, len(v), "vector length")
    columns = [tower.gfq_coords(x) for x in v]
    entries = tuple(tuple(col[i] for col in columns) for i in range(tower.m))
    return MatrixGF(tower, Layer.BASE, tower.m, len(v), entries)


def span_rank(tower: FieldTower, v: Sequence[int]) -> int:
    """
    Dimension of the GF(q)-span of the coordinates of v by incremental basis insertion.
    """
    if tower.q == 2:
        # codes are bit vectors over GF(2)
        basis: List[int] = []
        for x in v:
            for b in basis:
                x = min(x, x ^ b)
            if x:
                basis.append(x)
        return len(basis)

    pivots = {}
    for x in v:
        coords = list(tower.gfq_coords(x))
        for j, b in pivots.items():
            c = coords[j]
            if c:
                coords = [tower.sub(a, tower.mul(c, e)) for a, e in zip(coords, b)]
        lead = next((j for j, c in enumerate(coords) if c), None)
        if lead is None:
            continue
        scale = tower.inv(coords[lead])
        pivots[lead] = [tower.mul(scale, c) for c in coords]
        if len(pivots) == tower.m:
            break
    return len(pivots)


def rank_norm(tower: FieldTower, v: Sequence[int]) -> int:
    """Rank of v over GF(q): the dimension of the span of its coordinates."""
    return span_rank(tower, v)


def rank_norm_by_expansion(tower: FieldTower, v: Sequence[int]) -> int:
    """Rank of v computed as the rank of its expansion matrix."""
    if not v:
        return 0
    return rref(expand_vector(tower, v)).rank


def rank_distance(tower: FieldTower, x: Sequence[int], y: Sequence[int]) -> int:
    if len(x) != len(y):
        raise DimensionMismatchError(len(x), len(y), "vector length")
    return rank_norm(tower, tuple(tower.sub(a, b) for a, b in zip(x, y)))


def hamming_weight(v: Sequence[int]) -> int:
    return sum(1 for x in v if x)
