"""Bit-packed matrices over GF(2).

Rows are stored as little-endian 64-bit words (bit ``c`` of a row lives in
word ``c // 64`` at position ``c % 64``), so row operations are word-parallel
XORs. Pivoting is always leftmost column, topmost row, which makes every basis
returned here reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple

import numpy as np

from app.exceptions import DimensionMismatchError

WORD = 64
WORD_DTYPE = np.dtype("<u8")


def _n_words(cols: int) -> int:
    return (cols + WORD - 1) // WORD


def _pack(dense: np.ndarray) -> np.ndarray:
    rows, cols = dense.shape
    words = _n_words(cols)
    if words == 0:
        return np.zeros((rows, 0), dtype=WORD_DTYPE)
    padded = np.zeros((rows, words * WORD), dtype=np.uint8)
    padded[:, :cols] = dense.astype(np.uint8) & 1
    return np.packbits(padded, axis=1, bitorder="little").view(WORD_DTYPE)


def _unpack(data: np.ndarray, cols: int) -> np.ndarray:
    if cols == 0:
        return np.zeros((data.shape[0], 0), dtype=np.uint8)
    raw = np.ascontiguousarray(data, dtype=WORD_DTYPE).view(np.uint8)
    return np.unpackbits(raw, axis=1, bitorder="little")[:, :cols]


@dataclass(frozen=True, eq=False)
class GF2Matrix:
    """An immutable ``rows x cols`` matrix over the two-element field."""

    rows: int
    cols: int
    data: np.ndarray

    def __post_init__(self):
        if self.data.shape != (self.rows, _n_words(self.cols)):
            raise DimensionMismatchError(
                f"storage shape {self.data.shape} does not fit {self.rows}x{self.cols}"
            )
        self.data.setflags(write=False)

    # -- construction -----------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "GF2Matrix":
        return cls(rows, cols, np.zeros((rows, _n_words(cols)), dtype=WORD_DTYPE))

    @classmethod
    def identity(cls, n: int) -> "GF2Matrix":
        return cls.from_dense(np.eye(n, dtype=np.uint8))

    @classmethod
    def from_dense(cls, dense, rows: int | None = None, cols: int | None = None) -> "GF2Matrix":
        arr = np.asarray(dense, dtype=np.int64)
        if arr.size == 0:
            shape = arr.shape if arr.ndim == 2 else (0, 0)
            arr = arr.reshape(
                rows if rows is not None else shape[0],
                cols if cols is not None else shape[1],
            )
        if arr.ndim != 2:
            raise DimensionMismatchError(f"expected a 2-d array, got shape {arr.shape}")
        arr = arr & 1
        return cls(arr.shape[0], arr.shape[1], _pack(arr))

    @classmethod
    def from_triplets(
        cls, rows: int, cols: int, entries: Iterable[Tuple[int, int]]
    ) -> "GF2Matrix":
        """Sparse constructor: every ``(row, col)`` pair adds 1 to that entry."""
        dense = np.zeros((rows, cols), dtype=np.int64)
        entries = list(entries)
        if entries:
            r, c = np.asarray(entries, dtype=np.int64).T
            np.add.at(dense, (r, c), 1)
        return cls(rows, cols, _pack(dense & 1))

    @classmethod
    def from_blocks(
        cls, rows: int, cols: int, blocks: Iterable[Tuple[int, int, "GF2Matrix"]]
    ) -> "GF2Matrix":
        """Sum of blocks placed at ``(row offset, col offset)``."""
        dense = np.zeros((rows, cols), dtype=np.uint8)
        for r, c, block in blocks:
            if block.rows and block.cols:
                dense[r : r + block.rows, c : c + block.cols] ^= block.to_dense()
        return cls(rows, cols, _pack(dense))

    @classmethod
    def vstack(cls, blocks: Sequence["GF2Matrix"], cols: int | None = None) -> "GF2Matrix":
        if not blocks:
            return cls.zeros(0, cols or 0)
        width = blocks[0].cols
        if any(b.cols != width for b in blocks):
            raise DimensionMismatchError("vstack needs equal column counts")
        data = np.concatenate([b.data for b in blocks], axis=0)
        return cls(int(data.shape[0]), width, data)

    # -- views ------------------------------------------------------------

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def to_dense(self) -> np.ndarray:
        return _unpack(self.data, self.cols)

    def transpose(self) -> "GF2Matrix":
        return GF2Matrix.from_dense(self.to_dense().T, self.cols, self.rows)

    @property
    def T(self) -> "GF2Matrix":
        return self.transpose()

    def row(self, i: int) -> np.ndarray:
        return _unpack(self.data[i : i + 1], self.cols)[0]

    def select_rows(self, index) -> "GF2Matrix":
        data = np.ascontiguousarray(self.data[np.asarray(index, dtype=np.int64)])
        return GF2Matrix(int(data.shape[0]), self.cols, data)

    def select_cols(self, index) -> "GF2Matrix":
        index = np.asarray(index, dtype=np.int64)
        return GF2Matrix.from_dense(self.to_dense()[:, index], self.rows, len(index))

    def is_zero(self) -> bool:
        return not self.data.any()

    def nnz(self) -> int:
        return int(self.to_dense().sum())

    def nonzero_rows(self) -> np.ndarray:
        return np.flatnonzero(self.data.any(axis=1)) if self.data.size else np.zeros(0, np.int64)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: "GF2Matrix") -> "GF2Matrix":
        if self.shape != other.shape:
            raise DimensionMismatchError(f"cannot add {self.shape} and {other.shape}")
        return GF2Matrix(self.rows, self.cols, self.data ^ other.data)

    __sub__ = __add__

    def __matmul__(self, other: "GF2Matrix") -> "GF2Matrix":
        if self.cols != other.rows:
            raise DimensionMismatchError(f"cannot multiply {self.shape} by {other.shape}")
        out = np.zeros((self.rows, other.data.shape[1]), dtype=WORD_DTYPE)
        if other.data.shape[1] and self.rows:
            dense = self.to_dense().astype(bool)
            for i in np.flatnonzero(dense.any(axis=1)):
                out[i] = np.bitwise_xor.reduce(other.data[dense[i]], axis=0)
        return GF2Matrix(self.rows, other.cols, out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GF2Matrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self.data, other.data))

    def __hash__(self):
        return hash((self.rows, self.cols, self.data.tobytes()))

    def __repr__(self) -> str:
        return f"GF2Matrix({self.rows}x{self.cols}, nnz={self.nnz()})"


@dataclass(frozen=True)
class RowReduceResult:
    matrix: GF2Matrix
    rank: int
    pivots: Tuple[int, ...]


def _rref_words(data: np.ndarray, cols: int) -> Tuple[np.ndarray, Tuple[int, ...]]:
    work = np.array(data, dtype=WORD_DTYPE, copy=True)
    n_rows = work.shape[0]
    pivots = []
    r = 0
    for col in range(cols):
        if r == n_rows:
            break
        w, b = divmod(col, WORD)
        column = (work[:, w] >> np.uint64(b)) & np.uint64(1) != 0
        below = np.flatnonzero(column[r:])
        if below.size == 0:
            continue
        p = r + int(below[0])
        if p != r:
            work[[r, p]] = work[[p, r]]
            column[[r, p]] = column[[p, r]]
        column[r] = False
        if column.any():
            work[column] ^= work[r]
        pivots.append(col)
        r += 1
    return work[:r], tuple(pivots)


def row_reduce(m: GF2Matrix) -> RowReduceResult:
    """Reduced row echelon form; zero rows are dropped."""
    words, pivots = _rref_words(m.data, m.cols)
    return RowReduceResult(GF2Matrix(len(pivots), m.cols, words), len(pivots), pivots)


def rank(m: GF2Matrix) -> int:
    # eliminate along the shorter side
    if m.rows > m.cols:
        m = m.transpose()
    return len(_rref_words(m.data, m.cols)[1])


def kernel_basis(m: GF2Matrix) -> GF2Matrix:
    """Rows form a basis of ``{v : m v = 0}``."""
    reduced = row_reduce(m)
    pivots = list(reduced.pivots)
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    basis = np.zeros((len(free), m.cols), dtype=np.uint8)
    if free:
        basis[np.arange(len(free)), free] = 1
        if pivots:
            dense = reduced.matrix.to_dense()
            basis[:, pivots] = dense[:, free].T
    return GF2Matrix.from_dense(basis, len(free), m.cols)


def image_basis(m: GF2Matrix) -> GF2Matrix:
    """Rows form a basis of the column space of ``m`` (reduced echelon form)."""
    return row_reduce(m.transpose()).matrix


def solve(m: GF2Matrix, rhs: GF2Matrix) -> Tuple[GF2Matrix, np.ndarray]:
    """Solve ``m x = b`` for every row ``b`` of ``rhs``.

    Returns the solutions as rows (zero rows where no solution exists) and a
    boolean mask telling which right-hand sides were consistent.
    """
    if rhs.cols != m.rows:
        raise DimensionMismatchError(f"rhs length {rhs.cols} does not match {m.rows} rows")
    augmented = np.concatenate([m.to_dense(), rhs.to_dense().T], axis=1)
    reduced = row_reduce(GF2Matrix.from_dense(augmented, m.rows, m.cols + rhs.rows))
    dense = reduced.matrix.to_dense()
    own = [i for i, p in enumerate(reduced.pivots) if p < m.cols]
    r = len(own)
    consistent = ~dense[r:, m.cols :].any(axis=0) if r < dense.shape[0] else np.ones(rhs.rows, bool)
    solutions = np.zeros((rhs.rows, m.cols), dtype=np.uint8)
    for i in own:
        solutions[:, reduced.pivots[i]] = dense[i, m.cols :]
    solutions[~consistent] = 0
    return GF2Matrix.from_dense(solutions, rhs.rows, m.cols), consistent


def in_row_space(basis: GF2Matrix, vectors: GF2Matrix) -> np.ndarray:
    """Boolean mask: which rows of ``vectors`` lie in the row space of ``basis``."""
    _, consistent = solve(basis.transpose(), vectors)
    return consistent
