"""CSR and ELL sparse matrices and their matrix-vector products.

CSR products go through ``scipy.sparse``, whose CSR kernel accumulates each row
in stored (sorted column) order. ELL is stored slot-major: ``vals[k, row]`` is
slot ``k`` of ``row``, i.e. the column-major layout of the padded
``n_rows x K`` matrix. Padding slots hold 0.0, point at the row's own column and
are skipped by the product, so a non-finite ``x`` entry never reaches a row through
padding.
"""

import threading
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import TextIO

import numpy as np
import scipy.sparse as sp

from app.utils.errors import DimensionMismatchError, SparseFormatError

RowRange = tuple[int, int]

# row blocks kept per matrix; one per chunk of the largest worker count in use
MAX_CACHED_BLOCKS = 64


@dataclass(frozen=True, eq=False)
class SparseCSR:
    n_rows: int
    n_cols: int
    row_ptr: np.ndarray
    col_idx: np.ndarray
    vals: np.ndarray
    _blocks: dict = field(default_factory=dict, init=False, repr=False)
    _blocks_lock: threading.Lock = field(default_factory=threading.Lock, init=False, repr=False)

    def __post_init__(self):
        row_ptr, col_idx = self.row_ptr, self.col_idx
        if len(row_ptr) != self.n_rows + 1:
            raise SparseFormatError(f"row_ptr has {len(row_ptr)} entries, need {self.n_rows + 1}")
        if row_ptr[0] != 0 or row_ptr[-1] != len(col_idx) or len(col_idx) != len(self.vals):
            raise SparseFormatError("row_ptr must start at 0 and end at nnz")
        if np.any(np.diff(row_ptr) < 0):
            raise SparseFormatError("row_ptr must be non-decreasing")
        if len(col_idx) and (col_idx.min() < 0 or col_idx.max() >= self.n_cols):
            raise SparseFormatError(f"column index out of range [0, {self.n_cols})")
        # within-row strict increase: a decrease is only allowed across a row start
        steps = np.diff(col_idx)
        row_starts = np.zeros(len(col_idx), dtype=bool)
        row_starts[row_ptr[1:-1][row_ptr[1:-1] < len(col_idx)]] = True
        if np.any((steps <= 0) & ~row_starts[1:]):
            raise SparseFormatError("column indices must be strictly increasing within a row")

    @classmethod
    def from_scipy(cls, matrix) -> "SparseCSR":
        m = sp.csr_matrix(matrix, dtype=np.float64, copy=True)
        m.sum_duplicates()
        m.sort_indices()
        return cls(
            n_rows=m.shape[0],
            n_cols=m.shape[1],
            row_ptr=m.indptr.astype(np.int64),
            col_idx=m.indices.astype(np.int64),
            vals=m.data.astype(np.float64),
        )

    @classmethod
    def from_triplets(cls, n_rows: int, n_cols: int, rows, cols, vals) -> "SparseCSR":
        return cls.from_scipy(sp.coo_matrix((vals, (rows, cols)), shape=(n_rows, n_cols)))

    @classmethod
    def from_dense(cls, dense: np.ndarray) -> "SparseCSR":
        return cls.from_scipy(sp.csr_matrix(np.asarray(dense, dtype=np.float64)))

    @classmethod
    def identity(cls, n: int) -> "SparseCSR":
        return cls.from_scipy(sp.identity(n, format="csr"))

    @property
    def shape(self) -> tuple[int, int]:
        return self.n_rows, self.n_cols

    @property
    def nnz(self) -> int:
        return len(self.vals)

    def row_lengths(self) -> np.ndarray:
        return np.diff(self.row_ptr)

    @cached_property
    def scipy(self) -> sp.csr_matrix:
        return sp.csr_matrix((self.vals, self.col_idx, self.row_ptr), shape=self.shape)

    def row_block(self, lo: int, hi: int) -> sp.csr_matrix:
        """Rows ``[lo, hi)`` as a scipy matrix, cached per range (oldest evicted first)."""
        with self._blocks_lock:
            block = self._blocks.get((lo, hi))
            if block is None:
                if len(self._blocks) >= MAX_CACHED_BLOCKS:
                    del self._blocks[next(iter(self._blocks))]
                block = self.scipy[lo:hi]
                self._blocks[(lo, hi)] = block
        return block

    def to_dense(self) -> np.ndarray:
        return self.scipy.toarray()

    def triplets(self):
        """(row, col, value) for every stored entry in storage order."""
        rows = np.repeat(np.arange(self.n_rows), self.row_lengths())
        return zip(rows.tolist(), self.col_idx.tolist(), self.vals.tolist())


@dataclass(frozen=True, eq=False)
class SparseELL:
    n_rows: int
    n_cols: int
    width: int
    col_idx: np.ndarray
    vals: np.ndarray
    row_len: np.ndarray

    def __post_init__(self):
        expected = (self.width, self.n_rows)
        if self.col_idx.shape != expected or self.vals.shape != expected:
            raise SparseFormatError(f"ELL arrays must have shape {expected}")
        if self.row_len.shape != (self.n_rows,):
            raise SparseFormatError(f"row_len must have shape ({self.n_rows},)")
        if self.n_rows and (self.row_len.min() < 0 or self.row_len.max() > self.width):
            raise SparseFormatError(f"row lengths must lie in [0, {self.width}]")

    @property
    def shape(self) -> tuple[int, int]:
        return self.n_rows, self.n_cols


def _check_operand(shape: tuple[int, int], x: np.ndarray) -> None:
    if x.ndim != 1 or len(x) != shape[1]:
        raise DimensionMismatchError(f"matrix of shape {shape} applied to vector of {x.shape}")


def _output(n_rows: int, out: np.ndarray | None) -> np.ndarray:
    if out is None:
        return np.zeros(n_rows, dtype=np.float64)
    if out.shape != (n_rows,):
        raise DimensionMismatchError(f"output of shape {out.shape}, need ({n_rows},)")
    return out


def spmv_csr(
    a: SparseCSR, x: np.ndarray, out: np.ndarray | None = None, rows: RowRange | None = None
) -> np.ndarray:
    """``y = A x``; with ``rows`` only ``y[lo:hi]`` is computed."""
    _check_operand(a.shape, x)
    y = _output(a.n_rows, out)
    if rows is None or rows == (0, a.n_rows):
        y[:] = a.scipy @ x
    else:
        lo, hi = rows
        y[lo:hi] = a.row_block(lo, hi) @ x
    return y


def spmv_ell(
    a: SparseELL, x: np.ndarray, out: np.ndarray | None = None, rows: RowRange | None = None
) -> np.ndarray:
    """``y = A x`` accumulated slot by slot, 0 .. K-1."""
    _check_operand(a.shape, x)
    y = _output(a.n_rows, out)
    lo, hi = rows if rows is not None else (0, a.n_rows)
    acc = np.zeros(hi - lo, dtype=np.float64)
    row_len = a.row_len[lo:hi]
    for k in range(a.width):
        vals, cols = a.vals[k, lo:hi], a.col_idx[k, lo:hi]
        live = row_len > k
        if live.all():
            acc += vals * x[cols]
        else:
            acc[live] += vals[live] * x[cols[live]]
    y[lo:hi] = acc
    return y


def csr_to_ell(a: SparseCSR) -> SparseELL:
    lengths = a.row_lengths()
    width = int(lengths.max()) if a.n_rows else 0

    # padding points at the row's own column (clamped for wide/short matrices)
    self_col = np.minimum(np.arange(a.n_rows), max(a.n_cols - 1, 0))
    col_idx = np.tile(self_col, (width, 1))
    vals = np.zeros((width, a.n_rows), dtype=np.float64)

    slot = np.arange(a.nnz) - np.repeat(a.row_ptr[:-1], lengths)
    row = np.repeat(np.arange(a.n_rows), lengths)
    col_idx[slot, row] = a.col_idx
    vals[slot, row] = a.vals
    return SparseELL(
        a.n_rows, a.n_cols, width, col_idx.astype(np.int64), vals, lengths.astype(np.int64)
    )


def dump_triplets(a: SparseCSR, dest: str | Path | TextIO) -> None:
    """Write ``row col value`` lines (0-based, 17 significant digits)."""
    lines = [f"{r} {c} {v:.17g}\n" for r, c, v in a.triplets()]
    if isinstance(dest, (str, Path)):
        Path(dest).write_text("".join(lines))
    else:
        dest.writelines(lines)


def load_triplets(source: str | Path | TextIO, n_rows: int, n_cols: int) -> SparseCSR:
    text = Path(source).read_text() if isinstance(source, (str, Path)) else source.read()
    rows, cols, vals = [], [], []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        parts = line.split()
        if len(parts) != 3:
            raise SparseFormatError(f"line {lineno}: expected 'row col value', got {line!r}")
        rows.append(int(parts[0]))
        cols.append(int(parts[1]))
        vals.append(float(parts[2]))
    return SparseCSR.from_triplets(n_rows, n_cols, rows, cols, vals)
