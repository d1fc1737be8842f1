"""Matrix of q -> -omega2 * q + discrete 2-D Laplacian(q) on an Nx x Ny grid.

Nodes are numbered row-major, ``node = i * Ny + j`` (j fastest). Neighbours
outside the grid are dropped, i.e. a zero Dirichlet boundary.
"""

from dataclasses import dataclass
from functools import cached_property

import numpy as np
import scipy.sparse as sp

from app.linalg.sparse import SparseCSR, SparseELL, csr_to_ell, spmv_csr, spmv_ell
from app.utils.errors import DimensionMismatchError

MATRIX_FORMATS = ("csr", "ell")


def second_difference(n: int) -> sp.csr_matrix:
    """1-D second difference [1, -2, 1] with dropped end neighbours."""
    return sp.diags(
        [np.ones(n - 1), np.full(n, -2.0), np.ones(n - 1)], [-1, 0, 1], shape=(n, n), format="csr"
    )


@dataclass(frozen=True, eq=False)
class LatticeOperator:
    nx: int
    ny: int
    csr: SparseCSR

    @cached_property
    def ell(self) -> SparseELL:
        return csr_to_ell(self.csr)

    @property
    def size(self) -> int:
        return self.nx * self.ny

    def apply(
        self,
        q: np.ndarray,
        out: np.ndarray | None = None,
        rows: tuple[int, int] | None = None,
        matrix_format: str = "csr",
    ) -> np.ndarray:
        if matrix_format == "ell":
            return spmv_ell(self.ell, q, out, rows)
        return spmv_csr(self.csr, q, out, rows)


def build_lattice_operator(nx: int, ny: int, omega2) -> LatticeOperator:
    if nx < 1 or ny < 1:
        raise ValueError(f"grid extents must be >= 1, got {nx} x {ny}")
    omega2 = np.asarray(omega2, dtype=np.float64).reshape(-1)
    if len(omega2) != nx * ny:
        raise DimensionMismatchError(f"{len(omega2)} omega2 values for a {nx} x {ny} grid")

    laplacian = sp.kron(sp.identity(nx), second_difference(ny)) + sp.kron(
        second_difference(nx), sp.identity(ny)
    )
    matrix = laplacian - sp.diags(omega2)
    return LatticeOperator(nx, ny, SparseCSR.from_scipy(matrix))
