from app.linalg.lattice import LatticeOperator, build_lattice_operator
from app.linalg.sparse import (
    SparseCSR,
    SparseELL,
    csr_to_ell,
    dump_triplets,
    load_triplets,
    spmv_csr,
    spmv_ell,
)
from app.linalg.stencil import Stencil1D, phase_chain_stencil, stencil_apply

__all__ = [
    "LatticeOperator",
    "SparseCSR",
    "SparseELL",
    "Stencil1D",
    "build_lattice_operator",
    "csr_to_ell",
    "dump_triplets",
    "load_triplets",
    "phase_chain_stencil",
    "spmv_csr",
    "spmv_ell",
    "stencil_apply",
]
