from app.systems.disorder import make_disorder
from app.systems.lattice import DisorderedLattice, LatticeParams, lattice_rhs_dp
from app.systems.lorenz import LorenzEnsemble, LorenzEnsembleParams, lorenz_rhs
from app.systems.phase_chain import PhaseChain, PhaseChainParams, phase_chain_rhs

__all__ = [
    "DisorderedLattice",
    "LatticeParams",
    "LorenzEnsemble",
    "LorenzEnsembleParams",
    "PhaseChain",
    "PhaseChainParams",
    "lattice_rhs_dp",
    "lorenz_rhs",
    "make_disorder",
    "phase_chain_rhs",
]
