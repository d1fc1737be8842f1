"""Chain of nearest-neighbour coupled phase oscillators.

dphi_i/dt = omega_i + sin(phi_{i+1} - phi_i) + sin(phi_i - phi_{i-1}), with the
chain ends clamped so the missing coupling term vanishes.
"""

from dataclasses import dataclass

import numpy as np

from app.backends.expression import (
    FusedGroup,
    Statement,
    fuse_execute,
    shift,
    sin,
    unfused_execute,
    vec,
)
from app.core.algebra import Algebra
from app.linalg.stencil import phase_chain_stencil
from app.systems.disorder import make_rng
from app.utils.errors import ConfigError, DimensionMismatchError


@dataclass(frozen=True, eq=False)
class PhaseChainParams:
    omega: np.ndarray

    def __post_init__(self):
        if self.omega.ndim != 1 or len(self.omega) < 1:
            raise ConfigError("the phase chain needs at least one oscillator")

    @classmethod
    def random(cls, n: int, seed: int, lo: float = 0.0, hi: float = 1.0) -> "PhaseChainParams":
        return cls(make_rng(seed).uniform(lo, hi, size=n))

    @classmethod
    def constant(cls, n: int, omega: float) -> "PhaseChainParams":
        return cls(np.full(n, float(omega)))

    @property
    def n(self) -> int:
        return len(self.omega)


def initial_phases(n: int, seed: int) -> np.ndarray:
    """Phases uniform in [0, 2 pi), drawn from a stream separate from omega's."""
    return make_rng(seed + 1).uniform(0.0, 2.0 * np.pi, size=n)


class PhaseChain:
    def __init__(
        self,
        params: PhaseChainParams,
        algebra: Algebra | None = None,
        fused: bool | None = None,
    ):
        if algebra is None:
            from app.backends.serial import SerialAlgebra

            algebra = SerialAlgebra()
        self.params = params
        self.algebra = algebra
        self.fused = algebra.fuses if fused is None else fused
        self.stencil = phase_chain_stencil()

    def __call__(self, phi: np.ndarray, dphidt: np.ndarray, t: float = 0.0) -> None:
        n = self.params.n
        if phi.shape != (n,) or dphidt.shape != (n,):
            raise DimensionMismatchError(
                f"phase chain of {n} oscillators got states {phi.shape} and {dphidt.shape}"
            )
        omega = vec(self.params.omega)

        if self.fused:
            coupling = sin(shift(phi, 1) - vec(phi)) + sin(vec(phi) - shift(phi, -1))
            group = FusedGroup([Statement(dphidt, omega + coupling)], self.algebra.passes)
            fuse_execute(group, self.algebra)
            return

        # stencil pass writes the coupling into dphidt, then omega is added in place
        self.algebra.run_ranges(lambda lo, hi: self.stencil.apply_range(phi, dphidt, lo, hi), n)
        self.algebra.passes.add(1)
        unfused_execute([Statement(dphidt, omega + vec(dphidt))], self.algebra.passes, self.algebra)


def phase_chain_rhs(
    params: PhaseChainParams,
    phi: np.ndarray,
    dphidt: np.ndarray,
    t: float = 0.0,
    algebra: Algebra | None = None,
    fused: bool | None = None,
) -> None:
    PhaseChain(params, algebra, fused)(phi, dphidt, t)
