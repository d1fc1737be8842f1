"""Benchmark problems: a system, its default stepper and an initial state.

Construction (disorder generation, matrix assembly) happens here so that
callers can keep it out of any timed region.
"""

import math
from dataclasses import dataclass
from typing import Any

import numpy as np

from app.core.algebra import Algebra
from app.steppers import FIRST_ORDER_STEPPERS, SYMPLECTIC_STEPPERS, Stepper, make_stepper
from app.systems import lattice, lorenz, phase_chain
from app.utils.errors import ConfigError

SYSTEMS = ("lorenz", "phase", "lattice")
DEFAULT_STEPPERS = {"lorenz": "rk4", "phase": "rk4", "lattice": "verlet"}


@dataclass
class Problem:
    name: str
    n: int
    system: Any
    stepper: Stepper
    initial: np.ndarray | tuple[np.ndarray, np.ndarray]

    @property
    def hamiltonian(self) -> bool:
        return isinstance(self.initial, tuple)

    def fresh_state(self):
        if self.hamiltonian:
            return tuple(a.copy() for a in self.initial)
        return self.initial.copy()

    def observed(self, state) -> np.ndarray:
        """Flat values written to trajectory output: q for the lattice, else the state."""
        return state[0] if self.hamiltonian else state.reshape(-1)

    def state_size(self) -> int:
        return self.initial[0].size if self.hamiltonian else self.initial.size


def lattice_extents(n: int) -> tuple[int, int]:
    """Near-square grid with about ``n`` nodes."""
    nx = max(1, math.isqrt(n))
    return nx, max(1, n // nx)


def _check_stepper(system_id: str, stepper_name: str) -> None:
    symplectic = system_id == "lattice"
    allowed = SYMPLECTIC_STEPPERS if symplectic else FIRST_ORDER_STEPPERS
    if stepper_name not in allowed:
        raise ConfigError(
            f"stepper {stepper_name!r} cannot integrate the {system_id} system; "
            f"use one of {', '.join(allowed)}"
        )


def make_problem(
    system_id: str,
    n: int,
    algebra: Algebra,
    seed: int = 42,
    stepper: str | None = None,
    rayleigh: float | None = None,
    r_range: tuple[float, float] = lorenz.DEFAULT_R_RANGE,
    omega: float | None = None,
    phi0: float | None = None,
    beta: float = lattice.DEFAULT_BETA,
    disorder: tuple[float, float] = lattice.DEFAULT_DISORDER,
    matrix_format: str = "csr",
) -> Problem:
    if system_id not in SYSTEMS:
        raise ConfigError(f"unknown system {system_id!r}; expected one of {', '.join(SYSTEMS)}")
    if n < 1:
        raise ConfigError(f"problem size must be >= 1, got {n}")
    stepper_name = stepper or DEFAULT_STEPPERS[system_id]
    _check_stepper(system_id, stepper_name)

    if system_id == "lorenz":
        if rayleigh is not None:
            params = lorenz.LorenzEnsembleParams.constant(n, rayleigh)
        else:
            params = lorenz.LorenzEnsembleParams.sweep(n, r_range)
        system = lorenz.LorenzEnsemble(params, algebra)
        initial = lorenz.initial_state(n).data
    elif system_id == "phase":
        if omega is not None:
            params = phase_chain.PhaseChainParams.constant(n, omega)
        else:
            params = phase_chain.PhaseChainParams.random(n, seed)
        system = phase_chain.PhaseChain(params, algebra)
        if phi0 is not None:
            initial = np.full(n, float(phi0))
        else:
            initial = phase_chain.initial_phases(n, seed)
    else:
        nx, ny = lattice_extents(n)
        params = lattice.LatticeParams.generate(nx, ny, seed, beta, disorder)
        system = lattice.DisorderedLattice(params, algebra, matrix_format=matrix_format)
        initial = lattice.initial_state(nx, ny)
        n = nx * ny

    return Problem(system_id, n, system, make_stepper(stepper_name, algebra), initial)
