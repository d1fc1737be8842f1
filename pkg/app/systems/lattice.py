"""Nonlinear disordered Hamiltonian lattice.

dq/dt = p,  dp/dt = -omega2 q - beta q^3 + Laplacian(q).  Only the momentum part
is evaluated here; the symplectic steppers supply dq/dt = p.
"""

from dataclasses import dataclass

import numpy as np

from app.backends.expression import (
    FusedGroup,
    Statement,
    const,
    fuse_execute,
    pow3,
    unfused_execute,
    vec,
)
from app.core.algebra import Algebra
from app.linalg.lattice import MATRIX_FORMATS, LatticeOperator, build_lattice_operator
from app.systems.disorder import make_disorder
from app.utils.errors import ConfigError, DimensionMismatchError

DEFAULT_BETA = 1.0
DEFAULT_DISORDER = (0.5, 1.5)


@dataclass(frozen=True, eq=False)
class LatticeParams:
    nx: int
    ny: int
    omega2: np.ndarray
    beta: float = DEFAULT_BETA
    seed: int | None = None
    w_lo: float = DEFAULT_DISORDER[0]
    w_hi: float = DEFAULT_DISORDER[1]

    def __post_init__(self):
        if self.nx < 1 or self.ny < 1:
            raise ConfigError(f"grid extents must be >= 1, got {self.nx} x {self.ny}")
        if self.omega2.shape != (self.nx, self.ny):
            raise ConfigError(f"omega2 must have shape ({self.nx}, {self.ny})")
        if self.omega2.min() < self.w_lo or self.omega2.max() > self.w_hi:
            raise ConfigError(f"omega2 outside the disorder range [{self.w_lo}, {self.w_hi}]")

    @classmethod
    def generate(
        cls,
        nx: int,
        ny: int,
        seed: int,
        beta: float = DEFAULT_BETA,
        disorder: tuple[float, float] = DEFAULT_DISORDER,
    ) -> "LatticeParams":
        w_lo, w_hi = disorder
        omega2 = make_disorder(seed, nx, ny, w_lo, w_hi)
        return cls(nx, ny, omega2, beta, seed, w_lo, w_hi)

    @property
    def size(self) -> int:
        return self.nx * self.ny


def initial_state(nx: int, ny: int) -> tuple[np.ndarray, np.ndarray]:
    """Lattice at rest except for a unit momentum kick at the centre node."""
    q = np.zeros(nx * ny)
    p = np.zeros(nx * ny)
    p[(nx // 2) * ny + ny // 2] = 1.0
    return q, p


class DisorderedLattice:
    """Momentum derivative dp = A q - beta q^3, with A from ``build_lattice_operator``.

    One pass applies the sparse operator; the nonlinear term is one fused pass, or two
    passes (cube, then combine) on a non-fusing algebra.
    """

    def __init__(
        self,
        params: LatticeParams,
        algebra: Algebra | None = None,
        fused: bool | None = None,
        matrix_format: str = "csr",
        operator: LatticeOperator | None = None,
    ):
        if algebra is None:
            from app.backends.serial import SerialAlgebra

            algebra = SerialAlgebra()
        if matrix_format not in MATRIX_FORMATS:
            raise ConfigError(f"unknown matrix format {matrix_format!r}")
        self.params = params
        self.algebra = algebra
        self.fused = algebra.fuses if fused is None else fused
        self.matrix_format = matrix_format
        self.operator = operator or build_lattice_operator(params.nx, params.ny, params.omega2)

    def __call__(self, q: np.ndarray, dp: np.ndarray) -> None:
        n = self.params.size
        if q.shape != (n,) or dp.shape != (n,):
            raise DimensionMismatchError(
                f"lattice of {n} nodes got states {q.shape} and {dp.shape}"
            )

        aq = np.empty_like(q)
        self.algebra.run_ranges(
            lambda lo, hi: self.operator.apply(q, aq, (lo, hi), self.matrix_format), n
        )
        self.algebra.passes.add(1)

        beta = const(self.params.beta)
        if self.fused:
            group = FusedGroup([Statement(dp, vec(aq) - beta * pow3(q))], self.algebra.passes)
            fuse_execute(group, self.algebra)
        else:
            unfused_execute(
                [Statement(dp, pow3(q)), Statement(dp, vec(aq) - beta * vec(dp))],
                self.algebra.passes,
                self.algebra,
            )

    def energy(self, q: np.ndarray, p: np.ndarray) -> float:
        """H = sum(p^2)/2 - q.A q / 2 + beta/4 sum(q^4)."""
        aq = self.operator.apply(q)
        return float(0.5 * p @ p - 0.5 * q @ aq + 0.25 * self.params.beta * np.sum(q**4))


def lattice_rhs_dp(
    params: LatticeParams,
    operator: LatticeOperator,
    q: np.ndarray,
    dp: np.ndarray,
    algebra: Algebra | None = None,
    fused: bool | None = None,
) -> None:
    DisorderedLattice(params, algebra, fused, operator=operator)(q, dp)
