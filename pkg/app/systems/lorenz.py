"""Ensemble of independent Lorenz systems, one Rayleigh parameter per member.

The state is a (3, M) array: X block, Y block, Z block, each contiguous.
"""

from dataclasses import dataclass

import numpy as np

from app.backends.expression import (
    FusedGroup,
    Statement,
    const,
    fuse_execute,
    unfused_execute,
    vec,
)
from app.core.algebra import Algebra
from app.core.state import MultiState
from app.utils.errors import ConfigError, DimensionMismatchError

DEFAULT_SIGMA = 10.0
DEFAULT_B = 8.0 / 3.0
DEFAULT_R_RANGE = (0.0, 56.0)


@dataclass(frozen=True, eq=False)
class LorenzEnsembleParams:
    R: np.ndarray
    sigma: float = DEFAULT_SIGMA
    b: float = DEFAULT_B

    def __post_init__(self):
        if self.R.ndim != 1 or len(self.R) < 1:
            raise ConfigError("the ensemble needs at least one Rayleigh parameter")
        if not np.isfinite(self.R).all():
            raise ConfigError("Rayleigh parameters must be finite")

    @classmethod
    def sweep(
        cls,
        m: int,
        r_range: tuple[float, float] = DEFAULT_R_RANGE,
        sigma: float = DEFAULT_SIGMA,
        b: float = DEFAULT_B,
    ) -> "LorenzEnsembleParams":
        """R spaced uniformly over ``r_range`` across ``m`` members."""
        return cls(np.linspace(r_range[0], r_range[1], m), sigma, b)

    @classmethod
    def constant(cls, m: int, rayleigh: float, **kwargs) -> "LorenzEnsembleParams":
        return cls(np.full(m, float(rayleigh)), **kwargs)

    @property
    def m(self) -> int:
        return len(self.R)


def initial_state(m: int, value: float = 10.0) -> MultiState:
    return MultiState(np.full((3, m), value))


class LorenzEnsemble:
    """dX = sigma (Y - X), dY = R X - Y - X Z, dZ = X Y - b Z for every member.

    Bound to a fusing algebra, the three statements run as one loop over the
    ensemble; otherwise as three separate passes.
    """

    def __init__(
        self,
        params: LorenzEnsembleParams,
        algebra: Algebra | None = None,
        fused: bool | None = None,
    ):
        if algebra is None:
            from app.backends.serial import SerialAlgebra

            algebra = SerialAlgebra()
        self.params = params
        self.algebra = algebra
        self.fused = algebra.fuses if fused is None else fused

    def statements(self, x: np.ndarray, dxdt: np.ndarray) -> list[Statement]:
        X, Y, Z = vec(x[0]), vec(x[1]), vec(x[2])
        R = vec(self.params.R)
        return [
            Statement(dxdt[0], const(self.params.sigma) * (Y - X)),
            Statement(dxdt[1], R * X - Y - X * Z),
            Statement(dxdt[2], X * Y - const(self.params.b) * Z),
        ]

    def __call__(self, x, dxdt, t: float = 0.0) -> None:
        x = x.data if isinstance(x, MultiState) else x
        dxdt = dxdt.data if isinstance(dxdt, MultiState) else dxdt
        expected = (3, self.params.m)
        if x.shape != expected or dxdt.shape != expected:
            raise DimensionMismatchError(
                f"Lorenz ensemble of {self.params.m} needs {expected} states, "
                f"got {x.shape} and {dxdt.shape}"
            )

        statements = self.statements(x, dxdt)
        if self.fused:
            fuse_execute(FusedGroup(statements, self.algebra.passes), self.algebra)
        else:
            unfused_execute(statements, self.algebra.passes, self.algebra)


def lorenz_rhs(
    params: LorenzEnsembleParams,
    x,
    dxdt,
    t: float = 0.0,
    algebra: Algebra | None = None,
    fused: bool | None = None,
) -> None:
    LorenzEnsemble(params, algebra, fused)(x, dxdt, t)
