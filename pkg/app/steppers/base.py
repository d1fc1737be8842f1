import math
from typing import Any, Callable, Protocol

import numpy as np

from app.core.algebra import Algebra
from app.core.state import check_finite
from app.utils.errors import NonFiniteStateError
from config import active_config


class System(Protocol):
    """``f(x, t)`` of dx/dt = f(x, t), written into ``dxdt``; ``x`` is not modified."""

    def __call__(self, x: np.ndarray, dxdt: np.ndarray, t: float) -> None: ...


class HamiltonianSystem(Protocol):
    """Autonomous momentum derivative dp/dt = F(q); dq/dt = p is implied."""

    def __call__(self, q: np.ndarray, dp: np.ndarray) -> None: ...


Observer = Callable[[Any, float], None]


class Stepper:
    """Shared plumbing: the bound algebra, scratch buffers and RHS validation.

    Scratch buffers are (re)allocated lazily whenever the state shape changes; their
    contents never carry over from one step to the next.
    """

    order: int

    def __init__(self, algebra: Algebra | None = None, validate: bool | None = None):
        if algebra is None:
            from app.backends.serial import SerialAlgebra

            algebra = SerialAlgebra()
        self.algebra = algebra
        self.validate = active_config().VALIDATE_STEPS if validate is None else validate
        self._scratch: dict[str, np.ndarray] = {}

    def _buffer(self, name: str, like: np.ndarray) -> np.ndarray:
        buf = self._scratch.get(name)
        if buf is None or buf.shape != like.shape:
            buf = np.empty_like(like, order="C")
            self._scratch[name] = buf
        return buf

    def poison_scratch(self) -> None:
        """Fill every scratch buffer with NaN (test hook for stale-scratch reads)."""
        for buf in self._scratch.values():
            buf.fill(np.nan)

    def invalidate(self) -> None:
        """Forget anything cached from the previous step; call after modifying the state."""

    def _check_dt(self, dt: float) -> None:
        if not math.isfinite(dt):
            raise NonFiniteStateError(f"step size {dt!r} is not finite")

    def _check_rhs(self, values: np.ndarray, stage: str) -> None:
        if self.validate:
            check_finite(values, f"right-hand side ({stage})")

    def do_step(self, system, state, t: float, dt: float) -> None:
        raise NotImplementedError

    def __repr__(self):
        return f"{type(self).__name__}(algebra={self.algebra!r})"
