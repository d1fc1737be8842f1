"""State containers.

A state is any C-contiguous float64 ``numpy`` array; algebras walk it in flat
(canonical) index order. ``MultiState`` packs ``k`` equal-length components
into one ``(k, M)`` array so that each component is a contiguous block of the
flat view.
"""

from dataclasses import dataclass
from typing import Iterable

import numpy as np
import numpy.typing as npt

from app.utils.errors import DimensionMismatchError, NonFiniteStateError, StateLayoutError

StateVector = npt.NDArray[np.float64]


def make_state(values: Iterable[float] | npt.ArrayLike) -> StateVector:
    """Copy ``values`` into a fresh contiguous float64 state."""
    return np.array(values, dtype=np.float64, order="C", copy=True)


def check_layout(state: np.ndarray, name: str = "state") -> None:
    if not isinstance(state, np.ndarray):
        raise StateLayoutError(f"{name} must be a numpy array, got {type(state).__name__}")
    if state.dtype != np.float64:
        raise StateLayoutError(f"{name} must have dtype float64, got {state.dtype}")
    if not state.flags.c_contiguous:
        raise StateLayoutError(f"{name} must be C-contiguous")


def check_same_shape(*states: np.ndarray) -> None:
    shapes = {s.shape for s in states}
    if len(shapes) > 1:
        raise DimensionMismatchError(
            "aligned states differ in shape: " + ", ".join(str(s.shape) for s in states)
        )


def check_finite(state: np.ndarray, what: str = "state") -> None:
    """Raise NonFiniteStateError naming the first NaN/Inf element of ``state``."""
    if np.isfinite(state).all():
        return
    bad = int(np.flatnonzero(~np.isfinite(state.reshape(-1)))[0])
    raise NonFiniteStateError(f"{what} has a non-finite value at index {bad}", index=bad)


@dataclass
class MultiState:
    """``k`` components of length ``M`` stored component-contiguously."""

    data: np.ndarray

    def __post_init__(self):
        if self.data.ndim != 2:
            raise StateLayoutError(f"MultiState needs a (k, M) array, got shape {self.data.shape}")
        check_layout(self.data, "MultiState.data")

    @classmethod
    def zeros(cls, k: int, m: int) -> "MultiState":
        return cls(np.zeros((k, m), dtype=np.float64))

    @classmethod
    def from_components(cls, *components: npt.ArrayLike) -> "MultiState":
        arrays = [np.asarray(c, dtype=np.float64) for c in components]
        if len({a.shape for a in arrays}) > 1:
            raise DimensionMismatchError("MultiState components must have equal length")
        return cls(np.ascontiguousarray(np.stack(arrays)))

    @property
    def k(self) -> int:
        return self.data.shape[0]

    @property
    def m(self) -> int:
        return self.data.shape[1]

    @property
    def flat(self) -> StateVector:
        return self.data.reshape(-1)

    def component(self, c: int) -> StateVector:
        return self.data[c]

    def copy(self) -> "MultiState":
        return MultiState(self.data.copy())
