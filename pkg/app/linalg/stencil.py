"""Nearest-neighbour stencil with a clamped (replicate edge) boundary."""

from dataclasses import dataclass
from typing import Callable

import numpy as np

StencilKernel = Callable[..., np.ndarray]


@dataclass(frozen=True)
class Stencil1D:
    """``y[i] = kernel(x[i-r], ..., x[i], ..., x[i+r])`` with indices clamped to the ends.

    Clamping makes a missing neighbour equal to the edge value itself, which is the
    "free ends" condition for difference-based kernels.
    """

    kernel: StencilKernel
    radius: int = 1
    boundary: str = "clamp"

    def __post_init__(self):
        if self.radius < 0:
            raise ValueError(f"stencil radius must be >= 0, got {self.radius}")
        if self.boundary != "clamp":
            raise ValueError(f"unsupported boundary policy {self.boundary!r}")

    def window(self, x: np.ndarray, lo: int, hi: int) -> list[np.ndarray]:
        n = len(x)
        idx = np.arange(lo, hi)
        return [
            x[lo:hi] if k == 0 else x[np.clip(idx + k, 0, n - 1)]
            for k in range(-self.radius, self.radius + 1)
        ]

    def apply_range(self, x: np.ndarray, out: np.ndarray, lo: int, hi: int) -> None:
        out[lo:hi] = self.kernel(*self.window(x, lo, hi))

    def apply(self, x: np.ndarray, out: np.ndarray | None = None) -> np.ndarray:
        if out is None:
            out = np.empty_like(x)
        if len(x):
            self.apply_range(x, out, 0, len(x))
        return out


def phase_coupling(left: np.ndarray, center: np.ndarray, right: np.ndarray) -> np.ndarray:
    return np.sin(right - center) + np.sin(center - left)


def phase_chain_stencil() -> Stencil1D:
    """sin(x[i+1] - x[i]) + sin(x[i] - x[i-1])."""
    return Stencil1D(phase_coupling, radius=1)


def stencil_apply(s: Stencil1D, x: np.ndarray) -> np.ndarray:
    return s.apply(x)
