"""The algebra contract: how to iterate over aligned states.

An algebra walks N aligned states and applies a per-element operation exactly
once per index. Subclasses only decide how ``[0, n)`` is split into ranges and
how the ranges are scheduled (``ranges``/``run_ranges``); the for_eachN entry
points, validation and pass accounting live here.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Callable, ClassVar

import numpy as np

from app.core.state import check_layout, check_same_shape

RangeKernel = Callable[[int, int], None]


@dataclass
class PassCounter:
    """Counts full traversals of the state (the CPU analogue of kernel launches)."""

    count: int = 0

    def add(self, n: int = 1) -> None:
        self.count += n

    def reset(self) -> None:
        self.count = 0


class Algebra(ABC):
    tag: ClassVar[str]
    # systems bound to an algebra that fuses build fused right-hand sides
    fuses: ClassVar[bool] = False

    def __init__(self):
        self.passes = PassCounter()

    @abstractmethod
    def ranges(self, n: int) -> list[tuple[int, int]]:
        """Index ranges covering ``[0, n)`` exactly once."""

    def run_ranges(self, kernel: RangeKernel, n: int) -> None:
        """Call ``kernel(lo, hi)`` for every range; returns once all have finished."""
        for lo, hi in self.ranges(n):
            kernel(lo, hi)

    def for_each(self, op: Callable[..., None], *states: np.ndarray) -> None:
        """Apply ``op`` to aligned slices of ``states``; the first state is the target."""
        for i, s in enumerate(states):
            check_layout(s, f"state {i + 1}")
        check_same_shape(*states)
        arity = getattr(op, "arity", None)
        if arity is not None and arity != len(states):
            raise TypeError(f"{op!r} takes {arity} states, got {len(states)}")

        flats = [s.reshape(-1) for s in states]
        n = flats[0].size

        def kernel(lo: int, hi: int) -> None:
            op(*(f[lo:hi] for f in flats))

        self.run_ranges(kernel, n)
        self.passes.add(1)

    def for_each2(self, s1, s2, op) -> None:
        self.for_each(op, s1, s2)

    def for_each3(self, s1, s2, s3, op) -> None:
        self.for_each(op, s1, s2, s3)

    def for_each4(self, s1, s2, s3, s4, op) -> None:
        self.for_each(op, s1, s2, s3, s4)

    def for_each5(self, s1, s2, s3, s4, s5, op) -> None:
        self.for_each(op, s1, s2, s3, s4, s5)

    def for_each6(self, s1, s2, s3, s4, s5, s6, op) -> None:
        self.for_each(op, s1, s2, s3, s4, s5, s6)

    def close(self) -> None:
        """Release execution resources; a no-op for single-context algebras."""

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()

    def __repr__(self):
        return f"{type(self).__name__}()"
