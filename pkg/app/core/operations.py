"""Per-element operations applied by an algebra.

``ScaleSumK`` computes ``target = a1*s1 + a2*s2 + ... + aK*sK`` accumulated
strictly left to right. Applying it to aligned slices gives the same bits as
applying it element by element, which is what lets every backend reproduce the
serial result exactly.
"""

from typing import Sequence

import numpy as np


def scale_sum_apply(coeffs: Sequence[float], operands: Sequence[float]) -> float:
    """Scalar form of ScaleSumK; returns the new target value."""
    if len(coeffs) != len(operands):
        raise ValueError(f"{len(coeffs)} coefficients for {len(operands)} operands")
    total = coeffs[0] * operands[0]
    for a, v in zip(coeffs[1:], operands[1:]):
        total = total + a * v
    return total


class ScaleSum:
    """Fused multiply-add kernel with K coefficients."""

    def __init__(self, *coeffs: float):
        if not coeffs:
            raise ValueError("ScaleSum needs at least one coefficient")
        self.coeffs = tuple(float(a) for a in coeffs)

    @property
    def arity(self) -> int:
        """Number of states a for_eachN call must pass, target included."""
        return len(self.coeffs) + 1

    def __call__(self, target: np.ndarray, *operands: np.ndarray) -> None:
        acc = self.coeffs[0] * operands[0]
        for a, v in zip(self.coeffs[1:], operands[1:]):
            acc += a * v
        # target may alias an operand; it is written only after every read
        target[...] = acc

    def __repr__(self):
        return f"{type(self).__name__}{self.coeffs}"


class ScaleSum2(ScaleSum):
    def __init__(self, a1: float, a2: float):
        super().__init__(a1, a2)


class ScaleSum3(ScaleSum):
    def __init__(self, a1: float, a2: float, a3: float):
        super().__init__(a1, a2, a3)


class ScaleSum4(ScaleSum):
    def __init__(self, a1: float, a2: float, a3: float, a4: float):
        super().__init__(a1, a2, a3, a4)


class ScaleSum5(ScaleSum):
    def __init__(self, a1: float, a2: float, a3: float, a4: float, a5: float):
        super().__init__(a1, a2, a3, a4, a5)
