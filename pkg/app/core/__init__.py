from app.core.algebra import Algebra, PassCounter
from app.core.operations import (
    ScaleSum,
    ScaleSum2,
    ScaleSum3,
    ScaleSum4,
    ScaleSum5,
    scale_sum_apply,
)
from app.core.state import MultiState, StateVector, check_finite, make_state

__all__ = [
    "Algebra",
    "MultiState",
    "PassCounter",
    "ScaleSum",
    "ScaleSum2",
    "ScaleSum3",
    "ScaleSum4",
    "ScaleSum5",
    "StateVector",
    "check_finite",
    "make_state",
    "scale_sum_apply",
]
