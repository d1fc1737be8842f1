"""Lazy elementwise expressions and the fused/unfused statement executors.

An expression graph is built with ordinary operators over ``vec``/``const``
leaves and the ``sin``/``pow3`` functions, e.g.::

    dY = vec(R) * vec(X) - vec(Y) - vec(X) * vec(Z)

Nothing is computed until a statement list is executed. ``unfused_execute``
makes one pass over the data per statement; ``fuse_execute`` walks the data
once and evaluates every statement of a ``FusedGroup`` per block.
"""

import math
from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from app.core.algebra import Algebra, PassCounter
from app.utils.errors import AliasingError, DimensionMismatchError, StateLayoutError
from config import active_config


class Expression:
    """Base node. Children are evaluated left to right."""

    def __add__(self, other):
        return Binary("+", self, as_expression(other))

    def __radd__(self, other):
        return Binary("+", as_expression(other), self)

    def __sub__(self, other):
        return Binary("-", self, as_expression(other))

    def __rsub__(self, other):
        return Binary("-", as_expression(other), self)

    def __mul__(self, other):
        return Binary("*", self, as_expression(other))

    def __rmul__(self, other):
        return Binary("*", as_expression(other), self)

    def __neg__(self):
        return Unary("neg", self)

    def vectors(self) -> Iterator["Vec"]:
        """Vector references read by this expression, in evaluation order."""
        return iter(())

    def block(self, lo: int, hi: int):
        """Values for indices ``[lo, hi)`` as an array (or a scalar for constants)."""
        raise NotImplementedError

    def at(self, i: int) -> float:
        raise NotImplementedError


@dataclass(frozen=True, eq=False)
class Vec(Expression):
    """Reference to a 1-D state; a nonzero ``offset`` reads ``data[i + offset]``
    with the index clamped to ``[0, n)``."""

    data: np.ndarray
    offset: int = 0

    def __post_init__(self):
        if not isinstance(self.data, np.ndarray) or self.data.ndim != 1:
            raise StateLayoutError("vector references must be 1-D numpy arrays")
        if self.data.dtype != np.float64:
            raise StateLayoutError(f"vector references must be float64, got {self.data.dtype}")

    def vectors(self):
        yield self

    def block(self, lo, hi):
        if self.offset == 0:
            return self.data[lo:hi]
        idx = np.clip(np.arange(lo + self.offset, hi + self.offset), 0, len(self.data) - 1)
        return self.data[idx]

    def at(self, i):
        j = min(max(i + self.offset, 0), len(self.data) - 1)
        return float(self.data[j])


@dataclass(frozen=True, eq=False)
class Const(Expression):
    value: float

    def block(self, lo, hi):
        return self.value

    def at(self, i):
        return self.value


_UNARY_BLOCK = {
    "neg": lambda v: -v,
    "sin": np.sin,
    "pow3": lambda v: v * v * v,
}
_UNARY_SCALAR = {
    "neg": lambda v: -v,
    "sin": math.sin,
    "pow3": lambda v: v * v * v,
}
_BINARY = {
    "+": lambda a, b: a + b,
    "-": lambda a, b: a - b,
    "*": lambda a, b: a * b,
}


@dataclass(frozen=True, eq=False)
class Unary(Expression):
    op: str
    child: Expression

    def __post_init__(self):
        if self.op not in _UNARY_BLOCK:
            raise ValueError(f"unknown unary operation {self.op!r}")

    def vectors(self):
        yield from self.child.vectors()

    def block(self, lo, hi):
        return _UNARY_BLOCK[self.op](self.child.block(lo, hi))

    def at(self, i):
        return _UNARY_SCALAR[self.op](self.child.at(i))


@dataclass(frozen=True, eq=False)
class Binary(Expression):
    op: str
    left: Expression
    right: Expression

    def __post_init__(self):
        if self.op not in _BINARY:
            raise ValueError(f"unknown binary operation {self.op!r}")

    def vectors(self):
        yield from self.left.vectors()
        yield from self.right.vectors()

    def block(self, lo, hi):
        return _BINARY[self.op](self.left.block(lo, hi), self.right.block(lo, hi))

    def at(self, i):
        return _BINARY[self.op](self.left.at(i), self.right.at(i))


def as_expression(value) -> Expression:
    if isinstance(value, Expression):
        return value
    if isinstance(value, np.ndarray):
        return Vec(value)
    if isinstance(value, (int, float, np.floating, np.integer)):
        return Const(float(value))
    raise TypeError(f"cannot build an expression from {type(value).__name__}")


def vec(data: np.ndarray) -> Vec:
    return Vec(data)


def const(value: float) -> Const:
    return Const(float(value))


def shift(data: np.ndarray | Vec, offset: int) -> Vec:
    """``data[i + offset]`` with the edge value replicated past either end."""
    base = data.data if isinstance(data, Vec) else data
    return Vec(base, offset)


def sin(expr) -> Unary:
    return Unary("sin", as_expression(expr))


def pow3(expr) -> Unary:
    return Unary("pow3", as_expression(expr))


def expression_length(expr: Expression) -> int | None:
    """Common length of the vectors in ``expr``; None when it reads no vector."""
    lengths = {len(v.data) for v in expr.vectors()}
    if len(lengths) > 1:
        raise DimensionMismatchError(f"expression mixes vector lengths {sorted(lengths)}")
    return lengths.pop() if lengths else None


def evaluate(expr: Expression, i: int) -> float:
    """Value of ``expr`` at index ``i``, interpreted one element at a time."""
    n = expression_length(expr)
    if n is not None and not 0 <= i < n:
        raise IndexError(f"index {i} out of range for length {n}")
    return expr.at(i)


@dataclass(frozen=True, eq=False)
class Statement:
    """``target[i] = expr(i)`` for every index."""

    target: np.ndarray
    expr: Expression

    def __post_init__(self):
        if not isinstance(self.target, np.ndarray) or self.target.ndim != 1:
            raise StateLayoutError("statement targets must be 1-D numpy arrays")
        n = expression_length(self.expr)
        if n is not None and n != len(self.target):
            raise DimensionMismatchError(
                f"statement writes {len(self.target)} elements from length-{n} operands"
            )

    def run(self, lo: int, hi: int) -> None:
        self.target[lo:hi] = self.expr.block(lo, hi)


class FusedGroup:
    """Statements evaluated together in a single loop over the data.

    No target may be read by any statement of the group, so evaluating all
    statements per block gives the same values as running them one after another.
    """

    def __init__(self, statements: Iterable[Statement], passes: PassCounter | None = None):
        self.statements = tuple(statements)
        self.passes = passes if passes is not None else PassCounter()

        lengths = {len(s.target) for s in self.statements}
        if len(lengths) > 1:
            raise DimensionMismatchError(f"fused statements differ in length: {sorted(lengths)}")
        self.length = lengths.pop() if lengths else 0

        for k, stmt in enumerate(self.statements):
            for other in self.statements:
                for ref in other.expr.vectors():
                    if np.may_share_memory(stmt.target, ref.data):
                        raise AliasingError(
                            f"target of statement {k} is also an input of the fused group"
                        )

    @property
    def pass_count(self) -> int:
        return self.passes.count

    def __len__(self):
        return len(self.statements)


_serial = None


def _default_algebra() -> Algebra:
    global _serial
    if _serial is None:
        from app.backends.serial import SerialAlgebra

        _serial = SerialAlgebra()
    return _serial


def fuse_execute(group: FusedGroup, algebra: Algebra | None = None) -> None:
    """One loop over the data; per block, every statement in order."""
    if not group.statements:
        return
    block_size = active_config().FUSED_BLOCK_SIZE
    statements = group.statements

    def kernel(lo: int, hi: int) -> None:
        for b_lo in range(lo, hi, block_size):
            b_hi = min(b_lo + block_size, hi)
            for stmt in statements:
                stmt.run(b_lo, b_hi)

    (algebra or _default_algebra()).run_ranges(kernel, group.length)
    group.passes.add(1)


def unfused_execute(
    statements: Iterable[Statement],
    passes: PassCounter | None = None,
    algebra: Algebra | None = None,
) -> None:
    """One full pass per statement, statements in order.

    A later statement may read an earlier statement's target. A statement may read
    its own target only without an offset, since chunks run concurrently.
    """
    statements = list(statements)
    for k, stmt in enumerate(statements):
        for ref in stmt.expr.vectors():
            if ref.offset != 0 and np.may_share_memory(stmt.target, ref.data):
                raise AliasingError(f"statement {k} reads its own target at an offset")

    algebra = algebra or _default_algebra()
    for stmt in statements:
        algebra.run_ranges(stmt.run, len(stmt.target))
        if passes is not None:
            passes.add(1)
