from app.backends.expression import (
    Const,
    Expression,
    FusedGroup,
    Statement,
    Vec,
    const,
    evaluate,
    fuse_execute,
    pow3,
    shift,
    sin,
    unfused_execute,
    vec,
)
from app.backends.fused import FusedAlgebra
from app.backends.parallel import ParallelAlgebra, chunk_ranges
from app.backends.serial import SerialAlgebra
from app.core.algebra import Algebra
from app.utils.errors import ConfigError

BACKENDS = ("serial", "parallel", "fused")


def make_algebra(backend: str, workers: int | None = None) -> Algebra:
    """Algebra for a backend id; ``workers`` only applies to the parallel backend."""
    if backend == "serial":
        return SerialAlgebra()
    if backend == "parallel":
        return ParallelAlgebra(workers)
    if backend == "fused":
        return FusedAlgebra()
    raise ConfigError(f"unknown backend {backend!r}; expected one of {', '.join(BACKENDS)}")


__all__ = [
    "BACKENDS",
    "Const",
    "Expression",
    "FusedAlgebra",
    "FusedGroup",
    "ParallelAlgebra",
    "SerialAlgebra",
    "Statement",
    "Vec",
    "chunk_ranges",
    "const",
    "evaluate",
    "fuse_execute",
    "make_algebra",
    "pow3",
    "shift",
    "sin",
    "unfused_execute",
    "vec",
]
