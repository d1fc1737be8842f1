"""Bytes-moved accounting used to turn run times into memory throughput.

Rule: 8 bytes per scalar read or written, counted once per pass. A sparse
product counts, per stored entry, one value read, one 4-byte column index read
and one gathered vector read, plus one write per row. Row offsets are not
counted. The totals are a model of the minimum traffic, not a measurement.
"""

from app.systems.problems import DEFAULT_STEPPERS, lattice_extents
from app.utils.errors import ConfigError

SCALAR_BYTES = 8
INDEX_BYTES = 4

# scalars touched per state element by a right-hand side evaluation
_RHS_SCALARS = {
    # fused: read X, Y, Z, R; write dX, dY, dZ
    # unfused: dX reads X, Y (+1 write); dY reads R, X, Y, Z (+1); dZ reads X, Y, Z (+1)
    ("lorenz", True): 7,
    ("lorenz", False): 12,
    # fused: read phi, omega; write dphi
    # unfused: stencil reads phi, writes dphi; then reads omega, dphi and writes dphi
    ("phase", True): 3,
    ("phase", False): 5,
    # elementwise part after the sparse product
    # fused: read Aq, q; write dp. unfused: cube (read q, write dp), combine (read Aq, dp; write dp)
    ("lattice", True): 3,
    ("lattice", False): 5,
}

# per step: (rhs evaluations, scalars touched per state element by the stepper's own passes)
_STEPPER_COST = {
    "euler": (1, 3),
    "rk4": (4, 15),
    "symplectic-euler": (1, 6),
    "verlet": (2, 9),
    "yoshida4": (6, 27),
}


def lattice_nnz(nx: int, ny: int) -> int:
    """Stored entries of the lattice operator: diagonal plus every in-grid neighbour."""
    return 5 * nx * ny - 2 * nx - 2 * ny


def spmv_bytes(nnz: int, n_rows: int) -> int:
    return nnz * (2 * SCALAR_BYTES + INDEX_BYTES) + n_rows * SCALAR_BYTES


def state_elements(system: str, n: int) -> int:
    """Scalars in the integrated state (the lattice's q or p alone)."""
    return 3 * n if system == "lorenz" else n


def rhs_bytes(system: str, n: int, fused: bool) -> int:
    """Bytes moved by one right-hand side evaluation at problem size ``n``."""
    try:
        scalars = _RHS_SCALARS[(system, bool(fused))]
    except KeyError:
        raise ConfigError(f"no bytes model for system {system!r}") from None
    total = scalars * n * SCALAR_BYTES
    if system == "lattice":
        nx, ny = lattice_extents(n)
        total += spmv_bytes(lattice_nnz(nx, ny), n)
    return total


def bytes_moved(system: str, n: int, steps: int, fused: bool, stepper: str | None = None) -> int:
    """Bytes moved by ``steps`` steps: RHS evaluations plus the stepper's own passes."""
    stepper = stepper or DEFAULT_STEPPERS.get(system)
    if stepper not in _STEPPER_COST:
        raise ConfigError(f"no bytes model for stepper {stepper!r}")
    evaluations, stepper_scalars = _STEPPER_COST[stepper]
    per_step = evaluations * rhs_bytes(system, n, fused)
    per_step += stepper_scalars * state_elements(system, n) * SCALAR_BYTES
    return steps * per_step
