from app.core.algebra import Algebra
from config import active_config


def block_ranges(n: int, block_size: int) -> list[tuple[int, int]]:
    return [(lo, min(lo + block_size, n)) for lo in range(0, n, block_size)]


class FusedAlgebra(Algebra):
    """Serial algebra walking cache-sized blocks; systems bound to it fuse their RHS.

    Each for_eachN is still a single pass. The difference from the serial backend is
    that right-hand sides built for this algebra evaluate all of their statements per
    block, in one loop over the data, instead of one loop per statement.
    """

    tag = "fused"
    fuses = True

    def __init__(self, block_size: int | None = None):
        super().__init__()
        self.block_size = int(block_size or active_config().FUSED_BLOCK_SIZE)
        if self.block_size < 1:
            raise ValueError(f"block size must be >= 1, got {self.block_size}")

    def ranges(self, n: int) -> list[tuple[int, int]]:
        return block_ranges(n, self.block_size)

    def __repr__(self):
        return f"FusedAlgebra(block_size={self.block_size})"
