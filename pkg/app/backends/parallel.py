import weakref
from concurrent.futures import ThreadPoolExecutor, wait

from app.core.algebra import Algebra, RangeKernel
from configs.config import resolve_worker_count


def chunk_ranges(n: int, workers: int) -> list[tuple[int, int]]:
    """Split ``[0, n)`` into at most ``workers`` chunks of ``ceil(n / workers)`` elements."""
    if workers < 1:
        raise ValueError(f"worker count must be >= 1, got {workers}")
    size = -(-n // workers)
    return [(c * size, min((c + 1) * size, n)) for c in range(workers) if c * size < n]


class ParallelAlgebra(Algebra):
    """Static chunking over a thread pool.

    numpy releases the GIL inside its element loops, so chunks of a large state run
    concurrently. Chunk boundaries depend only on (n, workers) and every operation is
    elementwise, so results are bitwise equal to the serial backend.
    """

    tag = "parallel"

    def __init__(self, workers: int | None = None):
        super().__init__()
        self.workers = resolve_worker_count(workers)
        self._pool = None
        if self.workers > 1:
            self._pool = ThreadPoolExecutor(
                max_workers=self.workers, thread_name_prefix="odebench-worker"
            )
            self._finalizer = weakref.finalize(self, self._pool.shutdown, wait=False)

    def ranges(self, n: int) -> list[tuple[int, int]]:
        return chunk_ranges(n, self.workers)

    def run_ranges(self, kernel: RangeKernel, n: int) -> None:
        chunks = self.ranges(n)
        if self._pool is None or len(chunks) <= 1:
            for lo, hi in chunks:
                kernel(lo, hi)
            return

        futures = [self._pool.submit(kernel, lo, hi) for lo, hi in chunks]
        wait(futures)
        for future in futures:
            # re-raises the first chunk failure, after every chunk has stopped
            future.result()

    def close(self) -> None:
        if self._pool is not None:
            self._finalizer()
            self._pool = None

    def __repr__(self):
        return f"ParallelAlgebra(workers={self.workers})"
