import math
from dataclasses import dataclass
from typing import Iterable

from app.bench.runner import BenchRecord


@dataclass(frozen=True)
class RelativeCell:
    """Run time of ``backend`` over the reference backend's run time at one size."""

    system: str
    backend: str
    n: int
    ratio: float
    diagnostic: str = ""

    @property
    def ok(self) -> bool:
        return not self.diagnostic


def relative_performance(
    records: Iterable[BenchRecord], reference_backend: str
) -> list[RelativeCell]:
    """One cell per record, in input order.

    A cell whose reference is missing or failed carries a diagnostic and a NaN
    ratio; the remaining cells are still computed.
    """
    records = list(records)
    reference = {
        (r.system, r.n): r for r in records if r.backend == reference_backend and not r.failed
    }

    cells = []
    for r in records:
        ref = reference.get((r.system, r.n))
        if r.failed:
            diagnostic = f"{r.backend} run failed: {r.error or 'no timing'}"
        elif ref is None:
            diagnostic = f"no {reference_backend} reference for {r.system} N={r.n}"
        elif not ref.median_seconds > 0:
            diagnostic = f"{reference_backend} reference time is zero for {r.system} N={r.n}"
        else:
            diagnostic = ""

        if diagnostic:
            cells.append(RelativeCell(r.system, r.backend, r.n, math.nan, diagnostic))
        elif r is ref:
            cells.append(RelativeCell(r.system, r.backend, r.n, 1.0))
        else:
            ratio = r.median_seconds / ref.median_seconds
            cells.append(RelativeCell(r.system, r.backend, r.n, ratio))
    return cells
