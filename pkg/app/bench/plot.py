"""SVG plots of a benchmark sweep: absolute time over N and time relative to a
reference backend, one row of panels per system."""

import math
from pathlib import Path
from typing import Iterable

import matplotlib

matplotlib.use("Agg")

from matplotlib.figure import Figure  # noqa: E402
from matplotlib.ticker import LogLocator  # noqa: E402

from app.bench.relative import relative_performance  # noqa: E402
from app.bench.runner import BenchRecord  # noqa: E402
from app.utils.logger import logger  # noqa: E402


def build_figure(records: Iterable[BenchRecord], reference_backend: str = "serial") -> Figure:
    records = [r for r in records if not r.failed]
    systems = list(dict.fromkeys(r.system for r in records)) or ["(empty)"]
    backends = list(dict.fromkeys(r.backend for r in records))

    fig = Figure(figsize=(11, 4 * len(systems)), layout="constrained")
    axes = fig.subplots(len(systems), 2, squeeze=False)
    cells = relative_performance(records, reference_backend)

    for row, system in enumerate(systems):
        ax_time, ax_rel = axes[row]
        for backend in backends:
            points = sorted(
                (r.n, r.median_seconds)
                for r in records
                if r.system == system and r.backend == backend
            )
            if not points:
                continue
            ns, times = zip(*points)
            ax_time.loglog(ns, times, marker="o", label=backend)

            rel = sorted(
                (c.n, c.ratio)
                for c in cells
                if c.system == system and c.backend == backend and c.ok
            )
            if rel:
                ax_rel.semilogx(*zip(*rel), marker="o", label=backend)
        for c in cells:
            if c.system == system and not c.ok:
                logger.warning(f"relative panel: {c.diagnostic}")

        # reference backend as a constant-1 line across the system's sizes
        sizes = [r.n for r in records if r.system == system]
        if sizes:
            ax_rel.semilogx([min(sizes), max(sizes)], [1.0, 1.0], "k--", linewidth=1)

        ax_time.set_title(f"{system}: run time")
        ax_time.set_xlabel("N")
        ax_time.set_ylabel("median time [s]")
        ax_rel.set_title(f"{system}: relative to {reference_backend}")
        ax_rel.set_xlabel("N")
        ax_rel.set_ylabel("time / reference time")
        for ax in (ax_time, ax_rel):
            ax.xaxis.set_major_locator(LogLocator(base=10))
            ax.grid(True, which="major", alpha=0.3)
            if ax.get_legend_handles_labels()[0]:
                ax.legend()
        ax_time.yaxis.set_major_locator(LogLocator(base=10))

    return fig


def plot_records(
    records: Iterable[BenchRecord], out: str | Path, reference_backend: str = "serial"
) -> Figure:
    """Write the figure as a standalone SVG to ``out``."""
    records = list(records)
    fig = build_figure(records, reference_backend)
    fig.savefig(out, format="svg", metadata={"Date": None})
    n_points = sum(1 for r in records if not r.failed and not math.isnan(r.median_seconds))
    logger.info(f"wrote {out} ({n_points} points)")
    return fig
