"""Benchmark runner: median of repeated timed integrations per problem size.

Setup (allocation, disorder, matrix assembly) and warmup runs happen outside
the timed region; each repetition times only the integration loop.
"""

import hashlib
import math
import time
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from app.backends import make_algebra
from app.bench.bytes_model import bytes_moved
from app.bench.config import BenchConfig
from app.steppers import integrate_n_steps
from app.systems.problems import DEFAULT_STEPPERS, Problem, make_problem
from app.utils.logger import logger, run_context

Clock = Callable[[], int]


@dataclass
class BenchRecord:
    system: str
    backend: str
    fused: bool
    n: int
    steps: int
    median_seconds: float
    min_seconds: float
    max_seconds: float
    bytes_moved: int
    gbps: float
    peak_frac: float
    pass_count: int
    times: list[float] = field(default_factory=list)
    checksum: str = ""
    failed: bool = False
    error: str = ""

    @classmethod
    def from_times(
        cls,
        system: str,
        backend: str,
        fused: bool,
        n: int,
        steps: int,
        times: list[float],
        n_bytes: int,
        pass_count: int,
        peak_gbps: float | None = None,
        checksum: str = "",
    ) -> "BenchRecord":
        median = float(np.median(times))
        gbps = n_bytes / median / 1e9 if median > 0 else math.nan
        peak_frac = gbps / peak_gbps if peak_gbps else math.nan
        return cls(
            system=system,
            backend=backend,
            fused=fused,
            n=n,
            steps=steps,
            median_seconds=median,
            min_seconds=min(times),
            max_seconds=max(times),
            bytes_moved=n_bytes,
            gbps=gbps,
            peak_frac=peak_frac,
            pass_count=pass_count,
            times=list(times),
            checksum=checksum,
        )

    @classmethod
    def failure(cls, system: str, backend: str, fused: bool, n: int, steps: int, error: str):
        return cls(
            system=system,
            backend=backend,
            fused=fused,
            n=n,
            steps=steps,
            median_seconds=math.nan,
            min_seconds=math.nan,
            max_seconds=math.nan,
            bytes_moved=0,
            gbps=math.nan,
            peak_frac=math.nan,
            pass_count=0,
            failed=True,
            error=error,
        )


def state_checksum(state) -> str:
    digest = hashlib.sha256()
    for part in state if isinstance(state, tuple) else (state,):
        digest.update(np.ascontiguousarray(part).tobytes())
    return digest.hexdigest()


ProblemFactory = Callable[..., Problem]


def run_benchmark(
    config: BenchConfig,
    clock: Clock = time.perf_counter_ns,
    problem_factory: ProblemFactory = make_problem,
) -> list[BenchRecord]:
    """One record per size in ``config.sizes``.

    ``clock`` returns nanoseconds and is read exactly twice per timed repetition.
    A size that runs out of memory yields a failed record and the sweep continues.
    """
    algebra = make_algebra(config.backend, config.workers)
    stepper = config.stepper or DEFAULT_STEPPERS[config.system]
    records = []
    try:
        for n in config.sizes:
            with run_context(config.system, config.backend, n):
                try:
                    problem = problem_factory(
                        config.system, n, algebra, seed=config.seed, stepper=stepper
                    )
                    records.append(_time_problem(config, problem, algebra, stepper, clock))
                except MemoryError as e:
                    logger.warning(f"size {n} failed: out of memory ({e})")
                    records.append(
                        BenchRecord.failure(
                            config.system,
                            config.backend,
                            algebra.fuses,
                            n,
                            config.steps,
                            error=f"out of memory: {e}",
                        )
                    )
    finally:
        algebra.close()
    return records


def _time_problem(config: BenchConfig, problem: Problem, algebra, stepper: str, clock: Clock):
    def integrate(state):
        integrate_n_steps(problem.stepper, problem.system, state, 0.0, config.dt, config.steps)

    for _ in range(config.warmup):
        integrate(problem.fresh_state())

    times = []
    passes = 0
    state = None
    for rep in range(config.repetitions):
        state = problem.fresh_state()
        algebra.passes.reset()
        start = clock()
        integrate(state)
        elapsed = (clock() - start) / 1e9
        passes = algebra.passes.count
        times.append(elapsed)
        logger.debug(f"repetition {rep}: {elapsed:.6f} s, {passes} passes")

    record = BenchRecord.from_times(
        system=config.system,
        backend=config.backend,
        fused=algebra.fuses,
        n=problem.n,
        steps=config.steps,
        times=times,
        n_bytes=bytes_moved(config.system, problem.n, config.steps, algebra.fuses, stepper),
        pass_count=passes // config.steps if config.steps else 0,
        peak_gbps=config.peak_gbps,
        checksum=state_checksum(state),
    )
    logger.info(
        f"median {record.median_seconds:.6f} s, {record.gbps:.3f} GB/s, "
        f"{record.pass_count} passes/step"
    )
    return record
