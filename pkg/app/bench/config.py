import json
from dataclasses import asdict, dataclass, field, fields
from pathlib import Path
from typing import Any

from app.backends import BACKENDS
from app.steppers import STEPPERS
from app.systems.problems import SYSTEMS
from app.utils.errors import ConfigError
from configs.bench_config import bench_config_dict


@dataclass
class BenchConfig:
    """One benchmark sweep: a single system on a single backend over ``sizes``."""

    system: str
    backend: str
    sizes: list[int] = field(default_factory=lambda: list(bench_config_dict["BENCH_SIZES"]))
    steps: int = bench_config_dict["BENCH_STEPS"]
    repetitions: int = bench_config_dict["BENCH_REPETITIONS"]
    dt: float = bench_config_dict["BENCH_DT"]
    warmup: int = bench_config_dict["BENCH_WARMUP"]
    seed: int = bench_config_dict["BENCH_SEED"]
    workers: int | None = None
    peak_gbps: float | None = bench_config_dict["BENCH_PEAK_GBPS"]
    stepper: str | None = None

    def __post_init__(self):
        if self.system not in SYSTEMS:
            raise ConfigError(f"unknown system {self.system!r}; expected one of {SYSTEMS}")
        if self.backend not in BACKENDS:
            raise ConfigError(f"unknown backend {self.backend!r}; expected one of {BACKENDS}")
        if self.stepper is not None and self.stepper not in STEPPERS:
            raise ConfigError(f"unknown stepper {self.stepper!r}")
        if not self.sizes:
            raise ConfigError("at least one problem size is required")
        if any(n < 1 for n in self.sizes):
            raise ConfigError(f"problem sizes must be positive, got {self.sizes}")
        if any(b <= a for a, b in zip(self.sizes, self.sizes[1:])):
            raise ConfigError(f"sizes must be strictly increasing, got {self.sizes}")
        if self.repetitions < 1:
            raise ConfigError(f"repetitions must be >= 1, got {self.repetitions}")
        if self.steps < 0:
            raise ConfigError(f"steps must be >= 0, got {self.steps}")
        if self.warmup < 0:
            raise ConfigError(f"warmup runs must be >= 0, got {self.warmup}")
        if self.workers is not None and self.workers < 1:
            raise ConfigError(f"workers must be >= 1, got {self.workers}")
        if self.peak_gbps is not None and self.peak_gbps <= 0:
            raise ConfigError(f"peak bandwidth must be positive, got {self.peak_gbps}")

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


FIELD_NAMES = tuple(f.name for f in fields(BenchConfig))


def expand_configs(settings: dict[str, Any]) -> list[BenchConfig]:
    """BenchConfigs for every (system, backend) pair; both keys may hold a list."""
    unknown = set(settings) - set(FIELD_NAMES)
    if unknown:
        raise ConfigError(f"unknown benchmark settings: {', '.join(sorted(unknown))}")
    for key in ("system", "backend"):
        if key not in settings:
            raise ConfigError(f"benchmark setting {key!r} is required")

    def as_list(value):
        return list(value) if isinstance(value, (list, tuple)) else [value]

    base = {k: v for k, v in settings.items() if k not in ("system", "backend")}
    return [
        BenchConfig(system=system, backend=backend, **base)
        for system in as_list(settings["system"])
        for backend in as_list(settings["backend"])
    ]


def load_config_file(path: str | Path) -> dict[str, Any]:
    try:
        settings = json.loads(Path(path).read_text())
    except json.JSONDecodeError as e:
        raise ConfigError(f"{path}: {e}") from e
    except OSError as e:
        raise ConfigError(f"cannot read {path}: {e}") from e
    if not isinstance(settings, dict):
        raise ConfigError(f"{path}: expected a JSON object")
    return settings
