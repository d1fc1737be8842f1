import numpy as np

from app.utils.errors import ConfigError


def make_rng(seed: int) -> np.random.Generator:
    """PCG64 generator; numpy keeps its bit stream stable across releases and platforms."""
    return np.random.Generator(np.random.PCG64(seed))


def make_disorder(seed: int, nx: int, ny: int, w_lo: float, w_hi: float) -> np.ndarray:
    """Per-node omega^2 drawn uniformly from [w_lo, w_hi], shape (nx, ny)."""
    if w_lo > w_hi:
        raise ConfigError(f"disorder range is empty: [{w_lo}, {w_hi}]")
    if w_lo == w_hi:
        return np.full((nx, ny), float(w_lo))
    return make_rng(seed).uniform(w_lo, w_hi, size=(nx, ny))
