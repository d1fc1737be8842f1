"""Shared fixtures.

APP_ENV is set before any package import so that every module sees the testing
configuration (no log file, DEBUG level).
"""

import os

os.environ["APP_ENV"] = "testing"

import pytest  # noqa: E402
from dotenv import load_dotenv  # noqa: E402

# Load environment variables once at module level
load_dotenv()

from app.backends import FusedAlgebra, ParallelAlgebra, SerialAlgebra  # noqa: E402


@pytest.fixture
def serial_algebra():
    """Fixture providing the single-threaded reference algebra."""
    return SerialAlgebra()


@pytest.fixture
def fused_algebra():
    """Fixture providing the fusing algebra with a small block size."""
    return FusedAlgebra(block_size=64)


@pytest.fixture(params=[1, 2, 8], ids=lambda p: f"workers={p}")
def parallel_algebra(request):
    """Fixture providing parallel algebras with 1, 2 and 8 workers."""
    algebra = ParallelAlgebra(workers=request.param)
    yield algebra
    algebra.close()


@pytest.fixture(params=["serial", "parallel", "fused"])
def any_algebra(request):
    """Fixture providing one algebra of every backend."""
    if request.param == "serial":
        algebra = SerialAlgebra()
    elif request.param == "parallel":
        algebra = ParallelAlgebra(workers=4)
    else:
        algebra = FusedAlgebra(block_size=64)
    yield algebra
    algebra.close()
