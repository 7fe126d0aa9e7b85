import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from coarray import SensorArray, parse_and_normalize


@pytest.fixture
def misc6():
    return parse_and_normalize([0, 1, 2, 6, 10, 13])


@pytest.fixture
def tfra9():
    return parse_and_normalize([0, 1, 5, 6, 12, 13, 14, 15, 16])


@pytest.fixture
def tfra13():
    return parse_and_normalize([0, 1, 7, 8, 16, 17, 25, 26, 27, 28, 29, 30, 31])


def random_arrays(count: int, max_sensors: int = 12, max_aperture: int = 40, seed: int = 0):
    """Seeded stream of valid arrays: {0, L} plus random interior sensors."""
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < count:
        L = int(rng.integers(1, max_aperture + 1))
        n = int(rng.integers(2, max_sensors + 1))
        if n > L + 1:
            continue
        if n == 2:
            positions = (0, L)
        else:
            interior = rng.choice(np.arange(1, L), size=n - 2, replace=False)
            positions = tuple(sorted({0, L, *map(int, interior)}))
        out.append(SensorArray(positions))
    return out
