import numpy as np
import pytest

from abring import RingParams


@pytest.fixture
def ref_ring() -> RingParams:
    """Reference parameter point: x = 0.4, |V| = 0.75, eps_d = 1.25."""
    return RingParams.from_x(0.4, 0.75, 1.25)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(987654321)
