import numpy as np
import pytest
from hypothesis import settings

from pspread.code import build_code

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture(scope="session")
def example_code():
    """C_2(2,7) with p = x^2+x+1 and p' = x^3+x+1."""
    return build_code(2, 2, 7, [1, 1, 1], [1, 1, 0, 1])


@pytest.fixture(scope="session")
def spread_code():
    return build_code(2, 2, 4)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
