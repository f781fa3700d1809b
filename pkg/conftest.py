import numpy as np
import pytest

from quadrature import Precision


@pytest.fixture
def prec():
    return Precision()


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
