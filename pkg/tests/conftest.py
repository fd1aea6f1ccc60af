import numpy as np
import pytest

from bingspace import BinOpTable
from bingspace.kernels import available_backends, get_backend

# The two-point example, a = 0 and b = 1; first index is t.
E2 = BinOpTable([[0, 1], [0, 1]])
PHI1 = BinOpTable([[1, 0], [1, 0]])
PHI2 = BinOpTable([[0, 1], [1, 0]])
PHI3 = BinOpTable([[1, 0], [0, 1]])


@pytest.fixture(params=available_backends())
def backend(request):
    return get_backend(request.param)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def random_table(rng, n):
    return BinOpTable(rng.integers(0, n, size=(n, n)))


def random_invertible(rng, n):
    return BinOpTable(np.stack([rng.permutation(n) for _ in range(n)]))
