import numpy as np
import pytest

from specshrink.algebra import change_basis, matrix_unit_algebra, truncated_polynomial_algebra
from specshrink.linalg import ExactMatrix, exact_rank
from specshrink.scalars import gr
from specshrink.sma import QuasiOrder, sma_algebra


def upper_triangular(n=2):
    rho = QuasiOrder.from_pairs(n, [(i, j) for i in range(n) for j in range(i, n)])
    return sma_algebra(rho)


def scrambled(A, seed):
    """The same algebra on a random exact basis."""
    rng = np.random.default_rng(seed)
    while True:
        T = ExactMatrix([[gr(int(rng.integers(-1, 2))) for _ in range(A.dim)] for _ in range(A.dim)], A.dim)
        if exact_rank(T) == A.dim:
            return change_basis(A, T)


@pytest.fixture
def ut2():
    return upper_triangular(2)


@pytest.fixture
def dual():
    return truncated_polynomial_algebra(2)


@pytest.fixture
def m2():
    return matrix_unit_algebra(2, [(0, 0), (0, 1), (1, 0), (1, 1)])


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)
