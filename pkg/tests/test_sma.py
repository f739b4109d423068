import numpy as np
import pytest

from specshrink.algebra import random_element, spectrum
from specshrink.linalg import hausdorff
from specshrink.scalars import ZERO, gr
from specshrink.sma import (
    QuasiOrder,
    QuasiOrderError,
    all_quasi_orders,
    block_projection,
    condensation,
    quasi_order_with_blocks,
    random_quasi_order,
    sample_diag_conj,
    sma_algebra,
    sma_radical,
    to_matrix,
)


def qo(n, pairs):
    """Quasi-order from 1-based pairs, diagonal added."""
    return QuasiOrder.from_pairs(n, list(pairs) + [(i, i) for i in range(1, n + 1)], one_based=True)


EXAMPLE_21 = qo(3, [(1, 2), (2, 1), (1, 3), (2, 3)])


def test_sma_algebra_dims():
    assert sma_algebra(qo(3, [])).dim == 3
    assert sma_algebra(qo(2, [(1, 2), (2, 1)])).dim == 4
    assert sma_algebra(qo(2, [(1, 2)])).dim == 3


def test_non_transitive_is_an_error():
    with pytest.raises(QuasiOrderError):
        qo(3, [(1, 2), (2, 3)])
    rho = QuasiOrder.from_pairs(3, [(1, 2), (2, 3)], one_based=True, close=True, reflexive_close=True)
    assert (0, 2) in rho.pairs


def test_non_reflexive_is_an_error():
    with pytest.raises(QuasiOrderError):
        QuasiOrder.from_pairs(2, [(1, 1)], one_based=True)


def test_condensation_examples():
    c = condensation(qo(3, []))
    assert c.block_sizes == (1, 1, 1) and c.permutation == (0, 1, 2)
    full = qo(4, [(i, j) for i in range(1, 5) for j in range(1, 5)])
    assert condensation(full).block_sizes == (4,)
    c = condensation(EXAMPLE_21)
    assert c.block_sizes == (2, 1)
    assert c.classes() == [[0, 1], [2]]


def test_condensation_tie_break_smallest_index():
    # 3 must precede 1; among the classes available at each step the smallest member wins
    c = condensation(qo(3, [(3, 1)]))
    assert c.permutation == (1, 2, 0)


def test_sma_radical_examples():
    full = qo(3, [(i, j) for i in range(1, 4) for j in range(1, 4)])
    assert len(sma_radical(full)) == 0
    assert len(sma_radical(qo(2, [(1, 2)]))) == 1
    assert len(EXAMPLE_21.pairs) == 7
    assert len(sma_radical(EXAMPLE_21)) == 2


def test_block_projection_examples():
    rho = qo(2, [(1, 2)])
    A = sma_algebra(rho)  # basis E11, E12, E22
    X = A.element([gr(1), gr(5), gr(2)])
    P = block_projection(rho, X)
    assert P.coords == (gr(1), ZERO, gr(2))
    assert block_projection(rho, P).coords == P.coords
    assert block_projection(rho, A.basis_element(1)).coords == (ZERO, ZERO, ZERO)
    assert hausdorff(spectrum(X), [1, 2]) < 1e-9
    assert hausdorff(spectrum(P), [1, 2]) < 1e-9


def test_block_projection_multiplicative_mod_radical(rng):
    for _ in range(10):
        rho = random_quasi_order(4, rng)
        A = sma_algebra(rho)
        rad = sma_radical(rho, A)
        X = A.element([gr(int(v)) for v in rng.integers(-3, 4, A.dim)])
        Y = A.element([gr(int(v)) for v in rng.integers(-3, 4, A.dim)])
        lhs = block_projection(rho, X * Y)
        rhs = block_projection(rho, X) * block_projection(rho, Y)
        assert rad.contains((lhs - rhs).coords)
        # the truncation is in fact exactly multiplicative
        assert lhs.coords == rhs.coords


def test_sample_diag_conj_spectrum():
    rho = EXAMPLE_21
    A = sma_algebra(rho)
    X, S, D = sample_diag_conj(rho, 4, A, D=np.array([1.0, 2.0, 3.0]))
    assert hausdorff(spectrum(X), [1, 2, 3]) < 1e-8
    X, _, D = sample_diag_conj(rho, 4, A, S=np.eye(3))
    assert np.allclose(to_matrix(rho, X), np.diag(D))
    for s in range(20):
        X, _, D = sample_diag_conj(rho, s, A)
        assert hausdorff(spectrum(X), D) < 1e-8


def test_radical_dim_identity_all_small_orders():
    for n in range(1, 4):
        for rho in all_quasi_orders(n):
            c = condensation(rho)
            assert len(sma_radical(rho)) + sum(k * k for k in c.block_sizes) == len(rho.pairs)
            cls = c.class_of
            assert all(cls[i] <= cls[j] for i, j in rho.pairs)


def test_all_quasi_orders_counts():
    # labelled preorders on n points: 1, 4, 29, 355
    assert [len(all_quasi_orders(n)) for n in range(1, 5)] == [1, 4, 29, 355]


def test_quasi_order_with_blocks(rng):
    for _ in range(20):
        ks = [int(k) for k in rng.integers(1, 4, size=int(rng.integers(1, 4)))]
        assert list(condensation(quasi_order_with_blocks(ks, rng)).block_sizes) == ks


def test_to_matrix_is_multiplicative(rng):
    rho = random_quasi_order(4, rng)
    A = sma_algebra(rho)
    a, b = random_element(A, 1), random_element(A, 2)
    assert np.allclose(to_matrix(rho, a * b), to_matrix(rho, a) @ to_matrix(rho, b))
