import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crosscodes.errors import BudgetExceededError
from crosscodes.ringlinalg import (
    additive_order,
    all_words,
    diagonalize,
    enumerate_kernel,
    kernel_basis,
    kernel_size,
    row_span_size,
    span,
)


def as_set(arr):
    return {tuple(int(x) for x in row) for row in arr}


def test_all_words_order_and_budget():
    w = all_words(2, 2)
    assert w.shape == (16, 2)
    assert tuple(w[0]) == (0, 0) and tuple(w[1]) == (0, 1) and tuple(w[-1]) == (3, 3)
    with pytest.raises(BudgetExceededError):
        all_words(5, 5)


def test_kernel_examples():
    k = as_set(enumerate_kernel([[2, 2], [0, 4]], 4))
    assert len(k) == 8 and {(4, 4), (0, 8)} <= k
    assert as_set(enumerate_kernel([[1, 1], [0, 2]], 3)) == {(0, 0), (4, 4)}
    k = as_set(enumerate_kernel([[2, 2, 2], [0, 4, 14]], 4))
    assert len(k) == 64 and {(2, 2, 4), (1, 5, 2)} <= k
    assert len(enumerate_kernel([[0, 0, 0]], 3)) == 512


def test_additive_order():
    assert additive_order((4, 4), 4) == 4
    assert additive_order((0, 8), 4) == 2
    assert additive_order((1, 6), 4) == 16
    assert additive_order((0, 0), 4) == 1


matrices = st.integers(1, 4).flatmap(
    lambda m: st.tuples(
        st.just(m),
        st.integers(1, 3).flatmap(
            lambda n: st.lists(st.lists(st.integers(0, (1 << m) - 1), min_size=n, max_size=n), min_size=1, max_size=3)
        ),
    )
)


@settings(max_examples=200, deadline=None)
@given(matrices)
def test_kernel_basis_matches_enumeration(case):
    m, H = case
    n = len(H[0])
    gens, orders = kernel_basis(H, m)
    brute = as_set(enumerate_kernel(H, m))
    assert kernel_size(H, m) == len(brute) == int(np.prod(orders, dtype=np.int64))
    for g, o in zip(gens, orders):
        assert tuple(g) in brute
        assert additive_order(g, m) == o
    assert as_set(span(gens, m)) == brute if gens else brute == {(0,) * n}


@settings(max_examples=200, deadline=None)
@given(matrices)
def test_row_span_size_matches_closure(case):
    m, G = case
    assert row_span_size(G, m) == len(span(G, m))


def test_diagonal_exponents():
    d = diagonalize([[2, 2], [0, 4]], 4)
    assert sorted(d.exponents) == [1, 2]
    assert diagonalize([[0, 0]], 3).exponents == ()
