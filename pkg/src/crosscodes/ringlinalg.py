"""Linear algebra over the chain ring Z_{2^m}.

Every nonzero element is a power of two times a unit, so a matrix can be
diagonalized by elementary row and column operations with diagonal entries
``2^e``. The kernel and row span of a matrix are read off that diagonal form.
Exhaustive enumeration is kept alongside as an independent check.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from .errors import BudgetExceededError
from .residue import _inverse_odd, check_exponent, two_adic_valuation

# largest n*m for which all 2^(nm) words are enumerated
ENUMERATION_BUDGET = 24


@dataclass(frozen=True)
class Diagonalization:
    """``U A V = diag(2^e_0, 2^e_1, ...)`` with only ``V`` recorded.

    ``exponents[p] == m`` marks a zero diagonal entry. Positions past the
    rank of ``A`` (``p >= len(exponents)``) have no diagonal entry at all.
    """

    exponents: tuple[int, ...]
    V: tuple[tuple[int, ...], ...]
    m: int


def diagonalize(A: Sequence[Sequence[int]], m: int) -> Diagonalization:
    check_exponent(m)
    q = 1 << m
    rows = [[int(x) % q for x in row] for row in A]
    N = len(rows)
    n = len(rows[0]) if rows else 0
    V = [[int(i == j) for j in range(n)] for i in range(n)]
    exponents: list[int] = []

    for p in range(min(N, n)):
        best = None
        for i in range(p, N):
            for j in range(p, n):
                if rows[i][j]:
                    e = two_adic_valuation(rows[i][j], m)
                    if best is None or e < best[0]:
                        best = (e, i, j)
        if best is None:
            break
        e, i, j = best
        rows[p], rows[i] = rows[i], rows[p]
        for row in rows:
            row[p], row[j] = row[j], row[p]
        for row in V:
            row[p], row[j] = row[j], row[p]

        unit_inv = _inverse_odd(rows[p][p] >> e, m)
        rows[p] = [(x * unit_inv) % q for x in rows[p]]

        for i in range(N):
            if i != p and rows[i][p]:
                f = rows[i][p] >> e
                rows[i] = [(a - f * b) % q for a, b in zip(rows[i], rows[p])]
        for j in range(n):
            if j != p and rows[p][j]:
                f = rows[p][j] >> e
                for row in rows:
                    row[j] = (row[j] - f * row[p]) % q
                for row in V:
                    row[j] = (row[j] - f * row[p]) % q
        exponents.append(e)

    return Diagonalization(tuple(exponents), tuple(tuple(r) for r in V), m)


def kernel_basis(A: Sequence[Sequence[int]], m: int, n: int | None = None) -> tuple[list[tuple[int, ...]], list[int]]:
    """Generators of ``{v : v A^T = 0}`` and their additive orders.

    The subgroup is the internal direct sum of the cyclic groups generated,
    so the product of the orders is its exact size and every element has a
    unique coefficient vector with ``0 <= c_i < order_i``.
    """
    if n is None:
        n = len(A[0])
    if not A:
        A = [[0] * n]
    d = diagonalize(A, m)
    q = 1 << m
    gens: list[tuple[int, ...]] = []
    orders: list[int] = []
    for p in range(n):
        # 2^e w_p = 0 forces w_p into 2^(m-e) Z, a cyclic group of order 2^e;
        # coordinates past the rank are unconstrained (e = m)
        e = d.exponents[p] if p < len(d.exponents) else m
        if e == 0:
            continue
        scale = 1 << (m - e)
        gens.append(tuple((d.V[i][p] * scale) % q for i in range(n)))
        orders.append(1 << e)
    return gens, orders


def kernel_size(A: Sequence[Sequence[int]], m: int, n: int | None = None) -> int:
    _, orders = kernel_basis(A, m, n)
    size = 1
    for o in orders:
        size *= o
    return size


def row_span_size(G: Sequence[Sequence[int]], m: int) -> int:
    """Order of the additive subgroup generated by the rows of ``G``."""
    if not G:
        return 1
    d = diagonalize(G, m)
    size = 1
    for e in d.exponents:
        size *= 1 << (m - e)
    return size


def additive_order(word: Sequence[int], m: int) -> int:
    e = min(two_adic_valuation(x, m) for x in word)
    return 1 << (m - e)


def all_words(n: int, m: int) -> np.ndarray:
    """Every word of Z_{2^m}^n as rows, in lexicographic order."""
    if n * m > ENUMERATION_BUDGET:
        raise BudgetExceededError(f"n*m = {n * m} exceeds enumeration budget {ENUMERATION_BUDGET}")
    q = 1 << m
    idx = np.arange(q**n, dtype=np.int64)
    cols = [(idx >> (m * (n - 1 - i))) & (q - 1) for i in range(n)]
    return np.stack(cols, axis=1)


def syndromes(words: np.ndarray, A: Sequence[Sequence[int]], m: int) -> np.ndarray:
    H = np.asarray(A, dtype=np.int64) % (1 << m)
    return (words @ H.T) % (1 << m)


def enumerate_kernel(A: Sequence[Sequence[int]], m: int, n: int | None = None) -> np.ndarray:
    """Brute-force kernel: every word whose syndrome vanishes."""
    if n is None:
        n = len(A[0])
    words = all_words(n, m)
    if not A:
        return words
    mask = ~syndromes(words, A, m).any(axis=1)
    return words[mask]


def span(G: Sequence[Sequence[int]], m: int) -> np.ndarray:
    """Brute-force closure of the rows of ``G`` under addition, sorted."""
    q = 1 << m
    n = len(G[0])
    weights = q ** np.arange(n - 1, -1, -1, dtype=np.int64)
    current = np.zeros((1, n), dtype=np.int64)
    for g in G:
        g_arr = np.asarray(g, dtype=np.int64) % q
        order = additive_order(g, m)
        shifts = (np.arange(order, dtype=np.int64)[:, None] * g_arr[None, :]) % q
        current = ((current[:, None, :] + shifts[None, :, :]) % q).reshape(-1, n)
        _, keep = np.unique(current @ weights, return_index=True)
        current = current[np.sort(keep)]
    order = np.argsort(current @ weights)
    return current[order]
