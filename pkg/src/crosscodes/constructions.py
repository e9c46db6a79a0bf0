"""Parity check constructions for linear cross codes of length 2 and 3.

Three families are built here:

* ``cor5``  -- n = 2, two rows ``[[2^(m-k-2), 2^(m-k-2)], [0, 2^(m-k-1)]]``,
  valid for any t once m >= k + 2, with 2^(2(m-k)-3) codewords.
* ``thm9``  -- n = 2, one row ``[-(t+1) 2^(m-2t), 2^(m-2t)]`` for t in {2, 3},
  with 2^(2(m-t)) codewords.
* ``cor12`` -- n = 3, two rows ``[[2^(m-k-2)] * 3, [0, 2^(m-k-1), (2t+1) 2^(m-k-2)]]``.

Here k = floor(log2 t). The sufficient conditions that certify such matrices
are checked by :func:`validate_thm18` (n = 2) and :func:`validate_thm24`
(n = 3); the brute-force oracle in :mod:`crosscodes.oracle` is the ground truth.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from functools import cached_property
from typing import Literal

import numpy as np

from .errors import ModulusMismatchError, ParameterError
from .residue import Word, _inverse_odd, check_exponent, mat_vec
from .ringlinalg import additive_order, enumerate_kernel, kernel_basis, row_span_size
from .spheres import linear_sphere_packing_bound

Construction = Literal["cor5", "thm9", "cor12", "custom"]
CONSTRUCTIONS: tuple[str, ...] = ("cor5", "thm9", "cor12")


def magnitude_exponent(t: int) -> int:
    """k = max{i : 2^i <= t}."""
    if t < 1:
        raise ParameterError(f"error magnitude must be >= 1, got {t}")
    return t.bit_length() - 1


def odd_floor(t: int) -> int:
    return t if t % 2 else t - 1


@dataclass(frozen=True)
class CodeSpec:
    n: int
    m: int
    t: int
    construction: Construction = "custom"

    @property
    def k(self) -> int:
        return magnitude_exponent(self.t)

    @property
    def t_bar(self) -> int:
        return odd_floor(self.t)

    @property
    def closed_form_cardinality(self) -> int | None:
        if self.construction == "cor5":
            return 1 << (2 * (self.m - self.k) - 3)
        if self.construction == "thm9" and self.m >= 2 * self.t:
            return 1 << (2 * (self.m - self.t))
        return None


@dataclass(frozen=True)
class ParityCheckMatrix:
    rows: tuple[tuple[int, ...], ...]
    m: int

    def __post_init__(self) -> None:
        check_exponent(self.m)
        q = 1 << self.m
        rows = tuple(tuple(int(x) % q for x in row) for row in self.rows)
        if not rows or not rows[0]:
            raise ModulusMismatchError("parity check matrix must be non-empty")
        if any(len(r) != len(rows[0]) for r in rows):
            raise ModulusMismatchError("parity check matrix rows differ in length")
        object.__setattr__(self, "rows", rows)

    @property
    def n(self) -> int:
        return len(self.rows[0])

    @property
    def N(self) -> int:
        return len(self.rows)

    def column(self, i: int) -> tuple[int, ...]:
        return tuple(row[i] for row in self.rows)

    def syndrome(self, word: Word) -> Word:
        if word.m != self.m:
            raise ModulusMismatchError(f"word over Z_2^{word.m}, matrix over Z_2^{self.m}")
        return mat_vec(self.rows, word)

    def to_list(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


@dataclass(frozen=True)
class GeneratorMatrix:
    """Rows generating a code as an additive group, with each row's order."""

    rows: tuple[tuple[int, ...], ...]
    m: int
    orders: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        q = 1 << self.m
        rows = tuple(tuple(int(x) % q for x in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if not self.orders:
            object.__setattr__(self, "orders", tuple(additive_order(r, self.m) for r in rows))

    @property
    def span_size(self) -> int:
        return row_span_size(self.rows, self.m)

    def to_list(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


def encode(G: GeneratorMatrix, message: Sequence[int]) -> Word:
    """Integer combination of the rows of G with coefficients ``message``."""
    if len(message) != len(G.rows):
        raise ModulusMismatchError(f"message has {len(message)} symbols, generator has {len(G.rows)} rows")
    if not G.rows:
        raise ModulusMismatchError("generator matrix has no rows")
    n = len(G.rows[0])
    acc = [0] * n
    for c, row in zip(message, G.rows):
        for j in range(n):
            acc[j] += int(c) * row[j]
    return Word(tuple(acc), G.m)


@dataclass(frozen=True)
class LinearCode:
    """A linear code ``{v : v H^T = 0}`` together with how it was built."""

    spec: CodeSpec
    H: ParityCheckMatrix

    @cached_property
    def generator(self) -> GeneratorMatrix:
        rows, orders = kernel_basis(self.H.rows, self.H.m, self.H.n)
        return GeneratorMatrix(tuple(rows), self.H.m, tuple(orders))

    @cached_property
    def cardinality(self) -> int:
        size = 1
        for o in self.generator.orders:
            size *= o
        return size

    @property
    def n(self) -> int:
        return self.spec.n

    @property
    def m(self) -> int:
        return self.spec.m

    @property
    def t(self) -> int:
        return self.spec.t

    def __contains__(self, word: Word) -> bool:
        return self.H.syndrome(word).is_zero()

    def words(self) -> np.ndarray:
        """All codewords by enumeration (subject to the enumeration budget)."""
        return enumerate_kernel(self.H.rows, self.m, self.n)


def custom_code(rows: Sequence[Sequence[int]], m: int, t: int) -> LinearCode:
    H = ParityCheckMatrix(tuple(tuple(r) for r in rows), m)
    return LinearCode(CodeSpec(H.n, m, t, "custom"), H)


def construct_cor5(m: int, t: int) -> LinearCode:
    check_exponent(m)
    k = magnitude_exponent(t)
    if m < k + 2:
        raise ParameterError(f"cor5 requires m >= k+2 (k={k}), got m={m}")
    a = 1 << (m - k - 2)
    H = ParityCheckMatrix(((a, a), (0, 2 * a)), m)
    return LinearCode(CodeSpec(2, m, t, "cor5"), H)


def construct_thm9(m: int, t: int) -> LinearCode:
    """Single-row construction for t in {2, 3}.

    Besides m >= 2t, the case (m, t) = (5, 3) is accepted: there the code is
    ``{(a, 4a)}`` with 32 words, i.e. parity check ``[-4, 1]``.
    """
    check_exponent(m)
    if t not in (2, 3):
        raise ParameterError(f"thm9 requires t in {{2, 3}}, got t={t}")
    if m >= 2 * t:
        scale = 1 << (m - 2 * t)
    elif (m, t) == (5, 3):
        scale = 1
    else:
        raise ParameterError(f"thm9 requires m >= 2t = {2 * t}, got m={m}")
    H = ParityCheckMatrix(((-(t + 1) * scale, scale),), m)
    return LinearCode(CodeSpec(2, m, t, "thm9"), H)


def construct_cor12(m: int, t: int) -> LinearCode:
    check_exponent(m)
    k = magnitude_exponent(t)
    if t > 1 << (m - 1):
        raise ParameterError(f"cor12 requires t <= 2^(m-1) = {1 << (m - 1)}, got t={t}")
    if m < k + 2:
        raise ParameterError(f"cor12 requires m >= k+2 (k={k}), got m={m}")
    a = 1 << (m - k - 2)
    H = ParityCheckMatrix(((a, a, a), (0, 2 * a, (2 * t + 1) * a)), m)
    return LinearCode(CodeSpec(3, m, t, "cor12"), H)


def construct(name: str, m: int, t: int) -> LinearCode:
    builders = {"cor5": construct_cor5, "thm9": construct_thm9, "cor12": construct_cor12}
    try:
        return builders[name](m, t)
    except KeyError:
        raise ParameterError(f"unknown construction {name!r}; choose from {', '.join(builders)}") from None


def valid_parameters(name: str, m_range: range, t_range: range) -> list[tuple[int, int]]:
    """All (m, t) in the given ranges accepted by a construction."""
    out = []
    for m in m_range:
        for t in t_range:
            try:
                construct(name, m, t)
            except ParameterError:
                continue
            out.append((m, t))
    return out


def gap_to_bound(code: LinearCode) -> int:
    """Ratio between the linear cross sphere-packing bound and the code size."""
    bound = linear_sphere_packing_bound(code.n, code.m, code.t, "cross")
    size = code.cardinality
    if bound % size:
        raise ParameterError(f"code size {size} does not divide linear bound {bound}")
    return bound // size


# --- sufficient conditions ---------------------------------------------------


@dataclass(frozen=True)
class ConditionCheck:
    valid: bool
    failed: int | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.valid


def _excluded_first_row(m: int, k: int) -> set[int]:
    q = 1 << m
    powers = {0} | {1 << j for j in range(max(m - k - 1, 0), m)}
    return {p % q for p in powers} | {(-p) % q for p in powers}


def _odd_inverses(t_bar: int, e: int) -> list[int]:
    if e == 0:
        return [0]
    return [_inverse_odd(u, e) for u in range(1, t_bar + 1, 2)]


def _multiplier_set(t: int, e: int) -> set[int]:
    """±{1..t}·{1, 3^-1, 5^-1, ..., t_bar^-1} modulo 2^e."""
    q = 1 << e
    out = set()
    for a in range(1, t + 1):
        for u in _odd_inverses(odd_floor(t), e):
            out.add((a * u) % q)
            out.add((-a * u) % q)
    return out


def _check_first_row(entries: Sequence[int], names: str, m: int, k: int) -> ConditionCheck | None:
    excluded = _excluded_first_row(m, k)
    for name, x in zip(names, entries):
        if x in excluded:
            return ConditionCheck(False, 1, f"{name}1 = {x} is excluded")
    return None


def validate_thm18(H: ParityCheckMatrix, t: int) -> ConditionCheck:
    """Check the five sufficient conditions for a length-2 cross code.

    Conditions are numbered in display order: (1) the first row avoids
    ±{0, 2^(m-1), ..., 2^(m-k-1)}; (2)/(3) neither second-row entry is a
    ±{1..t}{1, 3^-1, ..., t_bar^-1} multiple of the other mod 2^m; (4)/(5)
    the same with magnitude floor(t/2^k) mod 2^(m-k). A single-row matrix
    plays both roles.
    """
    if H.n != 2 or H.N not in (1, 2):
        raise ModulusMismatchError(f"expected a 1x2 or 2x2 matrix, got {H.N}x{H.n}")
    m = H.m
    k = magnitude_exponent(t)
    if m < k:
        raise ParameterError(f"need m >= k = {k}")
    first, second = H.rows[0], H.rows[-1]
    bad = _check_first_row(first, "xy", m, k)
    if bad is not None:
        return bad
    x2, y2 = second

    def check(e: int, magnitude: int, target: int, base: int) -> bool:
        q = 1 << e
        return target % q not in {(s * base) % q for s in _multiplier_set(magnitude, e)}

    reduced = t >> k
    checks = [
        (2, m, t, y2, x2, "y2", "x2"),
        (3, m, t, x2, y2, "x2", "y2"),
        (4, m - k, reduced, y2, x2, "y2", "x2"),
        (5, m - k, reduced, x2, y2, "x2", "y2"),
    ]
    for number, e, magnitude, target, base, tn, bn in checks:
        if not check(e, magnitude, target, base):
            return ConditionCheck(False, number, f"{tn} is a forbidden multiple of {bn} mod 2^{e}")
    return ConditionCheck(True)


def validate_thm24(H: ParityCheckMatrix, t: int) -> ConditionCheck:
    """Check the sufficient conditions for a length-3 cross code.

    (1) first-row entries avoid ±{0, 2^(m-1), ..., 2^(m-k-1)};
    (2) ``{1..t} a ∩ ±{1..t} b`` is empty mod 2^m for the second-row pairs
    (x2, y2), (x2, z2), (y2, z2); (3) the same with ``±{1..floor(t/2^k)} b``
    mod 2^(m-k).

    These conditions look at the second row alone. A matrix can define a
    perfectly good cross code while failing them.
    """
    if H.n != 3 or H.N != 2:
        raise ModulusMismatchError(f"expected a 2x3 matrix, got {H.N}x{H.n}")
    m = H.m
    k = magnitude_exponent(t)
    bad = _check_first_row(H.rows[0], "xyz", m, k)
    if bad is not None:
        return bad
    second = dict(zip("xyz", H.rows[1]))
    pairs = (("x", "y"), ("x", "z"), ("y", "z"))

    def disjoint(e: int, magnitude: int, a: int, b: int) -> bool:
        q = 1 << e
        left = {(i * a) % q for i in range(1, t + 1)}
        right = {(s * i * b) % q for i in range(1, magnitude + 1) for s in (1, -1)}
        return not (left & right)

    for number, e, magnitude in ((2, m, t), (3, m - k, t >> k)):
        for a, b in pairs:
            if not disjoint(e, magnitude, second[a], second[b]):
                return ConditionCheck(False, number, f"multiples of {a}2 and {b}2 meet mod 2^{e}")
    return ConditionCheck(True)
