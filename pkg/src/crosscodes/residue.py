"""Arithmetic in the residue ring Z_{2^m} and on words of Z_{2^m}^n.

Residues are always stored by their canonical representative in ``[0, 2^m)``.
Mixing moduli raises :class:`ModulusMismatchError` instead of coercing.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

from .errors import ModulusMismatchError, NotInvertibleError, ParameterError

MAX_EXPONENT = 30


def check_exponent(m: int) -> int:
    if not isinstance(m, int) or isinstance(m, bool) or not 1 <= m <= MAX_EXPONENT:
        raise ParameterError(f"modulus exponent must satisfy 1 <= m <= {MAX_EXPONENT}, got {m!r}")
    return m


def two_adic_valuation(x: int, m: int) -> int:
    """Largest e <= m with 2^e dividing x modulo 2^m (``m`` for zero)."""
    x %= 1 << m
    if x == 0:
        return m
    return (x & -x).bit_length() - 1


def centered(x: int, m: int) -> int:
    """Representative of x mod 2^m in the half-open range (-2^(m-1), 2^(m-1)]."""
    q = 1 << m
    x %= q
    return x - q if x > q >> 1 else x


def _abs(x: int, q: int) -> int:
    x %= q
    return min(x, q - x)


def _inverse_odd(x: int, m: int) -> int:
    q = 1 << m
    x %= q
    if x % 2 == 0:
        raise NotInvertibleError(f"{x} is even and has no inverse modulo 2^{m}")
    # Newton-Hensel: each step doubles the number of correct low bits.
    y = 1
    bits = 1
    while bits < m:
        y = (y * (2 - x * y)) % q
        bits *= 2
    return y % q


@dataclass(frozen=True)
class Residue:
    """An element of Z_{2^m}."""

    value: int
    m: int

    def __post_init__(self) -> None:
        check_exponent(self.m)
        object.__setattr__(self, "value", self.value % (1 << self.m))

    @property
    def modulus(self) -> int:
        return 1 << self.m

    def _coerce(self, other: Residue | int) -> int:
        if isinstance(other, Residue):
            if other.m != self.m:
                raise ModulusMismatchError(f"cannot combine Z_2^{self.m} with Z_2^{other.m}")
            return other.value
        return int(other)

    def __add__(self, other: Residue | int) -> Residue:
        return Residue(self.value + self._coerce(other), self.m)

    __radd__ = __add__

    def __sub__(self, other: Residue | int) -> Residue:
        return Residue(self.value - self._coerce(other), self.m)

    def __rsub__(self, other: Residue | int) -> Residue:
        return Residue(self._coerce(other) - self.value, self.m)

    def __mul__(self, other: Residue | int) -> Residue:
        return Residue(self.value * self._coerce(other), self.m)

    __rmul__ = __mul__

    def __neg__(self) -> Residue:
        return Residue(-self.value, self.m)

    def __int__(self) -> int:
        return self.value

    def __index__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class Word:
    """A vector of Z_{2^m}^n with canonical integer coordinates."""

    coords: tuple[int, ...]
    m: int

    def __post_init__(self) -> None:
        check_exponent(self.m)
        q = 1 << self.m
        coords = tuple(int(c) % q for c in self.coords)
        if not coords:
            raise ParameterError("a word needs at least one coordinate")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def zero(cls, n: int, m: int) -> Word:
        return cls((0,) * n, m)

    @classmethod
    def unit(cls, n: int, i: int, alpha: int, m: int) -> Word:
        """The cross error ``alpha * e_i`` (0-based coordinate ``i``)."""
        coords = [0] * n
        coords[i] = alpha
        return cls(tuple(coords), m)

    @property
    def n(self) -> int:
        return len(self.coords)

    @property
    def modulus(self) -> int:
        return 1 << self.m

    def element(self, i: int) -> Residue:
        return Residue(self.coords[i], self.m)

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self) -> Iterator[int]:
        return iter(self.coords)

    def __getitem__(self, i: int) -> int:
        return self.coords[i]

    def __add__(self, other: Word) -> Word:
        return word_add(self, other)

    def __sub__(self, other: Word) -> Word:
        return word_sub(self, other)

    def __neg__(self) -> Word:
        return Word(tuple(-c for c in self.coords), self.m)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def signed(self) -> tuple[int, ...]:
        return tuple(centered(c, self.m) for c in self.coords)

    def __str__(self) -> str:
        return "(" + ", ".join(map(str, self.coords)) + ")"


def _check_pair(v: Word, w: Word) -> None:
    if v.m != w.m:
        raise ModulusMismatchError(f"words over Z_2^{v.m} and Z_2^{w.m}")
    if len(v) != len(w):
        raise ModulusMismatchError(f"word lengths differ: {len(v)} != {len(w)}")


def abs_val(x: Residue) -> int:
    """|x| = min(x, 2^m - x); always in [0, 2^(m-1)]."""
    return _abs(x.value, x.modulus)


def inverse_odd(x: Residue) -> Residue:
    return Residue(_inverse_odd(x.value, x.m), x.m)


def lee_weight(v: Word) -> int:
    q = v.modulus
    return sum(_abs(c, q) for c in v.coords)


def lee_distance(v: Word, w: Word) -> int:
    _check_pair(v, w)
    q = v.modulus
    return sum(_abs(a - b, q) for a, b in zip(v.coords, w.coords))


def hamming_distance(v: Word, w: Word) -> int:
    _check_pair(v, w)
    return sum(a != b for a, b in zip(v.coords, w.coords))


def word_add(v: Word, w: Word) -> Word:
    _check_pair(v, w)
    return Word(tuple(a + b for a, b in zip(v.coords, w.coords)), v.m)


def word_sub(v: Word, w: Word) -> Word:
    _check_pair(v, w)
    return Word(tuple(a - b for a, b in zip(v.coords, w.coords)), v.m)


def word_scale(a: Residue | int, v: Word) -> Word:
    if isinstance(a, Residue):
        if a.m != v.m:
            raise ModulusMismatchError(f"scalar in Z_2^{a.m}, word over Z_2^{v.m}")
        a = a.value
    return Word(tuple(a * c for c in v.coords), v.m)


def mat_vec(rows: Iterable[Sequence[int]], v: Word) -> Word:
    """Return ``v H^T``: one entry per row of ``H``, reduced mod 2^m."""
    out = []
    for row in rows:
        if len(row) != len(v):
            raise ModulusMismatchError(f"matrix row of length {len(row)} against word of length {len(v)}")
        out.append(sum(int(h) * c for h, c in zip(row, v.coords)))
    if not out:
        raise ModulusMismatchError("matrix has no rows")
    return Word(tuple(out), v.m)


def parse_word(text: str, m: int) -> Word:
    """Parse a comma-separated list of integers like ``"12,6"``."""
    parts = [p.strip() for p in text.split(",")]
    if not parts or any(p == "" for p in parts):
        raise ParameterError(f"malformed word {text!r}")
    try:
        return Word(tuple(int(p) for p in parts), m)
    except ValueError as exc:
        raise ParameterError(f"malformed word {text!r}") from exc
