"""Syndrome decoders for single cross errors.

A cross error ``alpha * e_i`` has syndrome ``alpha`` times column ``i`` of H,
so decoding amounts to recognising scaled columns. The structured decoders
exploit the shape of each construction; :func:`decode_generic` searches all
columns and magnitudes and serves as the reference.

The structured decoders read the quotient ``s1 / 2^(m-k-2)`` as a signed
residue and reject magnitudes above t, so every ``Corrected`` outcome is a
cross error the code actually promises to fix.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass

from .constructions import LinearCode, ParityCheckMatrix, construct_cor5, construct_cor12, construct_thm9, magnitude_exponent
from .errors import AmbiguousSyndromeError, ModulusMismatchError
from .residue import Word, centered

Decoder = Callable[[Word], "DecodeOutcome"]


@dataclass(frozen=True)
class DecodeOutcome:
    received: Word
    codeword: Word | None = None
    error: Word | None = None

    @property
    def corrected(self) -> bool:
        return self.codeword is not None

    @classmethod
    def failure(cls, received: Word) -> DecodeOutcome:
        return cls(received)

    @classmethod
    def from_error(cls, received: Word, error: Word) -> DecodeOutcome:
        return cls(received, received - error, error)

    def __str__(self) -> str:
        if not self.corrected:
            return f"Failure(r={self.received})"
        return f"Corrected(c={self.codeword}, e={self.error})"


def _check_word(r: Word, n: int, m: int) -> None:
    if len(r) != n or r.m != m:
        raise ModulusMismatchError(f"expected a word of Z_2^{m}^{n}, got length {len(r)} over Z_2^{r.m}")


def _magnitude(s1: int, shift: int, k: int, t: int) -> int | None:
    """Signed ``s1 / 2^shift`` if exact and at most t in absolute value."""
    if s1 % (1 << shift):
        return None
    alpha = centered(s1 >> shift, k + 2)
    return alpha if abs(alpha) <= t else None


def _stepped_decode(r: Word, branches: list[bool], shift: int, k: int, t: int, s1: int) -> DecodeOutcome:
    # the first matching branch decides; later branches are never consulted
    for i, hit in enumerate(branches):
        if hit:
            alpha = _magnitude(s1, shift, k, t)
            if alpha is None:
                return DecodeOutcome.failure(r)
            return DecodeOutcome.from_error(r, Word.unit(len(r), i, alpha, r.m))
    return DecodeOutcome.failure(r)


def decode_cor5(r: Word, m: int, t: int) -> DecodeOutcome:
    _check_word(r, 2, m)
    H = construct_cor5(m, t).H
    k = magnitude_exponent(t)
    s1, s2 = H.syndrome(r)
    q = 1 << m
    return _stepped_decode(r, [s2 == 0, (2 * s1) % q == s2], m - k - 2, k, t, s1)


def decode_cor12(r: Word, m: int, t: int) -> DecodeOutcome:
    _check_word(r, 3, m)
    H = construct_cor12(m, t).H
    k = magnitude_exponent(t)
    s1, s2 = H.syndrome(r)
    q = 1 << m
    branches = [s2 == 0, (2 * s1) % q == s2, ((2 * t + 1) * s1) % q == s2]
    return _stepped_decode(r, branches, m - k - 2, k, t, s1)


def decode_thm9_t2(r: Word, m: int) -> DecodeOutcome:
    """Decoder for the single-row t = 2 code with H = [-3 * 2^(m-4), 2^(m-4)].

    A unit error ``alpha`` in the first coordinate gives ``s = -3 alpha 2^(m-4)``,
    so a syndrome ``(-1)^i 3 2^j 2^(m-4)`` means ``alpha = -(-1)^i 2^j``.
    """
    _check_word(r, 2, m)
    H = construct_thm9(m, 2).H
    (s,) = H.syndrome(r)
    q = 1 << m
    unit = 1 << (m - 4)
    if s == 0:
        return DecodeOutcome.from_error(r, Word.zero(2, m))
    for i in (0, 1):
        for j in (0, 1):
            if s == ((-1) ** i * 3 * 2**j * unit) % q:
                return DecodeOutcome.from_error(r, Word((-((-1) ** i) * 2**j, 0), m))
    for i in (0, 1):
        for j in (0, 1):
            if s == ((-1) ** i * 2**j * unit) % q:
                return DecodeOutcome.from_error(r, Word((0, (-1) ** i * 2**j), m))
    return DecodeOutcome.failure(r)


def decode_generic(H: ParityCheckMatrix, r: Word, t: int) -> DecodeOutcome:
    """Match the syndrome against every ``alpha`` times every column, ``|alpha| <= t``."""
    s = H.syndrome(r)
    if s.is_zero():
        return DecodeOutcome.from_error(r, Word.zero(H.n, H.m))
    q = 1 << H.m
    matches = []
    for i in range(H.n):
        col = H.column(i)
        for alpha in range(-t, t + 1):
            if alpha and all((alpha * h - x) % q == 0 for h, x in zip(col, s.coords)):
                matches.append((i, alpha))
    if not matches:
        return DecodeOutcome.failure(r)
    if len(matches) > 1:
        raise AmbiguousSyndromeError(f"syndrome {s} matches cross errors {matches}")
    i, alpha = matches[0]
    return DecodeOutcome.from_error(r, Word.unit(H.n, i, alpha, H.m))


def generic_decoder(code: LinearCode) -> Decoder:
    return lambda r: decode_generic(code.H, r, code.t)


def decoder_for(code: LinearCode) -> Decoder:
    """The structured decoder matching ``code``'s construction, else the generic one."""
    name, m, t = code.spec.construction, code.m, code.t
    if name == "cor5":
        return lambda r: decode_cor5(r, m, t)
    if name == "cor12":
        return lambda r: decode_cor12(r, m, t)
    if name == "thm9" and t == 2:
        return lambda r: decode_thm9_t2(r, m)
    return generic_decoder(code)
