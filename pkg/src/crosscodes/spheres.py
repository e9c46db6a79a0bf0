"""Cross distance, cross and Lee spheres, and sphere-packing bounds."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Literal

from .errors import ParameterError
from .residue import Word, _abs, _check_pair, check_exponent

INFINITY = math.inf

Metric = Literal["cross", "lee"]
METRICS: tuple[str, ...] = ("cross", "lee")

# (n, t) pairs of the five standard comparison tables, each over m = 3, 4, 5.
STANDARD_TABLES: tuple[tuple[int, int], ...] = ((2, 2), (2, 3), (3, 2), (3, 3), (4, 2))
STANDARD_EXPONENTS: tuple[int, ...] = (3, 4, 5)


def check_radius(m: int, t: int, *, allow_zero: bool = False) -> None:
    """Reject radii whose values -t..t are not distinct modulo 2^m."""
    check_exponent(m)
    low = 0 if allow_zero else 1
    high = (1 << (m - 1)) - 1
    if not low <= t <= high:
        raise ParameterError(f"radius t={t} outside [{low}, 2^(m-1)-1 = {high}] for m={m}")


def cross_distance(v: Word, w: Word) -> int | float:
    """Lee distance if v, w differ in at most one coordinate, else ``INFINITY``.

    This is an extended semi-metric: the triangle inequality fails.
    """
    _check_pair(v, w)
    diff = [i for i, (a, b) in enumerate(zip(v.coords, w.coords)) if a != b]
    if not diff:
        return 0
    if len(diff) > 1:
        return INFINITY
    i = diff[0]
    return _abs(v.coords[i] - w.coords[i], v.modulus)


def cross_sphere(c: Word, t: int) -> frozenset[Word]:
    check_radius(c.m, t, allow_zero=True)
    out = {c}
    for i in range(c.n):
        for alpha in range(1, t + 1):
            out.add(c + Word.unit(c.n, i, alpha, c.m))
            out.add(c + Word.unit(c.n, i, -alpha, c.m))
    return frozenset(out)


def cross_sphere_volume(n: int, t: int) -> int:
    return 2 * n * t + 1


def lee_sphere_volume(n: int, t: int) -> int:
    """Size of a non-wrapping Lee ball of radius t in n coordinates."""
    return sum(2**i * math.comb(n, i) * math.comb(t, i) for i in range(min(n, t) + 1))


def sphere_volume(n: int, t: int, metric: Metric) -> int:
    if metric == "cross":
        return cross_sphere_volume(n, t)
    if metric == "lee":
        return lee_sphere_volume(n, t)
    raise ParameterError(f"unknown metric {metric!r}")


def _check_bound_args(n: int, m: int, t: int) -> None:
    if n < 1:
        raise ParameterError(f"length n must be >= 1, got {n}")
    check_radius(m, t)


def sphere_packing_bound(n: int, m: int, t: int, metric: Metric) -> int:
    _check_bound_args(n, m, t)
    return (1 << (n * m)) // sphere_volume(n, t, metric)


def linear_sphere_packing_bound(n: int, m: int, t: int, metric: Metric) -> int:
    """Largest power of two strictly below 2^(nm) / volume."""
    _check_bound_args(n, m, t)
    volume = sphere_volume(n, t, metric)
    bound = Fraction(1 << (n * m), volume)
    # volume is odd and > 1, so the bound itself is never a power of two
    assert volume % 2 == 1 and volume > 1
    assert bound.denominator != 1 or bound.numerator & (bound.numerator - 1)
    power = 1
    while 2 * power < bound:
        power *= 2
    return power


@dataclass(frozen=True)
class BoundRow:
    q: int
    lee_bound: int
    cross_bound: int
    lee_linear_bound: int
    cross_linear_bound: int

    @property
    def m(self) -> int:
        return self.q.bit_length() - 1

    def cells(self) -> tuple[int, int, int, int]:
        return (self.lee_bound, self.cross_bound, self.lee_linear_bound, self.cross_linear_bound)

    def as_dict(self) -> dict[str, int]:
        return {"m": self.m, **asdict(self)}


def bound_table(n: int, t: int, m_list: list[int] | tuple[int, ...]) -> list[BoundRow]:
    if not m_list:
        raise ParameterError("need at least one modulus exponent")
    rows = []
    for m in m_list:
        rows.append(
            BoundRow(
                q=1 << m,
                lee_bound=sphere_packing_bound(n, m, t, "lee"),
                cross_bound=sphere_packing_bound(n, m, t, "cross"),
                lee_linear_bound=linear_sphere_packing_bound(n, m, t, "lee"),
                cross_linear_bound=linear_sphere_packing_bound(n, m, t, "cross"),
            )
        )
    return rows


@dataclass(frozen=True)
class PerfectCodeWitness:
    """Why no code in Z_{2^m}^n can be perfect for cross errors of magnitude t."""

    impossible: bool
    volume: int
    space_size: int
    remainder: int

    def __bool__(self) -> bool:
        return self.impossible

    def __str__(self) -> str:
        return f"{self.volume} does not divide {self.space_size} (remainder {self.remainder})"


def perfect_code_impossible(n: int, m: int, t: int) -> PerfectCodeWitness:
    if n < 1 or t < 1:
        raise ParameterError("need n >= 1 and t >= 1")
    check_exponent(m)
    volume = cross_sphere_volume(n, t)
    space = 1 << (n * m)
    remainder = space % volume
    # an odd number > 1 never divides a power of two
    return PerfectCodeWitness(remainder != 0, volume, space, remainder)
