"""Moonshine q-series: sigma_3, E4, the discriminant, j, J and characters.

Also the Monster order and McKay-style decompositions of J coefficients.
"""

from __future__ import annotations

import math
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
from fractions import Fraction

from rcftkit.domain.qseries import QSeries, series_invert, series_pow

J_CONSTANT = 744
E4_SCALE = 240
DEFAULT_MCKAY_BOUND = 10

# Prime factorisation of the Monster group's order.
MONSTER_ORDER_FACTORS = (
    (2, 46),
    (3, 20),
    (5, 9),
    (7, 6),
    (11, 2),
    (13, 3),
    (17, 1),
    (19, 1),
    (23, 1),
    (29, 1),
    (31, 1),
    (41, 1),
    (47, 1),
    (59, 1),
    (71, 1),
)


class MoonshineError(ValueError):
    """Base class for moonshine input errors."""


def sigma3(n: int) -> int:
    """Return the sum of the cubes of the positive divisors of ``n``."""
    if n < 1:
        raise MoonshineError(f"sigma3 needs a positive integer, got {n}")
    total = 0
    root = math.isqrt(n)
    for d in range(1, root + 1):
        if n % d == 0:
            total += d**3
            partner = n // d
            if partner != d:
                total += partner**3
    return total


def eisenstein_e4(order: int) -> QSeries:
    """``1 + 240 sum sigma3(n) q^n`` known below ``order``."""
    coeffs = [1] + [E4_SCALE * sigma3(n) for n in range(1, max(order, 1))]
    return QSeries.from_coefficients(coeffs[: max(order, 0)], 0, order)


def euler_product(order: int) -> QSeries:
    """``prod_{n>0} (1 - q^n)`` known below ``order``."""
    width = max(order, 0)
    coeffs = [0] * width
    if width:
        coeffs[0] = 1
    for n in range(1, width):
        # Multiply in place by (1 - q^n), high exponents first.
        for e in range(width - 1, n - 1, -1):
            coeffs[e] -= coeffs[e - n]
    return QSeries(0, tuple(coeffs), order)


def discriminant(order: int) -> QSeries:
    """``q prod (1 - q^n)^24`` known below ``order``."""
    return series_pow(euler_product(order - 1), 24).shift(1)


def j_series(n_max: int) -> QSeries:
    """Return j(q) with exact coefficients for q^-1 .. q^n_max."""
    if n_max < -1:
        raise MoonshineError(f"n_max must be at least -1, got {n_max}")
    order = n_max + 1
    numerator = series_pow(eisenstein_e4(order + 1), 3)
    return (numerator * series_invert(discriminant(order + 2))).truncate(order)


def J_series(n_max: int) -> QSeries:
    """Return J = j - 744; its constant term vanishes."""
    return j_series(n_max) - J_CONSTANT


@dataclass(frozen=True, slots=True)
class CharacterSpec:
    """Graded dimensions of a module with lowest energy ``h`` and charge ``c``."""

    dims: tuple[int, ...]
    h: Fraction
    c: Fraction

    def __post_init__(self) -> None:
        if not self.dims:
            raise MoonshineError("a character needs at least one graded dimension")
        if any(d < 0 for d in self.dims):
            raise MoonshineError("graded dimensions must be nonnegative")
        object.__setattr__(self, "dims", tuple(int(d) for d in self.dims))
        object.__setattr__(self, "h", Fraction(self.h))
        object.__setattr__(self, "c", Fraction(self.c))

    @property
    def offset(self) -> Fraction:
        return self.h - self.c / 24


@dataclass(frozen=True, slots=True)
class Character:
    """``q**offset * series``, with the rational offset kept exactly."""

    series: QSeries
    offset: Fraction

    def as_laurent(self) -> QSeries:
        """Fold an integral offset into the series exponents."""
        if self.offset.denominator != 1:
            raise MoonshineError(
                f"offset {self.offset} is not integral; keep it as metadata"
            )
        return self.series.shift(int(self.offset))


def character(spec: CharacterSpec, n_max: int) -> Character:
    """Return ``sum dims[n] q^(n + h - c/24)`` through grade ``n_max``."""
    if n_max < 0:
        raise MoonshineError(f"n_max must be nonnegative, got {n_max}")
    order = min(n_max + 1, len(spec.dims))
    series = QSeries.from_coefficients(spec.dims[:order], 0, order)
    return Character(series, spec.offset)


def monster_order() -> int:
    """Return the order of the Monster group."""
    return math.prod(p**e for p, e in MONSTER_ORDER_FACTORS)


@dataclass(frozen=True, slots=True)
class McKayReport:
    """Every decomposition of ``coeff`` into irreducible dimensions within ``bound``."""

    coeff: int
    bound: int
    decompositions: tuple[dict[int, int], ...] = field(default_factory=tuple)

    @property
    def found(self) -> bool:
        return bool(self.decompositions)


def _decompose(
    remaining: int, dims: Sequence[int], index: int, bound: int, chosen: dict[int, int]
) -> Iterator[dict[int, int]]:
    dim = dims[index]
    if index == 0:
        if remaining % dim == 0 and remaining // dim <= bound:
            result = dict(chosen)
            if remaining:
                result[dim] = remaining // dim
            yield result
        return
    # Greedy first: try the largest multiplicity of the largest dimension.
    for mult in range(min(bound, remaining // dim), -1, -1):
        if mult:
            chosen[dim] = mult
        yield from _decompose(remaining - mult * dim, dims, index - 1, bound, chosen)
        chosen.pop(dim, None)


def mckay_check(
    coeff: int, irrep_dims: Sequence[int], bound: int = DEFAULT_MCKAY_BOUND
) -> McKayReport:
    """Search nonnegative combinations of ``irrep_dims`` summing to ``coeff``."""
    dims = [int(d) for d in irrep_dims]
    if not dims or dims[0] != 1:
        raise MoonshineError("irrep dimensions must start with the trivial 1")
    if any(b <= a for a, b in zip(dims, dims[1:])):
        raise MoonshineError("irrep dimensions must be strictly ascending")
    if coeff < 0 or bound < 0:
        raise MoonshineError("coefficient and bound must be nonnegative")
    search = _decompose(coeff, dims, len(dims) - 1, bound, {})
    found = tuple(dict(sorted(d.items())) for d in search)
    return McKayReport(coeff, bound, found)
