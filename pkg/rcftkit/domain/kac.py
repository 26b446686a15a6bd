"""The Kac table of the c < 1 Virasoro minimal models.

Sectors are Kac pairs ``(p, q)`` with ``1 <= p <= m-1`` and ``1 <= q <= m``,
identified under ``(p, q) ~ (m-p, m+1-q)``. The canonical representative has
the smaller ``p`` (ties: smaller ``q``); sectors are ordered
lexicographically, so ``(1, 1)`` is the vacuum.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

import numpy as np

KacLabel = tuple[int, int]


class KacError(ValueError):
    """A Kac label or model index is invalid."""


@dataclass(frozen=True)
class MinimalModelIndex:
    """The minimal model with central charge ``1 - 6 / (m (m+1))``."""

    m: int

    def __post_init__(self) -> None:
        if self.m < 3:
            raise KacError(f"minimal models need m >= 3, got {self.m}")

    def reflect(self, label: KacLabel) -> KacLabel:
        p, q = label
        return self.m - p, self.m + 1 - q

    def canonical(self, label: KacLabel) -> KacLabel:
        p, q = label
        if not (1 <= p <= self.m - 1 and 1 <= q <= self.m):
            raise KacError(f"{label} is outside the Kac table of m={self.m}")
        return min(label, self.reflect(label))

    @cached_property
    def labels(self) -> tuple[KacLabel, ...]:
        found = {
            self.canonical((p, q))
            for p in range(1, self.m)
            for q in range(1, self.m + 1)
        }
        return tuple(sorted(found))

    @cached_property
    def _positions(self) -> dict[KacLabel, int]:
        return {label: i for i, label in enumerate(self.labels)}

    @property
    def n(self) -> int:
        return len(self.labels)

    def index_of(self, label: KacLabel) -> int:
        return self._positions[self.canonical(label)]

    def names(self) -> tuple[str, ...]:
        return tuple(f"λ_({p},{q})" for p, q in self.labels)


def central_charge(m: int) -> Fraction:
    if m < 2:
        raise KacError(f"central charge formula needs m >= 2, got {m}")
    return 1 - Fraction(6, m * (m + 1))


@dataclass(frozen=True, slots=True)
class CentralChargeVerdict:
    """Membership of c in the unitary set: discrete ``m``, continuum or neither."""

    c: Fraction | float
    kind: str
    m: int | None = None

    @property
    def allowed(self) -> bool:
        return self.kind != "rejected"


def allowed_central_charge(
    c: Fraction | float, tolerance: float = 1e-9
) -> CentralChargeVerdict:
    """Place ``c`` in ``{1 - 6/m(m+1) : m >= 3}`` or ``[1, inf)``."""
    value = float(c)
    exact_input = isinstance(c, Fraction)
    if (exact_input and c >= 1) or (not exact_input and value >= 1 - tolerance):
        return CentralChargeVerdict(c, "continuum")
    if value <= 0:
        return CentralChargeVerdict(c, "rejected")
    # 1 - c = 6 / (m (m+1))  =>  m = (-1 + sqrt(1 + 24 / (1 - c))) / 2
    m = round((-1 + math.sqrt(1 + 24 / (1 - value))) / 2)
    if m >= 3:
        exact = central_charge(m)
        if exact_input:
            if c == exact:
                return CentralChargeVerdict(c, "discrete", m)
        elif abs(float(exact) - value) < tolerance:
            return CentralChargeVerdict(c, "discrete", m)
    return CentralChargeVerdict(c, "rejected")


def conformal_weight(m: int, label: KacLabel) -> Fraction:
    """``h = (((m+1) p - m q)^2 - 1) / (4 m (m+1))``."""
    p, q = label
    return Fraction(((m + 1) * p - m * q) ** 2 - 1, 4 * m * (m + 1))


def minimal_twist(m: int, label: KacLabel) -> complex:
    """Statistics phase of ``(p, q)``; equals ``exp(2 pi i h)``.

    Evaluated as ``((m+1)p^2 - m q^2 - 1 + m(m+1)(p-q)^2) / (4 m (m+1))`` turns.
    """
    p, q = label
    numerator = (m + 1) * p * p - m * q * q - 1 + m * (m + 1) * (p - q) ** 2
    phase = Fraction(numerator, 4 * m * (m + 1)) % 1
    return complex(np.exp(2j * math.pi * float(phase)))


def kac_dimension(m: int, label: KacLabel) -> float:
    """Product of the SU(2)_{m-2} and SU(2)_{m-1} dimensions of ``p`` and ``q``."""
    p, q = label
    left = math.sin(math.pi * p / m) / math.sin(math.pi / m)
    right = math.sin(math.pi * q / (m + 1)) / math.sin(math.pi / (m + 1))
    return left * right


def mu_index_formula(m: int) -> float:
    """``m (m+1) / (8 sin^2(pi/m) sin^2(pi/(m+1)))``."""
    s1 = math.sin(math.pi / m)
    s2 = math.sin(math.pi / (m + 1))
    return m * (m + 1) / (8 * s1 * s1 * s2 * s2)


def _channels(a: int, b: int, top_sum: int) -> range:
    """``r = |a-b|+1, |a-b|+3, ..., min(a+b-1, top_sum-a-b-1)``."""
    return range(abs(a - b) + 1, min(a + b - 1, top_sum - a - b - 1) + 1, 2)


def minimal_fusion(m: int, left: KacLabel, right: KacLabel) -> dict[KacLabel, int]:
    """Fusion of two Kac sectors, folded onto canonical labels."""
    index = MinimalModelIndex(m)
    (p, q), (p2, q2) = index.canonical(left), index.canonical(right)
    products: Counter[KacLabel] = Counter()
    for r in _channels(p, p2, 2 * m):
        for s in _channels(q, q2, 2 * (m + 1)):
            products[index.canonical((r, s))] += 1
    return dict(sorted(products.items()))


def minimal_fusion_tensor(m: int) -> np.ndarray:
    index = MinimalModelIndex(m)
    n = index.n
    N = np.zeros((n, n, n), dtype=np.int64)
    for a, left in enumerate(index.labels):
        for b, right in enumerate(index.labels[a:], start=a):
            for label, mult in minimal_fusion(m, left, right).items():
                c = index.index_of(label)
                N[a, b, c] = N[b, a, c] = mult
    return N


@dataclass(frozen=True, eq=False)
class KacSectorSystem:
    """Twists, dimensions and fusion of a minimal model from closed forms.

    Used where building the full S-matrix is too expensive; satisfies the
    same sector-system interface as ModularData.
    """

    index: MinimalModelIndex
    omega: np.ndarray = field(init=False)
    d: np.ndarray = field(init=False)

    def __post_init__(self) -> None:
        m = self.index.m
        omega = np.array([minimal_twist(m, label) for label in self.index.labels])
        d = np.array([kac_dimension(m, label) for label in self.index.labels])
        object.__setattr__(self, "omega", omega)
        object.__setattr__(self, "d", d)

    @property
    def n(self) -> int:
        return self.index.n

    def conj(self, label: int) -> int:
        return label

    def fuse(self, a: int, b: int) -> dict[int, int]:
        labels = self.index.labels
        product = minimal_fusion(self.index.m, labels[a], labels[b])
        return {self.index.index_of(c): mult for c, mult in product.items()}
