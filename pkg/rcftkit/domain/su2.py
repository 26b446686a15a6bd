"""SU(2) at level k: fusion rules, dimensions, twists and the S-matrix."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from rcftkit.domain.fusion import DimensionVector, make_ring
from rcftkit.domain.modular_data import (
    ModularData,
    assemble,
    check_sl2z,
    verlinde,
)


class ModelConstructionError(ValueError):
    """A shipped model failed its own validation."""


@dataclass(frozen=True, slots=True)
class Su2Level:
    """SU(2)_k with sectors λ_0 .. λ_k, all self-conjugate."""

    k: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError(f"SU(2) level must be positive, got {self.k}")

    @property
    def n(self) -> int:
        return self.k + 1

    @property
    def coxeter(self) -> int:
        return self.k + 2

    def names(self) -> tuple[str, ...]:
        return tuple(f"λ_{spin}" for spin in range(self.n))


def su2_fusion(k: int, a: int, b: int) -> dict[int, int]:
    """``λ_a * λ_b = λ_|a-b| + λ_|a-b|+2 + ... + λ_min(a+b, 2k-a-b)``."""
    level = Su2Level(k)
    if not (0 <= a <= level.k and 0 <= b <= level.k):
        raise ValueError(f"labels {a}, {b} are outside 0..{k}")
    top = min(a + b, 2 * k - a - b)
    return {c: 1 for c in range(abs(a - b), top + 1, 2)}


def su2_fusion_tensor(k: int) -> np.ndarray:
    n = k + 1
    N = np.zeros((n, n, n), dtype=np.int64)
    for a in range(n):
        for b in range(n):
            for c in su2_fusion(k, a, b):
                N[a, b, c] = 1
    return N


def su2_central_charge(k: int) -> Fraction:
    return Fraction(3 * k, k + 2)


def su2_dimensions(k: int) -> np.ndarray:
    """``d_l = sin((l+1) pi / (k+2)) / sin(pi / (k+2))``."""
    h = k + 2
    numerators = np.sin(np.arange(1, k + 2) * math.pi / h)
    return numerators / math.sin(math.pi / h)


def su2_twist(k: int, spin: int) -> complex:
    """``exp(pi i l (l+2) / (2k+4))``."""
    return complex(np.exp(1j * math.pi * spin * (spin + 2) / (2 * k + 4)))


def su2_s_matrix(k: int) -> np.ndarray:
    """``S[l][m] = sqrt(2/(k+2)) sin((l+1)(m+1) pi / (k+2))``."""
    h = k + 2
    index = np.arange(1, k + 2)
    return math.sqrt(2 / h) * np.sin(np.outer(index, index) * math.pi / h)


@lru_cache(maxsize=64)
def su2_data(k: int) -> ModularData:
    """Validated modular data of SU(2)_k."""
    level = Su2Level(k)
    N = su2_fusion_tensor(k)
    ring = make_ring(N, list(range(level.n)), level.names())
    d = su2_dimensions(k)
    d.setflags(write=False)
    dims = DimensionVector(d, float(np.sum(d**2)))
    omega = np.array([su2_twist(k, spin) for spin in range(level.n)])
    md = assemble(
        f"SU(2)_{k}", ring, dims, omega, su2_s_matrix(k), su2_central_charge(k)
    )
    report = check_sl2z(md)
    if not report.passed:
        raise ModelConstructionError(f"SU(2)_{k} fails {report.failures()}")
    if not np.array_equal(verlinde(md.S).N, N):
        raise ModelConstructionError(f"SU(2)_{k} Verlinde tensor breaks its rules")
    return md
