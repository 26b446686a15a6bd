"""Local-extension candidates read off invariants, and index bookkeeping.

Every filter here is a necessary condition only. Whether a candidate really
extends the theory depends on data that modular data alone does not carry.
"""

from __future__ import annotations

import math
from collections.abc import Mapping
from dataclasses import dataclass
from typing import Protocol

import numpy as np

from rcftkit.domain.invariants import InvariantMatrix

TWIST_TOLERANCE = 1e-9
HOLOMORPHIC_TOLERANCE = 1e-9
AMBICHIRAL_TOLERANCE = 1e-6
INDEX_TOLERANCE = 1e-9


class ExtensionError(ValueError):
    """Invalid input to an extension or index computation."""


class SectorSystem(Protocol):
    """What the locality filter needs from a theory."""

    @property
    def n(self) -> int: ...

    @property
    def omega(self) -> np.ndarray: ...

    @property
    def d(self) -> np.ndarray: ...

    def conj(self, label: int) -> int: ...

    def fuse(self, a: int, b: int) -> dict[int, int]: ...


@dataclass(frozen=True, eq=False)
class ThetaCandidate:
    """``theta = sum n_a a`` with its index ``sum n_a d_a``."""

    sectors: Mapping[int, int]
    d_theta: float
    source: InvariantMatrix | None = None

    def __post_init__(self) -> None:
        if self.sectors.get(0, 0) < 1:
            raise ExtensionError("theta must contain the vacuum")
        if any(mult <= 0 for mult in self.sectors.values()):
            raise ExtensionError("theta multiplicities must be positive")
        if self.d_theta < 1 - INDEX_TOLERANCE:
            raise ExtensionError(f"theta dimension {self.d_theta} is below 1")
        object.__setattr__(self, "sectors", dict(sorted(self.sectors.items())))

    def support(self) -> tuple[int, ...]:
        return tuple(self.sectors)

    def multiplicity(self, label: int) -> int:
        return self.sectors.get(label, 0)

    def key(self) -> tuple[tuple[int, int], ...]:
        return tuple(self.sectors.items())


def theta_from_sectors(
    sectors: Mapping[int, int],
    system: SectorSystem,
    source: InvariantMatrix | None = None,
) -> ThetaCandidate:
    d_theta = float(sum(mult * system.d[label] for label, mult in sectors.items()))
    return ThetaCandidate(dict(sectors), d_theta, source)


def theta_of(invariant: InvariantMatrix, system: SectorSystem) -> ThetaCandidate:
    """The vacuum row of ``Z`` as a multiset of sectors of ``system``."""
    return theta_from_sectors(invariant.vacuum_row(), system, invariant)


@dataclass(frozen=True, slots=True)
class LocalityReport:
    vacuum_once: bool
    self_conjugate: bool
    trivial_twists: bool
    fusion_closure: bool
    twist_residual: float

    @property
    def passed(self) -> bool:
        return (
            self.vacuum_once
            and self.self_conjugate
            and self.trivial_twists
            and self.fusion_closure
        )

    def verdicts(self) -> dict[str, bool]:
        return {
            "vacuum_once": self.vacuum_once,
            "self_conjugate": self.self_conjugate,
            "trivial_twists": self.trivial_twists,
            "fusion_closure_consistency": self.fusion_closure,
        }


def check_local_theta(
    theta: ThetaCandidate, system: SectorSystem, tolerance: float = TWIST_TOLERANCE
) -> LocalityReport:
    """Necessary conditions for ``theta`` to come from a local extension.

    Requires the vacuum once, ``n_conj(a) = n_a``, ``omega_a = 1`` on the
    support and ``theta * theta`` containing ``theta``.
    """
    sectors = theta.sectors
    self_conjugate = all(
        theta.multiplicity(system.conj(label)) == mult
        for label, mult in sectors.items()
    )
    residual = max(abs(complex(system.omega[label]) - 1) for label in sectors)
    squared: dict[int, int] = {}
    for a, na in sectors.items():
        for b, nb in sectors.items():
            for c, mult in system.fuse(a, b).items():
                squared[c] = squared.get(c, 0) + na * nb * mult
    closure = all(squared.get(label, 0) >= mult for label, mult in sectors.items())
    return LocalityReport(
        vacuum_once=theta.multiplicity(0) == 1,
        self_conjugate=self_conjugate,
        trivial_twists=residual < tolerance,
        fusion_closure=closure,
        twist_residual=float(residual),
    )


@dataclass(frozen=True, slots=True)
class MuLedger:
    """The mu-index of a net next to the index of the inclusion it came from."""

    mu: float
    index: float = 1.0

    def __post_init__(self) -> None:
        if self.mu < 1 - HOLOMORPHIC_TOLERANCE:
            raise ExtensionError(f"mu-index {self.mu} is below 1")
        if self.index < 1 - INDEX_TOLERANCE:
            raise ExtensionError(f"index {self.index} is below 1")

    @property
    def holomorphic(self) -> bool:
        return abs(self.mu - 1) < HOLOMORPHIC_TOLERANCE


def _check_index(index: float) -> None:
    if index < 1 - INDEX_TOLERANCE:
        raise ExtensionError(f"an inclusion index is at least 1, got {index}")


def subnet_mu(mu_ext: float, index: float) -> float:
    """mu of a subnet ``B`` of ``A``: ``mu_B = mu_A [A:B]^2``."""
    _check_index(index)
    return mu_ext * index * index


def extension_mu(mu_sub: float, index: float) -> float:
    """mu of an extension ``A`` of ``B``: ``mu_A = mu_B / [A:B]^2``."""
    _check_index(index)
    return mu_sub / (index * index)


@dataclass(frozen=True, slots=True)
class AmbichiralVerdict:
    d1: float
    d2: float
    index: float
    residual: float

    @property
    def passed(self) -> bool:
        return self.residual < AMBICHIRAL_TOLERANCE * self.d1


def ambichiral_check(d1: float, d2: float, index: float) -> AmbichiralVerdict:
    """Test ``d2 [M:N]^2 = d1`` to relative tolerance."""
    if min(d1, d2, index) <= 0:
        raise ExtensionError("ambichiral inputs must be positive")
    return AmbichiralVerdict(d1, d2, index, abs(d2 * index * index - d1))


def jones_index_values(n_max: int) -> tuple[float, ...]:
    """``4 cos^2(pi/n)`` for ``n = 3 .. n_max``."""
    if n_max < 3:
        raise ExtensionError(f"n_max must be at least 3, got {n_max}")
    return tuple(4 * math.cos(math.pi / n) ** 2 for n in range(3, n_max + 1))


@dataclass(frozen=True, slots=True)
class IndexVerdict:
    value: float
    admissible: bool
    n: int | None = None
    continuum: bool = False


def is_admissible_index(
    value: float, tolerance: float = INDEX_TOLERANCE
) -> IndexVerdict:
    """Membership in ``{4 cos^2(pi/n) : n >= 3}`` or ``[4, inf)``."""
    if value >= 4 - tolerance:
        return IndexVerdict(value, True, continuum=True)
    if value < 1 - tolerance:
        return IndexVerdict(value, False)
    # 4 cos^2(pi/n) = x  =>  n = pi / acos(sqrt(x) / 2)
    n = round(math.pi / math.acos(min(1.0, math.sqrt(max(value, 0.0)) / 2)))
    if n >= 3 and abs(4 * math.cos(math.pi / n) ** 2 - value) < tolerance:
        return IndexVerdict(value, True, n)
    return IndexVerdict(value, False)
