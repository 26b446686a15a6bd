"""Modular data of a fusion ring: S and T, twists, the Y-matrix, degeneracy,
the Verlinde formula and the SL(2,Z) relations.

S is normalised as ``Y / sqrt(w)``, which makes the vacuum row ``d / sqrt(w)``
and S unitary. T is ``phase * diag(omega)`` where the phase is a cube root of
``sigma / |sigma|``; the cube root and the orientation of omega are chosen by
testing ``(ST)^3 = S^2``.
"""

from __future__ import annotations

import cmath
import logging
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from rcftkit.domain.fusion import DimensionVector, FusionRing, make_ring

logger = logging.getLogger(__name__)

RELATION_TOLERANCE = 1e-9
ROUNDING_TOLERANCE = 1e-6
CONDITION_LIMIT = 1e9


class ModularDataError(ValueError):
    """Base class for modular-data errors."""


class VerlindeError(ModularDataError):
    """The Verlinde formula did not produce nonnegative integers."""


class ConventionError(ModularDataError):
    """No cube-root / orientation choice satisfies ``(ST)^3 = S^2``."""


class DegeneracyMismatchError(ModularDataError):
    """The Y-criterion and the invertibility test disagree."""


@dataclass(frozen=True, eq=False)
class ModularData:
    """A fusion ring with its dimensions, twists, S, T and Gauss sum."""

    name: str
    ring: FusionRing
    dims: DimensionVector
    omega: np.ndarray
    S: np.ndarray
    T: np.ndarray
    sigma: complex
    central_charge: Fraction | None = field(default=None)

    @property
    def n(self) -> int:
        return self.ring.n

    @property
    def d(self) -> np.ndarray:
        return self.dims.d

    @property
    def w(self) -> float:
        return self.dims.w

    def conj(self, label: int) -> int:
        return self.ring.conj[label]

    def fuse(self, a: int, b: int) -> dict[int, int]:
        return self.ring.fuse(a, b)


def gauss_sum(d: np.ndarray, omega: np.ndarray) -> complex:
    """Return ``sigma = sum d^2 / omega``."""
    return complex(np.sum(d**2 / omega))


def _relation_residual(S: np.ndarray, T: np.ndarray) -> float:
    st = S @ T
    return float(np.max(np.abs(st @ st @ st - S @ S)))


def choose_t_matrix(
    S: np.ndarray, omega: np.ndarray, sigma: complex, tolerance: float
) -> np.ndarray:
    """Pick T among the six cube-root / orientation choices, in fixed order."""
    phase = sigma / abs(sigma)
    principal = cmath.exp(1j * cmath.phase(phase) / 3)
    for twists in (omega, np.conj(omega)):
        for k in range(3):
            anomaly = principal * cmath.exp(2j * cmath.pi * k / 3)
            T = np.diag(anomaly * twists)
            if _relation_residual(S, T) < tolerance:
                logger.debug(
                    "T convention: root %d, inverted twists %s", k, twists is not omega
                )
                return T
    raise ConventionError(
        "no cube root of sigma/|sigma| with either twist orientation "
        "gives (ST)^3 = S^2"
    )


def assemble(
    name: str,
    ring: FusionRing,
    dims: DimensionVector,
    omega: np.ndarray,
    S: np.ndarray,
    central_charge: Fraction | None = None,
    tolerance: float = RELATION_TOLERANCE,
) -> ModularData:
    """Combine the pieces into ModularData, choosing the T convention."""
    omega = np.asarray(omega, dtype=complex)
    S = np.asarray(S, dtype=complex)
    sigma = gauss_sum(dims.d, omega)
    T = choose_t_matrix(S, omega, sigma, tolerance)
    for array in (omega, S, T):
        array.setflags(write=False)
    return ModularData(name, ring, dims, omega, S, T, sigma, central_charge)


def trivial_data() -> ModularData:
    """The one-sector theory: S = T = (1)."""
    ring = make_ring([[[1]]], [0], ["λ_0"])
    dims = DimensionVector(np.ones(1), 1.0)
    return assemble("trivial", ring, dims, np.ones(1), np.ones((1, 1)), Fraction(0))


def tensor_product(left: ModularData, right: ModularData) -> ModularData:
    """The product theory; sector ``(a, b)`` has index ``a * right.n + b``."""
    n = left.n * right.n
    N = np.einsum("ace,bdf->abcdef", left.ring.N, right.ring.N).reshape(n, n, n)
    conj = [
        left.conj(a) * right.n + right.conj(b)
        for a in range(left.n)
        for b in range(right.n)
    ]
    names = [f"{x}⊗{y}" for x in left.ring.names for y in right.ring.names]
    ring = make_ring(N, conj, names)
    d = np.kron(left.d, right.d)
    d.setflags(write=False)
    dims = DimensionVector(d, float(np.sum(d**2)))
    omega = np.kron(left.omega, right.omega)
    S = np.kron(left.S, right.S)
    T = np.kron(left.T, right.T)
    sigma = left.sigma * right.sigma
    charge = None
    if left.central_charge is not None and right.central_charge is not None:
        charge = left.central_charge + right.central_charge
    name = f"{left.name}⊗{right.name}"
    return ModularData(name, ring, dims, omega, S, T, sigma, charge)


def twists_from_T(T: np.ndarray) -> tuple[np.ndarray, complex]:
    """Return ``(omega, anomaly)`` with ``omega = diag(T) / T[0][0]``."""
    diagonal = np.diag(np.asarray(T, dtype=complex))
    anomaly = complex(diagonal[0])
    return diagonal / anomaly, anomaly


def y_matrix(md: ModularData) -> np.ndarray:
    """Return the Hopf-link matrix ``Y = sqrt(w) S``; ``Y[0] = d``."""
    return np.sqrt(md.w) * md.S


@dataclass(frozen=True, eq=False)
class VerlindeResult:
    """Rounded structure constants and the worst pre-rounding distance."""

    N: np.ndarray
    residual: float


def verlinde(S: np.ndarray, tolerance: float = ROUNDING_TOLERANCE) -> VerlindeResult:
    """``N[a][b][c] = sum_s S[a][s] S[b][s] conj(S[c][s]) / S[0][s]``."""
    S = np.asarray(S, dtype=complex)
    n = S.shape[0]
    vacuum = S[0]
    if np.min(np.abs(vacuum)) < tolerance:
        raise VerlindeError("S has a vanishing vacuum-row entry")
    weighted = S[:, None, :] * (S / vacuum)[None, :, :]
    raw = (weighted.reshape(n * n, n) @ S.conj().T).reshape(n, n, n)
    rounded = np.rint(raw.real)
    distance = np.abs(raw - rounded)
    residual = float(np.max(distance))
    if residual > tolerance:
        flat = np.unravel_index(np.argmax(distance), distance.shape)
        witness = tuple(int(i) for i in flat)
        raise VerlindeError(
            f"N{witness} = {raw[witness]:.6g} is {residual:.3g} away from an integer"
        )
    if (rounded < 0).any():
        witness = tuple(int(i) for i in np.argwhere(rounded < 0)[0])
        raise VerlindeError(f"N{witness} rounds to a negative integer")
    return VerlindeResult(rounded.astype(np.int64), residual)


def degenerate_sectors(
    md: ModularData, tolerance: float = RELATION_TOLERANCE
) -> tuple[int, ...]:
    """Sectors whose Hopf link with every sector is ``d_a d_b``."""
    Y = y_matrix(md)
    product = np.outer(md.d, md.d)
    degenerate = tuple(
        int(a) for a in range(md.n) if np.max(np.abs(Y[a] - product[a])) < tolerance
    )
    invertible = bool(np.linalg.cond(Y) < CONDITION_LIMIT)
    if invertible != (degenerate == (0,)):
        raise DegeneracyMismatchError(
            f"Y invertible={invertible} but degenerate sectors are {degenerate}"
        )
    return degenerate


@dataclass(frozen=True, slots=True)
class SL2ZReport:
    """Maximum residual of each modular relation; passes iff all are small."""

    residuals: dict[str, float]
    tolerance: float

    @property
    def passed(self) -> bool:
        return all(r < self.tolerance for r in self.residuals.values())

    def failures(self) -> tuple[str, ...]:
        return tuple(k for k, r in self.residuals.items() if not r < self.tolerance)


def check_sl2z(md: ModularData, tolerance: float = RELATION_TOLERANCE) -> SL2ZReport:
    """Measure unitarity, symmetry, ``S^2 = C``, ``(ST)^3 = S^2`` and positivity."""
    S, T = md.S, md.T
    n = md.n
    eye = np.eye(n)
    charge = np.zeros((n, n))
    charge[np.arange(n), list(md.ring.conj)] = 1.0
    vacuum = S[0]
    positivity = float(np.max(np.maximum(0.0, -vacuum.real) + np.abs(vacuum.imag)))
    if np.min(vacuum.real) <= 0:
        positivity = max(positivity, float(-np.min(vacuum.real)), tolerance)
    diagonal = np.diag(T)
    residuals = {
        "unitary": float(np.max(np.abs(S @ S.conj().T - eye))),
        "symmetric": float(np.max(np.abs(S - S.T))),
        "s_squared_is_conjugation": float(np.max(np.abs(S @ S - charge))),
        "st_cubed_is_s_squared": _relation_residual(S, T),
        "vacuum_row_positive": positivity,
        "t_diagonal_unimodular": float(
            np.max(np.abs(T - np.diag(diagonal))) + np.max(np.abs(np.abs(diagonal) - 1))
        ),
    }
    return SL2ZReport(residuals, tolerance)
