"""Modular invariant matrices and their ADE labels."""

from __future__ import annotations

import dataclasses
from collections.abc import Sequence
from dataclasses import dataclass
from enum import Enum

import numpy as np

from rcftkit.domain.ade import coxeter_inventory
from rcftkit.domain.kac import MinimalModelIndex
from rcftkit.domain.modular_data import ModularData

RESIDUAL_TOLERANCE = 1e-7


class InvariantError(ValueError):
    """Base class for invariant errors."""


class LabelError(InvariantError):
    """No ADE diagram, or more than one, matches an invariant."""


class TypeFlag(str, Enum):
    TYPE_I_CANDIDATE = "type-I candidate"
    TYPE_II = "type-II"
    UNKNOWN = "unknown"


@dataclass(frozen=True, eq=False)
class InvariantMatrix:
    """A coupling matrix ``Z`` between two modular data with its residuals."""

    Z: np.ndarray
    left: str
    right: str
    s_residual: float
    t_residual: float
    label: str | None = None
    type_flag: TypeFlag = TypeFlag.UNKNOWN

    def __post_init__(self) -> None:
        Z = np.array(self.Z, dtype=np.int64)
        if Z.ndim != 2 or Z[0, 0] != 1:
            raise InvariantError("an invariant is a matrix with Z[0][0] = 1")
        if (Z < 0).any():
            raise InvariantError("invariant entries must be nonnegative")
        Z.setflags(write=False)
        object.__setattr__(self, "Z", Z)

    def key(self) -> tuple[int, ...]:
        """Sort key: the flattened entries."""
        return tuple(int(x) for x in self.Z.ravel())

    def vacuum_row(self) -> dict[int, int]:
        return {int(b): int(self.Z[0, b]) for b in np.flatnonzero(self.Z[0])}

    def vacuum_column(self) -> dict[int, int]:
        return {int(a): int(self.Z[a, 0]) for a in np.flatnonzero(self.Z[:, 0])}

    def is_permutation(self) -> bool:
        Z = self.Z
        return bool(
            Z.shape[0] == Z.shape[1]
            and (Z.sum(axis=0) == 1).all()
            and (Z.sum(axis=1) == 1).all()
        )

    def with_label(self, label: str | None) -> InvariantMatrix:
        return dataclasses.replace(self, label=label)

    def with_flag(self, flag: TypeFlag) -> InvariantMatrix:
        return dataclasses.replace(self, type_flag=flag)

    def same_matrix(self, other: InvariantMatrix) -> bool:
        return self.Z.shape == other.Z.shape and bool((self.Z == other.Z).all())


def invariant_residuals(
    Z: np.ndarray, left: ModularData, right: ModularData
) -> tuple[float, float]:
    """Max-abs residuals of ``S_L Z - Z S_R`` and ``T_L Z - Z T_R``."""
    Zf = np.asarray(Z, dtype=float)
    s = float(np.max(np.abs(left.S @ Zf - Zf @ right.S)))
    t = float(np.max(np.abs(left.T @ Zf - Zf @ right.T)))
    return s, t


def verified_invariant(
    Z: np.ndarray, left: ModularData, right: ModularData
) -> InvariantMatrix:
    """Wrap ``Z`` after re-checking the commutation relations from scratch."""
    s, t = invariant_residuals(Z, left, right)
    if s >= RESIDUAL_TOLERANCE or t >= RESIDUAL_TOLERANCE:
        raise InvariantError(f"matrix fails commutation: S residual {s}, T {t}")
    return InvariantMatrix(Z, left.name, right.name, s, t)


def diagonal_exponents(Z: np.ndarray) -> tuple[int, ...]:
    """``l + 1`` repeated ``Z[l][l]`` times, sorted."""
    diagonal = np.diag(np.asarray(Z))
    return tuple(
        spin + 1 for spin, mult in enumerate(diagonal.tolist()) for _ in range(mult)
    )


def su2_label(Z: np.ndarray, k: int) -> str:
    """The unique diagram of Coxeter number ``k + 2`` whose exponents match."""
    exponents = diagonal_exponents(Z)
    matches = [g.name for g in coxeter_inventory(k + 2) if g.exponents == exponents]
    if len(matches) != 1:
        found = matches or "no diagram"
        raise LabelError(f"diagonal exponents {exponents} match {found} at h={k + 2}")
    return matches[0]


def fold_product(m: int, z_p: np.ndarray, z_q: np.ndarray) -> np.ndarray:
    """Minimal-model coupling matrix from SU(2)_{m-2} and SU(2)_{m-1} invariants.

    ``Z[x][y] = zp[x][y] zq[x][y] + zp[x][σy] zq[x][σy]`` on canonical Kac
    labels, where ``σ(p, q) = (m-p, m+1-q)``.
    """
    labels = MinimalModelIndex(m).labels
    P = np.array([p - 1 for p, _ in labels])
    Q = np.array([q - 1 for _, q in labels])
    zp, zq = np.asarray(z_p), np.asarray(z_q)
    direct = zp[np.ix_(P, P)] * zq[np.ix_(Q, Q)]
    reflected = zp[np.ix_(P, (m - 2) - P)] * zq[np.ix_(Q, (m - 1) - Q)]
    return (direct + reflected).astype(np.int64)


def minimal_label(
    Z: np.ndarray,
    m: int,
    p_family: Sequence[InvariantMatrix],
    q_family: Sequence[InvariantMatrix],
) -> tuple[str, str]:
    """The unique labelled pair whose folded product equals ``Z``."""
    target = np.asarray(Z)
    matches = [
        (zp.label, zq.label)
        for zp in p_family
        for zq in q_family
        if np.array_equal(fold_product(m, zp.Z, zq.Z), target)
    ]
    if len(matches) != 1 or None in matches[0]:
        raise LabelError(f"minimal model m={m} invariant matches pairs {matches}")
    left, right = matches[0]
    return str(left), str(right)


def pair_name(pair: tuple[str, str]) -> str:
    return f"({pair[0]},{pair[1]})"
