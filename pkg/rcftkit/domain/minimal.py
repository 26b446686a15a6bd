"""Validated modular data of the Virasoro minimal models.

Only the coset origin of these models is given in closed form, not their
S-matrix. Candidates ``sqrt(8/(m(m+1))) * sign * sin(pi p p'/m) sin(pi q q'/(m+1))``
are built on canonical Kac labels and each is kept only if it reproduces the
fusion rules through Verlinde, the twist formula through ``(ST)^3 = S^2`` and
the mu-index formula through ``w``.
"""

from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from rcftkit.domain.fusion import DimensionVector, make_ring
from rcftkit.domain.kac import (
    MinimalModelIndex,
    central_charge,
    kac_dimension,
    minimal_fusion_tensor,
    minimal_twist,
    mu_index_formula,
)
from rcftkit.domain.modular_data import (
    ConventionError,
    ModularData,
    VerlindeError,
    assemble,
    check_sl2z,
    verlinde,
)
from rcftkit.domain.su2 import ModelConstructionError

logger = logging.getLogger(__name__)

RELATION_TOLERANCE = 1e-9


@dataclass(frozen=True, slots=True)
class SignConvention:
    """``(-1)^(1 + pq' + p'q)`` when ``base``, else
    ``(-1)^(a pq' + b p'q + e (p+q)(p'+q'))``."""

    a: int = 0
    b: int = 0
    e: int = 0
    base: bool = False

    def sign(self, p: int, q: int, p2: int, q2: int) -> int:
        if self.base:
            exponent = 1 + p * q2 + p2 * q
        else:
            exponent = self.a * p * q2 + self.b * p2 * q + self.e * (p + q) * (p2 + q2)
        return -1 if exponent % 2 else 1

    def describe(self) -> str:
        if self.base:
            return "(-1)^(1+pq'+p'q)"
        return f"(-1)^({self.a}pq'+{self.b}p'q+{self.e}(p+q)(p'+q'))"


def sign_conventions() -> tuple[SignConvention, ...]:
    """The base convention first, then the finite family in product order."""
    family = tuple(
        SignConvention(a, b, e) for a, b, e in itertools.product((0, 1), repeat=3)
    )
    return (SignConvention(base=True), *family)


def minimal_s_matrix(m: int, convention: SignConvention) -> np.ndarray:
    """Candidate S on canonical labels, normalised so ``S[0][0] > 0``."""
    labels = MinimalModelIndex(m).labels
    scale = math.sqrt(8 / (m * (m + 1)))
    n = len(labels)
    S = np.empty((n, n))
    for i, (p, q) in enumerate(labels):
        for j, (p2, q2) in enumerate(labels):
            S[i, j] = (
                scale
                * convention.sign(p, q, p2, q2)
                * math.sin(math.pi * p * p2 / m)
                * math.sin(math.pi * q * q2 / (m + 1))
            )
    return S if S[0, 0] > 0 else -S


def _rejection(
    m: int, S: np.ndarray, N: np.ndarray, dims: DimensionVector, omega: np.ndarray
) -> tuple[str, ModularData | None]:
    """Return why a candidate fails its oracles, or ``("", data)``."""
    n = S.shape[0]
    if np.max(np.abs(S @ S.T - np.eye(n))) > RELATION_TOLERANCE:
        return "not unitary", None
    if np.min(S[0]) <= 0:
        return "vacuum row not positive", None
    w = 1.0 / S[0, 0] ** 2
    if abs(w - mu_index_formula(m)) > RELATION_TOLERANCE * w:
        return f"w={w:.12g} differs from the mu-index formula", None
    try:
        fused = verlinde(S).N
    except VerlindeError as exc:
        return f"Verlinde: {exc}", None
    if not np.array_equal(fused, N):
        return "Verlinde tensor differs from the fusion rules", None
    index = MinimalModelIndex(m)
    ring = make_ring(N, list(range(n)), index.names())
    try:
        md = assemble(f"Vir_{m}", ring, dims, omega, S, central_charge(m))
    except ConventionError as exc:
        return f"twists: {exc}", None
    return "", md


@lru_cache(maxsize=32)
def minimal_data(m: int) -> ModularData:
    """Modular data of the minimal model ``m`` with its validated sign convention."""
    index = MinimalModelIndex(m)
    N = minimal_fusion_tensor(m)
    d = np.array([kac_dimension(m, label) for label in index.labels])
    d.setflags(write=False)
    dims = DimensionVector(d, float(np.sum(d**2)))
    omega = np.array([minimal_twist(m, label) for label in index.labels])
    diagnostics: list[str] = []
    for convention in sign_conventions():
        reason, md = _rejection(m, minimal_s_matrix(m, convention), N, dims, omega)
        if md is None:
            diagnostics.append(f"{convention.describe()}: {reason}")
            continue
        logger.debug("m=%d sign convention %s", m, convention.describe())
        report = check_sl2z(md)
        if not report.passed:
            raise ModelConstructionError(f"Vir_{m} fails {report.failures()}")
        return md
    raise ModelConstructionError(
        f"no sign convention validates m={m}: " + "; ".join(diagnostics)
    )
