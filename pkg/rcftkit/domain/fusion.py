"""Finite fusion rings: structure constants, axioms and Perron-Frobenius
dimensions."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

PF_TOLERANCE = 1e-13
PF_MAX_ITERATIONS = 100_000
VACUUM = 0


class FusionError(ValueError):
    """Base class for fusion-ring errors."""


class LabelError(FusionError):
    """A sector label is outside the ring."""


class FusionAxiomError(FusionError):
    """The structure constants violate one or more ring axioms."""

    def __init__(self, violations: Sequence[AxiomViolation]) -> None:
        self.violations = tuple(violations)
        summary = "; ".join(v.describe() for v in self.violations)
        super().__init__(f"fusion axioms violated: {summary}")


@dataclass(frozen=True, slots=True)
class SectorLabel:
    """A sector id with its display name; id 0 is the vacuum."""

    id: int
    name: str


@dataclass(frozen=True, slots=True)
class AxiomViolation:
    """One violated axiom family and the first label tuple that breaks it."""

    axiom: str
    witness: tuple[int, ...]
    detail: str

    def describe(self) -> str:
        return f"{self.axiom} at {self.witness}: {self.detail}"


@dataclass(frozen=True, eq=False)
class FusionRing:
    """Validated structure constants ``N[a][b][c]`` with conjugation."""

    N: np.ndarray
    conj: tuple[int, ...]
    names: tuple[str, ...]

    @property
    def n(self) -> int:
        return int(self.N.shape[0])

    @property
    def unit(self) -> int:
        return VACUUM

    def labels(self) -> tuple[SectorLabel, ...]:
        return tuple(SectorLabel(i, name) for i, name in enumerate(self.names))

    def check_label(self, label: int) -> int:
        if not 0 <= label < self.n:
            raise LabelError(f"label {label} is outside 0..{self.n - 1}")
        return label

    def fusion_matrix(self, a: int) -> np.ndarray:
        """Return the matrix ``(N_a)[b][c] = N[a][b][c]``."""
        return self.N[self.check_label(a)]

    def fuse(self, a: int, b: int) -> dict[int, int]:
        return fuse(self, a, b)


def _first(mask: np.ndarray) -> tuple[int, ...]:
    return tuple(int(i) for i in np.argwhere(mask)[0])


def axiom_violations(N: np.ndarray, conj: Sequence[int]) -> list[AxiomViolation]:
    """Return one witnessed violation per broken axiom family."""
    n = N.shape[0]
    found: list[AxiomViolation] = []
    eye = np.eye(n, dtype=np.int64)

    unit_left = N[VACUUM] != eye
    unit_right = N[:, VACUUM, :] != eye
    if unit_left.any():
        found.append(AxiomViolation("unit", (VACUUM, *_first(unit_left)), "0*b != b"))
    elif unit_right.any():
        a, c = _first(unit_right)
        found.append(AxiomViolation("unit", (a, VACUUM, c), "a*0 != a"))

    perm = np.asarray(conj, dtype=np.int64)
    if perm[VACUUM] != VACUUM:
        found.append(AxiomViolation("conjugation", (VACUUM,), "vacuum not self-dual"))
    elif (perm[perm] != np.arange(n)).any():
        a = int(np.argwhere(perm[perm] != np.arange(n))[0][0])
        found.append(AxiomViolation("conjugation", (a,), "conj is not an involution"))
    else:
        pairing = N[np.arange(n), perm, VACUUM]
        if (pairing != 1).any():
            a = int(np.argwhere(pairing != 1)[0][0])
            found.append(
                AxiomViolation(
                    "conjugation",
                    (a, int(perm[a]), VACUUM),
                    f"N[a][conj a][0] = {int(pairing[a])}",
                )
            )
        first = N != N[perm].transpose(0, 2, 1)
        second = N != N[:, perm, :].transpose(2, 1, 0)
        broken = first | second
        if broken.any():
            found.append(
                AxiomViolation(
                    "frobenius",
                    _first(broken),
                    "N[a][b][c] differs from N[conj a][c][b] or N[c][conj b][a]",
                )
            )

    for a in range(n):
        left = np.einsum("bs,sct->bct", N[a], N)
        right = np.einsum("bcs,st->bct", N, N[a])
        if (left != right).any():
            b, c, t = _first(left != right)
            found.append(
                AxiomViolation(
                    "associativity",
                    (a, b, c, t),
                    f"(a*b)*c gives {int(left[b, c, t])}, a*(b*c) gives "
                    f"{int(right[b, c, t])}",
                )
            )
            break
    return found


def make_ring(
    N: np.ndarray | Sequence, conj: Sequence[int], names: Sequence[str] | None = None
) -> FusionRing:
    """Validate structure constants and return an immutable ring."""
    tensor = np.array(N, dtype=np.int64)
    if tensor.ndim != 3 or len(set(tensor.shape)) != 1 or tensor.shape[0] < 1:
        raise FusionError(f"structure constants must be n*n*n, got {tensor.shape}")
    n = tensor.shape[0]
    if (tensor < 0).any():
        raise FusionError(f"negative structure constant at {_first(tensor < 0)}")
    if len(conj) != n or any(not 0 <= int(c) < n for c in conj):
        raise FusionError(f"conjugation must map 0..{n - 1} into itself")
    violations = axiom_violations(tensor, conj)
    if violations:
        raise FusionAxiomError(violations)
    labels = tuple(names) if names is not None else tuple(f"λ_{i}" for i in range(n))
    if len(labels) != n:
        raise FusionError(f"{len(labels)} names for {n} sectors")
    tensor.setflags(write=False)
    return FusionRing(tensor, tuple(int(c) for c in conj), labels)


def fuse(ring: FusionRing, a: int, b: int) -> dict[int, int]:
    """Return ``{c: N[a][b][c]}`` over the nonzero channels of ``a * b``."""
    ring.check_label(a)
    ring.check_label(b)
    row = ring.N[a, b]
    return {int(c): int(row[c]) for c in np.flatnonzero(row)}


@dataclass(frozen=True, eq=False)
class DimensionVector:
    """Quantum dimensions ``d`` (``d[0] = 1``) and the global index ``w``."""

    d: np.ndarray
    w: float


def perron_frobenius(
    matrix: np.ndarray,
    tolerance: float = PF_TOLERANCE,
    max_iterations: int = PF_MAX_ITERATIONS,
) -> float:
    """Largest eigenvalue of a nonnegative matrix by power iteration.

    Iterates with ``matrix + I`` so bipartite fusion graphs do not oscillate,
    then removes the shift from the Rayleigh quotient.
    """
    shifted = np.asarray(matrix, dtype=float) + np.eye(matrix.shape[0])
    vector = np.ones(matrix.shape[0]) / np.sqrt(matrix.shape[0])
    estimate = float(vector @ shifted @ vector)
    for _ in range(max_iterations):
        image = shifted @ vector
        vector = image / np.linalg.norm(image)
        updated = float(vector @ shifted @ vector)
        if abs(updated - estimate) < tolerance:
            estimate = updated
            break
        estimate = updated
    return estimate - 1.0


def pf_dims(ring: FusionRing) -> DimensionVector:
    """Return Perron-Frobenius dimensions of every sector and their ``w``."""
    d = np.array([perron_frobenius(ring.N[a]) for a in range(ring.n)])
    d[VACUUM] = 1.0
    d.setflags(write=False)
    return DimensionVector(d, float(np.sum(d**2)))
