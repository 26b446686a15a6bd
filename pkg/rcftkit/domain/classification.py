"""Classification pipelines for SU(2)_k and the c < 1 minimal models.

SU(2)_k invariants are labelled by the ADE diagram of Coxeter number k+2
whose exponents match the diagonal. A minimal-model invariant is labelled
by the pair of SU(2) invariants at levels m-2 and m-1 whose folded product
equals it.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from rcftkit.domain.ade import ADEGraph, coxeter_inventory
from rcftkit.domain.extensions import (
    LocalityReport,
    SectorSystem,
    ThetaCandidate,
    check_local_theta,
    theta_from_sectors,
    theta_of,
)
from rcftkit.domain.invariant_search import SearchSettings, enumerate_invariants
from rcftkit.domain.invariants import (
    InvariantMatrix,
    LabelError,
    TypeFlag,
    fold_product,
    minimal_label,
    pair_name,
    su2_label,
)
from rcftkit.domain.kac import KacSectorSystem, MinimalModelIndex, central_charge
from rcftkit.domain.minimal import minimal_data
from rcftkit.domain.su2 import su2_data

logger = logging.getLogger(__name__)

EXCEPTIONAL_CENTRAL_CHARGES = (
    Fraction(21, 22),
    Fraction(25, 26),
    Fraction(144, 145),
    Fraction(154, 155),
)
DEFAULT_FULL_CEILING = 13


class ClassificationError(ValueError):
    """A classification result contradicts the known ADE lists."""


@dataclass(frozen=True, eq=False)
class ExtensionRecord:
    """One invariant with its theta candidate and locality verdicts."""

    theta: ThetaCandidate
    label: str | None
    report: LocalityReport
    type_flag: TypeFlag = TypeFlag.UNKNOWN
    invariant: InvariantMatrix | None = None

    @property
    def passed(self) -> bool:
        return self.report.passed


def _trace(record: ExtensionRecord) -> int:
    if record.invariant is None:
        return 0
    return int(np.trace(record.invariant.Z))


def assign_type_flags(records: Sequence[ExtensionRecord]) -> list[ExtensionRecord]:
    """Flag one type-I candidate per vacuum row; the rest are type-II.

    The candidate is the invariant of largest trace among those sharing the
    row that passes the locality filter.
    """
    groups: dict[tuple[tuple[int, int], ...], list[int]] = {}
    for position, record in enumerate(records):
        groups.setdefault(record.theta.key(), []).append(position)
    flags = [TypeFlag.TYPE_II] * len(records)
    for members in groups.values():
        passing = [p for p in members if records[p].passed]
        if passing:
            best = max(passing, key=lambda p: (_trace(records[p]), -p))
            flags[best] = TypeFlag.TYPE_I_CANDIDATE
    result = []
    for record, flag in zip(records, flags, strict=True):
        invariant = record.invariant.with_flag(flag) if record.invariant else None
        result.append(
            ExtensionRecord(record.theta, record.label, record.report, flag, invariant)
        )
    return result


@lru_cache(maxsize=64)
def labelled_su2_invariants(
    k: int, settings: SearchSettings | None = None
) -> tuple[InvariantMatrix, ...]:
    """Every SU(2)_k invariant carrying its ADE label."""
    md = su2_data(k)
    labelled = []
    for invariant in enumerate_invariants(md, md, settings):
        try:
            label: str | None = su2_label(invariant.Z, k)
        except LabelError as exc:
            logger.warning("SU(2)_%d: %s", k, exc)
            label = None
        labelled.append(invariant.with_label(label))
    return tuple(labelled)


def classify_su2_extensions(
    k: int, settings: SearchSettings | None = None
) -> list[ExtensionRecord]:
    """Theta candidates of every SU(2)_k invariant with their verdicts."""
    md = su2_data(k)
    records = []
    for invariant in labelled_su2_invariants(k, settings):
        theta = theta_of(invariant, md)
        report = check_local_theta(theta, md)
        records.append(
            ExtensionRecord(theta, invariant.label, report, invariant=invariant)
        )
    return assign_type_flags(records)


@dataclass(frozen=True, eq=False)
class CltOneClassification:
    m: int
    c: Fraction
    exceptional: bool
    mode: str
    records: tuple[ExtensionRecord, ...]

    def candidates(self) -> tuple[ExtensionRecord, ...]:
        return tuple(r for r in self.records if r.passed)

    def rejected(self) -> tuple[ExtensionRecord, ...]:
        return tuple(r for r in self.records if not r.passed)


def is_exceptional(m: int) -> bool:
    return central_charge(m) in EXCEPTIONAL_CENTRAL_CHARGES


def _families(
    m: int, settings: SearchSettings | None
) -> tuple[tuple[InvariantMatrix, ...], tuple[InvariantMatrix, ...]]:
    return (
        labelled_su2_invariants(m - 2, settings),
        labelled_su2_invariants(m - 1, settings),
    )


def _minimal_pair(
    Z: np.ndarray, m: int, settings: SearchSettings | None
) -> str | None:
    p_family, q_family = _families(m, settings)
    try:
        return pair_name(minimal_label(Z, m, p_family, q_family))
    except LabelError as exc:
        logger.warning("m=%d: %s", m, exc)
        return None


def _full_records(m: int, settings: SearchSettings | None) -> list[ExtensionRecord]:
    md = minimal_data(m)
    records = []
    for invariant in enumerate_invariants(md, md, settings):
        label = _minimal_pair(invariant.Z, m, settings)
        theta = theta_of(invariant, md)
        records.append(
            ExtensionRecord(
                theta,
                label,
                check_local_theta(theta, md),
                invariant=invariant.with_label(label),
            )
        )
    return records


def _reduced_records(m: int, settings: SearchSettings | None) -> list[ExtensionRecord]:
    """Vacuum rows of folded SU(2) pairs, filtered on the closed-form system."""
    system: SectorSystem = KacSectorSystem(MinimalModelIndex(m))
    p_family, q_family = _families(m, settings)
    records = []
    for zp in p_family:
        for zq in q_family:
            row = fold_product(m, zp.Z, zq.Z)[0]
            sectors = {int(b): int(row[b]) for b in np.flatnonzero(row)}
            theta = theta_from_sectors(sectors, system)
            label = pair_name((str(zp.label), str(zq.label)))
            records.append(
                ExtensionRecord(theta, label, check_local_theta(theta, system))
            )
    return records


def classify_c_lt_1(
    m: int,
    settings: SearchSettings | None = None,
    full_ceiling: int = DEFAULT_FULL_CEILING,
    reduced: bool | None = None,
) -> CltOneClassification:
    """Theta candidates of the minimal model ``m`` with the exceptional flag.

    Full mode enumerates the invariants of the model itself; reduced mode
    folds the labelled SU(2) families and filters their vacuum rows only.
    Reduced mode is the default above ``full_ceiling``.
    """
    index = MinimalModelIndex(m)
    if reduced is None:
        reduced = m > full_ceiling
    if reduced:
        records = _reduced_records(index.m, settings)
    else:
        records = _full_records(index.m, settings)
    logger.info(
        "m=%d: %d invariants, %d pass the locality filter",
        m,
        len(records),
        sum(r.passed for r in records),
    )
    return CltOneClassification(
        m,
        central_charge(m),
        is_exceptional(m),
        "reduced" if reduced else "full",
        tuple(assign_type_flags(records)),
    )


def pair_family(m: int) -> tuple[tuple[str, str], ...]:
    """The known pairs ``(G1, G2)`` with Coxeter numbers ``(m, m + 1)``.

    One side is always an A diagram. Both sides come from
    :func:`coxeter_inventory`, the source boundary counting also reads.
    """
    if m < 3:
        raise ClassificationError(f"pairs start at m=3, got {m}")
    pairs = [(f"A{m - 1}", g.name) for g in coxeter_inventory(m + 1)]
    pairs += [
        (g.name, f"A{m}") for g in coxeter_inventory(m) if not g.name.startswith("A")
    ]
    return tuple(sorted(pairs))


def in_pair_family(m: int, pair: tuple[str, str]) -> bool:
    return pair in pair_family(m)


def _split_pair(name: str) -> tuple[str, str]:
    left, right = name.strip("()").split(",")
    return left, right


def full_cft_pairs(
    m: int, settings: SearchSettings | None = None
) -> tuple[tuple[str, str], ...]:
    """ADE pairs of every coupling matrix of the minimal model ``m`` with itself."""
    pairs = []
    for record in _full_records(m, settings):
        if record.label is None:
            raise ClassificationError(f"m={m}: an invariant has no ADE pair")
        pair = _split_pair(record.label)
        if not in_pair_family(m, pair):
            raise ClassificationError(f"m={m}: {pair} is not a known pair")
        pairs.append(pair)
    return tuple(sorted(pairs))


@dataclass(frozen=True, slots=True)
class BoundaryQuadruple:
    left: str
    left_orbit: tuple[int, ...]
    right: str
    right_orbit: tuple[int, ...]


Inventory = Callable[[int], Sequence[ADEGraph]]


def boundary_quadruples(
    m: int, inventory: Inventory = coxeter_inventory
) -> tuple[BoundaryQuadruple, ...]:
    """``(G1, [v1], G2, [v2])`` with ``h(G1) = m``, ``h(G2) = m+1``, ``[v]`` orbits."""
    if m < 3:
        raise ClassificationError(f"boundary counting starts at m=3, got {m}")
    return tuple(
        BoundaryQuadruple(g1.name, o1, g2.name, o2)
        for g1 in inventory(m)
        for g2 in inventory(m + 1)
        for o1 in g1.orbits
        for o2 in g2.orbits
    )


def boundary_count(m: int, inventory: Inventory = coxeter_inventory) -> int:
    if m < 3:
        raise ClassificationError(f"boundary counting starts at m=3, got {m}")
    return sum(
        g1.vertex_orbits * g2.vertex_orbits
        for g1 in inventory(m)
        for g2 in inventory(m + 1)
    )


def label_invariant(
    invariant: InvariantMatrix,
    family: str,
    level: int,
    settings: SearchSettings | None = None,
) -> str:
    """ADE label for ``"su2"`` (level k) or ``"vir"`` (index m) invariants."""
    if family == "su2":
        return su2_label(invariant.Z, level)
    if family == "vir":
        p_family, q_family = _families(level, settings)
        return pair_name(minimal_label(invariant.Z, level, p_family, q_family))
    raise ClassificationError(f"unknown model family {family!r}")
