"""Exhaustive enumeration of modular invariants and coupling matrices.

``T_L Z = Z T_R`` confines ``Z`` to the entries whose T eigenvalues agree.
On that support, ``S_L Z = Z S_R`` is a real linear system whose nullspace
(the commutant) is computed by a chunked QR followed by an SVD. Every
solution is then ``z = sum_j z[p_j] R[j]`` for a set of pivot entries
``p_j``, and a depth-first search assigns integer pivot values inside the
bounds ``0 <= Z[a][b] <= d_a d_b``, pruning with interval bounds on every
entry and integrality of every entry the assigned pivots determine.
"""

from __future__ import annotations

import itertools
import logging
import math
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from rcftkit.domain.invariants import (
    InvariantError,
    InvariantMatrix,
    verified_invariant,
)
from rcftkit.domain.modular_data import ModularData

logger = logging.getLogger(__name__)

BORDERLINE_LOW = 1e-10
BORDERLINE_HIGH = 1e-6
BOUND_SLACK = 1e-6
PIVOT_TOLERANCE = 1e-6
COEFFICIENT_FLOOR = 1e-11
ORACLE_LIMIT = 5_000_000
ORACLE_CHUNK = 65_536


class SearchBudgetExceeded(InvariantError):
    """The search visited more nodes than its budget allows."""


@dataclass(frozen=True, slots=True)
class SearchSettings:
    node_budget: int = 10**8
    rounding_tolerance: float = 1e-6
    relation_tolerance: float = 1e-9
    nullspace_threshold: float = 1e-8
    bound_scale: float = 1.0
    workers: int = 1

    def __post_init__(self) -> None:
        if self.node_budget <= 0 or self.workers <= 0:
            raise InvariantError("node budget and worker count must be positive")
        if min(self.rounding_tolerance, self.relation_tolerance) <= 0:
            raise InvariantError("tolerances must be positive")
        if self.nullspace_threshold <= 0 or self.bound_scale <= 0:
            raise InvariantError("threshold and bound scale must be positive")


@dataclass(frozen=True, eq=False)
class Commutant:
    """Orthonormal real basis of ``{Z : S_L Z = Z S_R, T_L Z = Z T_R}``."""

    basis: np.ndarray
    support: np.ndarray
    singular_values: np.ndarray
    borderline: tuple[float, ...]

    @property
    def dimension(self) -> int:
        return int(self.basis.shape[0])


def t_support(left: ModularData, right: ModularData, tolerance: float) -> np.ndarray:
    """Entries allowed by ``T_L Z = Z T_R``."""
    t_left = np.diag(left.T)
    t_right = np.diag(right.T)
    return np.abs(t_left[:, None] - t_right[None, :]) < tolerance


def _constraint_blocks(
    left: ModularData, right: ModularData, rows: np.ndarray, cols: np.ndarray
):
    """Yield real row blocks of the S-commutation system, one left sector at a time."""
    count = len(rows)
    positions = np.arange(count)
    for a in range(left.n):
        block = np.zeros((right.n, count), dtype=complex)
        block[cols, positions] += left.S[a, rows]
        own = rows == a
        block[:, own] -= right.S[cols[own], :].T
        yield block.real
        if np.max(np.abs(block.imag)) > 0:
            yield block.imag


def commutant_dimension(
    left: ModularData, right: ModularData, settings: SearchSettings | None = None
) -> Commutant:
    """Return the commutant basis; reported dimension is its rank."""
    settings = settings or SearchSettings()
    support = t_support(left, right, settings.relation_tolerance)
    entries = np.argwhere(support)
    rows, cols = entries[:, 0], entries[:, 1]
    count = len(entries)
    empty = np.zeros((0, left.n, right.n))
    if count == 0:
        return Commutant(empty, support, np.zeros(0), ())
    R = np.zeros((0, count))
    pending: list[np.ndarray] = []
    pending_rows = 0
    for block in _constraint_blocks(left, right, rows, cols):
        pending.append(block)
        pending_rows += block.shape[0]
        if pending_rows >= max(count, 64):
            R = np.linalg.qr(np.vstack([R, *pending]), mode="r")
            pending, pending_rows = [], 0
    if pending:
        R = np.linalg.qr(np.vstack([R, *pending]), mode="r")
    _, singular, vh = np.linalg.svd(R)
    padded = np.zeros(count)
    padded[: len(singular)] = singular
    rank = int(np.sum(padded >= settings.nullspace_threshold))
    borderline = tuple(
        float(s) for s in padded if BORDERLINE_LOW <= s <= BORDERLINE_HIGH
    )
    if borderline:
        logger.warning(
            "%s x %s: singular values %s lie in the review band [%g, %g]",
            left.name,
            right.name,
            borderline,
            BORDERLINE_LOW,
            BORDERLINE_HIGH,
        )
    null_rows = vh[rank:]
    basis = np.zeros((len(null_rows), left.n, right.n))
    basis[:, rows, cols] = null_rows
    logger.debug(
        "%s x %s: %d supported entries, commutant dimension %d",
        left.name,
        right.name,
        count,
        len(null_rows),
    )
    return Commutant(basis, support, padded, borderline)


def _pivot_order(entries: np.ndarray, bounds: np.ndarray) -> list[int]:
    """Vacuum entry first, then the vacuum row and column, then by bound."""

    def rank(e: int) -> tuple[int, int, int, int]:
        a, b = int(entries[e, 0]), int(entries[e, 1])
        vacuum = 0 if (a, b) == (0, 0) else 1 if 0 in (a, b) else 2
        return vacuum, int(bounds[e]), a, b

    return sorted(range(len(entries)), key=rank)


def _choose_pivots(B: np.ndarray, order: list[int]) -> list[int]:
    """Greedy column selection until the chosen columns span the basis."""
    r = B.shape[0]
    chosen: list[int] = []
    frame: list[np.ndarray] = []
    for e in order:
        column = B[:, e].copy()
        for q in frame:
            column -= (q @ column) * q
        norm = float(np.linalg.norm(column))
        if norm > PIVOT_TOLERANCE:
            frame.append(column / norm)
            chosen.append(e)
            if len(chosen) == r:
                break
    return chosen


class _Budget:
    def __init__(self, limit: int) -> None:
        self._limit = limit
        self._used = 0
        self._lock = threading.Lock()

    def spend(self, nodes: int = 1) -> None:
        with self._lock:
            self._used += nodes
            if self._used > self._limit:
                raise SearchBudgetExceeded(f"search exceeded {self._limit} nodes")

    @property
    def used(self) -> int:
        return self._used


class _PivotSearch:
    """Depth-first assignment of integer pivot values."""

    def __init__(
        self, R: np.ndarray, bounds: np.ndarray, pivots: list[int], tol: float
    ) -> None:
        self.R = R
        self.bounds = bounds
        self.pivot_bounds = [int(bounds[p]) for p in pivots]
        self.tol = tol
        r = R.shape[0]
        step = R * np.array(self.pivot_bounds, dtype=float)[:, None]
        low = np.minimum(step, 0.0)
        high = np.maximum(step, 0.0)
        self.suffix_low = np.zeros((r + 1, R.shape[1]))
        self.suffix_high = np.zeros((r + 1, R.shape[1]))
        for j in range(r - 1, -1, -1):
            self.suffix_low[j] = self.suffix_low[j + 1] + low[j]
            self.suffix_high[j] = self.suffix_high[j + 1] + high[j]
        nonzero = R != 0
        last = np.where(
            nonzero.any(axis=0), r - 1 - np.argmax(nonzero[::-1], axis=0), 0
        )
        self.settled_at = [np.flatnonzero(last == j) for j in range(r)]

    def feasible(self, partial: np.ndarray, depth: int) -> bool:
        """Check the entries settled at ``depth`` and bound every other entry."""
        settled = self.settled_at[depth]
        if len(settled):
            values = partial[settled]
            rounded = np.rint(values)
            if np.max(np.abs(values - rounded)) > self.tol:
                return False
            if (rounded < 0).any() or (rounded > self.bounds[settled]).any():
                return False
        upper = partial + self.suffix_low[depth + 1]
        lower = partial + self.suffix_high[depth + 1]
        return bool(
            (upper <= self.bounds + BOUND_SLACK).all() and (lower >= -BOUND_SLACK).all()
        )

    def run(
        self, partial: np.ndarray, depth: int, budget: _Budget
    ) -> list[np.ndarray]:
        if depth == self.R.shape[0]:
            return [np.rint(partial).astype(np.int64)]
        found: list[np.ndarray] = []
        for value in range(self.pivot_bounds[depth] + 1):
            budget.spend()
            candidate = partial + value * self.R[depth]
            if self.feasible(candidate, depth):
                found.extend(self.run(candidate, depth + 1, budget))
        return found


def enumerate_invariants(
    left: ModularData, right: ModularData, settings: SearchSettings | None = None
) -> tuple[InvariantMatrix, ...]:
    """Every nonnegative integer ``Z`` with ``Z[0][0] = 1`` in the commutant.

    Results are sorted by flattened entries. Raises SearchBudgetExceeded
    rather than returning a partial list.
    """
    settings = settings or SearchSettings()
    commutant = commutant_dimension(left, right, settings)
    support = commutant.support
    if commutant.dimension == 0 or not support[0, 0]:
        return ()
    entries = np.argwhere(support)
    rows, cols = entries[:, 0], entries[:, 1]
    B = commutant.basis[:, rows, cols]
    dd = np.outer(left.d, right.d)[rows, cols]
    bounds = np.floor(settings.bound_scale * dd + BOUND_SLACK).astype(np.int64)
    pivots = _choose_pivots(B, _pivot_order(entries, bounds))
    vacuum = int(np.flatnonzero((rows == 0) & (cols == 0))[0])
    if not pivots or pivots[0] != vacuum:
        return ()
    R = np.linalg.solve(B[:, pivots], B)
    R[np.abs(R) < COEFFICIENT_FLOOR] = 0.0
    R[:, pivots] = np.eye(len(pivots))
    search = _PivotSearch(R, bounds, pivots, settings.rounding_tolerance)
    budget = _Budget(settings.node_budget)
    start = R[0].copy()
    if not search.feasible(start, 0):
        return ()
    if settings.workers > 1 and len(pivots) > 1:
        with ThreadPoolExecutor(max_workers=settings.workers) as pool:
            branches = pool.map(
                lambda value: _branch(search, start, value, budget),
                range(search.pivot_bounds[1] + 1),
            )
            vectors = [v for branch in branches for v in branch]
    else:
        vectors = search.run(start, 1, budget)
    logger.debug("%s x %s: %d search nodes", left.name, right.name, budget.used)
    found: dict[tuple[int, ...], InvariantMatrix] = {}
    for vector in vectors:
        Z = np.zeros((left.n, right.n), dtype=np.int64)
        Z[rows, cols] = vector
        invariant = verified_invariant(Z, left, right)
        found[invariant.key()] = invariant
    return tuple(found[key] for key in sorted(found))


def _branch(
    search: _PivotSearch, start: np.ndarray, value: int, budget: _Budget
) -> list[np.ndarray]:
    budget.spend()
    candidate = start + value * search.R[1]
    if not search.feasible(candidate, 1):
        return []
    return search.run(candidate, 2, budget)


def brute_force_invariants(
    left: ModularData,
    right: ModularData,
    relation_tolerance: float = 1e-9,
    residual_tolerance: float = 1e-7,
    limit: int = ORACLE_LIMIT,
) -> tuple[InvariantMatrix, ...]:
    """Naive oracle: try every supported matrix with entries up to ``ceil(d_a d_b)``."""
    support = t_support(left, right, relation_tolerance)
    if not support[0, 0]:
        return ()
    support = support.copy()
    support[0, 0] = False
    entries = np.argwhere(support)
    rows, cols = entries[:, 0], entries[:, 1]
    dd = np.outer(left.d, right.d)[rows, cols]
    ceilings = [math.ceil(x - 1e-9) for x in dd]
    if math.prod(c + 1 for c in ceilings) > limit:
        raise InvariantError("search space too large for the brute-force oracle")
    space = itertools.product(*(range(c + 1) for c in ceilings))
    found: list[InvariantMatrix] = []
    while chunk := list(itertools.islice(space, ORACLE_CHUNK)):
        values = np.array(chunk, dtype=float).reshape(len(chunk), len(entries))
        Z = np.zeros((len(chunk), left.n, right.n))
        Z[:, 0, 0] = 1.0
        Z[:, rows, cols] = values
        residual = np.abs(left.S @ Z - Z @ right.S).max(axis=(1, 2))
        for index in np.flatnonzero(residual < residual_tolerance):
            found.append(verified_invariant(Z[index].astype(np.int64), left, right))
    return tuple(sorted(found, key=InvariantMatrix.key))
