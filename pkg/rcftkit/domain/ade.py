"""Simply-laced Dynkin diagrams: Coxeter numbers, exponents and vertex orbits."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import lru_cache

import networkx as nx
import numpy as np

EXPONENT_TOLERANCE = 1e-6
EIGENVALUE_TOLERANCE = 1e-9
E_RANKS = (6, 7, 8)

_NAME = re.compile(r"^([ADE])_?(\d+)$")


class AdeError(ValueError):
    """An ADE name is malformed or its spectrum is inconsistent."""


@dataclass(frozen=True, eq=False)
class ADEGraph:
    """A Dynkin diagram with its spectral data and automorphism orbits."""

    name: str
    adjacency: np.ndarray
    coxeter: int
    exponents: tuple[int, ...]
    orbits: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return int(self.adjacency.shape[0])

    @property
    def vertex_orbits(self) -> int:
        return len(self.orbits)

    def orbit_representatives(self) -> tuple[int, ...]:
        return tuple(orbit[0] for orbit in self.orbits)


def parse_name(name: str) -> tuple[str, int]:
    """Split ``"E6"`` / ``"D_7"`` into family and rank, checking the range."""
    match = _NAME.match(name.strip())
    if not match:
        raise AdeError(f"{name!r} is not an ADE name")
    family, rank = match.group(1), int(match.group(2))
    if family == "A" and rank < 1:
        raise AdeError("A_n needs n >= 1")
    if family == "D" and rank < 4:
        raise AdeError("D_n needs n >= 4")
    if family == "E" and rank not in E_RANKS:
        raise AdeError("E_n exists only for n = 6, 7, 8")
    return family, rank


def ade_adjacency(name: str) -> np.ndarray:
    """Adjacency matrix with vertices numbered along the longest path."""
    family, rank = parse_name(name)
    adjacency = np.zeros((rank, rank), dtype=np.int64)
    spine = rank if family == "A" else rank - 1
    for v in range(spine - 1):
        adjacency[v, v + 1] = adjacency[v + 1, v] = 1
    if family != "A":
        # D_n forks at the third vertex from the end, E_n at vertex 2.
        branch = rank - 3 if family == "D" else 2
        adjacency[rank - 1, branch] = adjacency[branch, rank - 1] = 1
    return adjacency


def _coxeter_number(top: float) -> int:
    h = round(math.pi / math.acos(min(1.0, top / 2)))
    if abs(2 * math.cos(math.pi / h) - top) > EIGENVALUE_TOLERANCE:
        raise AdeError(f"largest eigenvalue {top} is not 2cos(pi/h)")
    return h


def _exponents(eigenvalues: np.ndarray, h: int) -> tuple[int, ...]:
    found = []
    for value in eigenvalues:
        exact = h * math.acos(max(-1.0, min(1.0, value / 2))) / math.pi
        rounded = round(exact)
        if abs(exact - rounded) > EXPONENT_TOLERANCE:
            raise AdeError(f"eigenvalue {value} does not give an integer exponent")
        found.append(rounded)
    return tuple(sorted(found))


def _orbits(adjacency: np.ndarray) -> tuple[tuple[int, ...], ...]:
    graph = nx.from_numpy_array(adjacency)
    matcher = nx.algorithms.isomorphism.GraphMatcher(graph, graph)
    classes: dict[int, set[int]] = {v: {v} for v in graph.nodes}
    for mapping in matcher.isomorphisms_iter():
        for source, target in mapping.items():
            classes[source].add(target)
    return tuple(sorted({tuple(sorted(c)) for c in classes.values()}))


@lru_cache(maxsize=256)
def ade_graph(name: str) -> ADEGraph:
    """Build the named diagram and compute h, exponents and orbits."""
    family, rank = parse_name(name)
    canonical = f"{family}{rank}"
    adjacency = ade_adjacency(canonical)
    adjacency.setflags(write=False)
    eigenvalues = np.linalg.eigvalsh(adjacency.astype(float))
    h = _coxeter_number(float(eigenvalues[-1]))
    return ADEGraph(
        canonical, adjacency, h, _exponents(eigenvalues, h), _orbits(adjacency)
    )


def ade_names(max_rank: int) -> tuple[str, ...]:
    """Every ADE name with at most ``max_rank`` vertices."""
    names = [f"A{n}" for n in range(1, max_rank + 1)]
    names += [f"D{n}" for n in range(4, max_rank + 1)]
    names += [f"E{n}" for n in E_RANKS if n <= max_rank]
    return tuple(names)


@lru_cache(maxsize=128)
def coxeter_inventory(h: int) -> tuple[ADEGraph, ...]:
    """Every ADE diagram whose computed Coxeter number is ``h``.

    A diagram with Coxeter number h has at most h - 1 vertices, so scanning
    ranks up to h is exhaustive.
    """
    return tuple(g for g in map(ade_graph, ade_names(h)) if g.coxeter == h)
