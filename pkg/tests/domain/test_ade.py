"""Tests for Dynkin diagram spectra and automorphism orbits."""

from __future__ import annotations

import pytest

from rcftkit.domain.ade import (
    AdeError,
    ade_adjacency,
    ade_graph,
    ade_names,
    coxeter_inventory,
    parse_name,
)


@pytest.mark.parametrize(
    ("name", "coxeter"),
    [("A1", 2), ("A7", 8), ("D4", 6), ("D7", 12), ("E6", 12), ("E7", 18), ("E8", 30)],
)
def test_coxeter_numbers(name: str, coxeter: int) -> None:
    assert ade_graph(name).coxeter == coxeter


def test_exponents() -> None:
    assert ade_graph("E6").exponents == (1, 4, 5, 7, 8, 11)
    assert ade_graph("D7").exponents == (1, 3, 5, 6, 7, 9, 11)
    assert ade_graph("E8").exponents == (1, 7, 11, 13, 17, 19, 23, 29)


@pytest.mark.parametrize(
    ("name", "orbits"),
    [
        ("A1", 1),
        ("A4", 2),
        ("A5", 3),
        ("D4", 2),
        ("D5", 4),
        ("D8", 7),
        ("E6", 4),
        ("E7", 7),
        ("E8", 8),
    ],
)
def test_vertex_orbits(name: str, orbits: int) -> None:
    graph = ade_graph(name)
    assert graph.vertex_orbits == orbits
    assert sorted(v for orbit in graph.orbits for v in orbit) == list(
        range(graph.rank)
    )


def test_d4_triality_joins_the_three_legs() -> None:
    assert ade_graph("D4").orbits == ((0, 2, 3), (1,))


def test_adjacency_is_symmetric_with_rank_minus_one_edges() -> None:
    for name in ("A6", "D6", "E7"):
        adjacency = ade_adjacency(name)
        assert (adjacency == adjacency.T).all()
        assert adjacency.sum() == 2 * (adjacency.shape[0] - 1)


def test_names_with_underscore() -> None:
    assert parse_name("D_7") == ("D", 7)
    assert ade_graph("E_6").name == "E6"


@pytest.mark.parametrize("name", ["E9", "D3", "A0", "X4", "E"])
def test_invalid_names(name: str) -> None:
    with pytest.raises(AdeError):
        parse_name(name)


def test_ade_names() -> None:
    assert ade_names(4) == ("A1", "A2", "A3", "A4", "D4")


def test_coxeter_inventory() -> None:
    assert {g.name for g in coxeter_inventory(12)} == {"A11", "D7", "E6"}
    assert {g.name for g in coxeter_inventory(5)} == {"A4"}
    assert {g.name for g in coxeter_inventory(30)} == {"A29", "D16", "E8"}
