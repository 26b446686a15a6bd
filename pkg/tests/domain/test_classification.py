"""Tests for the SU(2)_k and c < 1 classification pipelines."""

from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest

from rcftkit.domain.ade import ade_graph, coxeter_inventory
from rcftkit.domain.classification import (
    ClassificationError,
    assign_type_flags,
    boundary_count,
    boundary_quadruples,
    classify_c_lt_1,
    classify_su2_extensions,
    full_cft_pairs,
    in_pair_family,
    is_exceptional,
    label_invariant,
    labelled_su2_invariants,
    pair_family,
)
from rcftkit.domain.invariants import TypeFlag
from rcftkit.domain.kac import MinimalModelIndex


def by_label(records):
    return {r.label: r for r in records}


def support_of(Z: np.ndarray) -> set[tuple[int, int]]:
    return {(int(a), int(b)) for a, b in np.argwhere(Z)}


# ---------------------------------------------------------------------------
# SU(2)_k
# ---------------------------------------------------------------------------
def test_level_ten_labels() -> None:
    labels = [z.label for z in labelled_su2_invariants(10)]
    assert sorted(labels) == ["A11", "D7", "E6"]


def test_level_ten_e6_matrix() -> None:
    e6 = next(z for z in labelled_su2_invariants(10) if z.label == "E6")
    blocks = ((0, 6), (3, 7), (4, 10))
    expected = {(a, b) for block in blocks for a in block for b in block}
    assert support_of(e6.Z) == expected
    assert e6.Z.max() == 1


def test_level_ten_d7_diagonal() -> None:
    d7 = next(z for z in labelled_su2_invariants(10) if z.label == "D7")
    assert {int(i) for i in np.flatnonzero(np.diag(d7.Z))} == {0, 2, 4, 5, 6, 8, 10}
    assert d7.is_permutation()


def test_level_ten_type_flags() -> None:
    records = by_label(classify_su2_extensions(10))
    assert records["A11"].type_flag is TypeFlag.TYPE_I_CANDIDATE
    assert records["D7"].type_flag is TypeFlag.TYPE_II
    assert records["D7"].theta.sectors == {0: 1}
    assert records["E6"].type_flag is TypeFlag.TYPE_I_CANDIDATE
    assert records["E6"].theta.sectors == {0: 1, 6: 1}
    assert records["E6"].passed
    assert records["E6"].invariant.type_flag is TypeFlag.TYPE_I_CANDIDATE


def test_level_sixteen_d10_and_e7_share_theta() -> None:
    records = by_label(classify_su2_extensions(16))
    assert records["D10"].theta.key() == records["E7"].theta.key()
    assert records["D10"].theta.sectors == {0: 1, 16: 1}
    assert records["D10"].type_flag is TypeFlag.TYPE_I_CANDIDATE
    assert records["E7"].type_flag is TypeFlag.TYPE_II


@pytest.mark.slow
def test_level_twenty_eight_e8() -> None:
    records = by_label(classify_su2_extensions(28))
    assert set(records) == {"A29", "D16", "E8"}
    assert records["E8"].theta.support() == (0, 10, 18, 28)
    assert records["E8"].passed


def test_failed_records_are_never_type_one() -> None:
    records = classify_su2_extensions(6)
    for record in records:
        if not record.passed:
            assert record.type_flag is TypeFlag.TYPE_II


def test_assign_type_flags_of_nothing() -> None:
    assert assign_type_flags([]) == []


# ---------------------------------------------------------------------------
# c < 1
# ---------------------------------------------------------------------------
@pytest.mark.parametrize(
    ("m", "expected"),
    [(11, True), (12, True), (29, True), (30, True), (10, False), (17, False)],
)
def test_exceptional_central_charges(m: int, expected: bool) -> None:
    assert is_exceptional(m) is expected


def test_full_and_reduced_modes_agree_on_theta() -> None:
    full = classify_c_lt_1(5)
    reduced = classify_c_lt_1(5, reduced=True)
    assert full.mode == "full" and reduced.mode == "reduced"
    assert full.c == Fraction(4, 5)
    assert {r.theta.key() for r in full.records} == {
        r.theta.key() for r in reduced.records
    }
    assert {r.label for r in full.records} == {"(A4,A5)", "(A4,D4)"}


def test_reduced_mode_is_the_default_above_the_ceiling() -> None:
    result = classify_c_lt_1(6, full_ceiling=5)
    assert result.mode == "reduced"
    assert all(r.invariant is None for r in result.records)


@pytest.mark.slow
def test_m11_exceptional_theta() -> None:
    result = classify_c_lt_1(11)
    assert result.exceptional
    index = MinimalModelIndex(11)
    e6 = by_label(result.records)["(A10,E6)"]
    assert e6.theta.sectors == {index.index_of((1, 1)): 1, index.index_of((1, 7)): 1}


@pytest.mark.slow
@pytest.mark.parametrize("m", [17, 29, 30])
def test_large_exceptional_models_run_reduced(m: int) -> None:
    result = classify_c_lt_1(m)
    assert result.mode == "reduced"
    assert result.exceptional is (m != 17)
    assert result.candidates()


def test_pair_family() -> None:
    assert pair_family(5) == (("A4", "A5"), ("A4", "D4"))
    assert pair_family(6) == (("A5", "A6"), ("D4", "A6"))
    assert ("A10", "E6") in pair_family(11)
    assert in_pair_family(12, ("E6", "A12"))
    with pytest.raises(ClassificationError):
        pair_family(2)


def test_full_cft_pairs_are_known_pairs() -> None:
    assert full_cft_pairs(5) == (("A4", "A5"), ("A4", "D4"))
    assert full_cft_pairs(3) == (("A2", "A3"),)


@pytest.mark.slow
def test_m11_full_cft_pairs_include_e6() -> None:
    assert ("A10", "E6") in full_cft_pairs(11)


@pytest.mark.parametrize("m", range(3, 31))
def test_pair_family_reads_the_coxeter_inventory(m: int) -> None:
    pairs = pair_family(m)
    left = {g.name for g in coxeter_inventory(m)}
    right = {g.name for g in coxeter_inventory(m + 1)}
    assert ("A" + str(m - 1), "A" + str(m)) in pairs
    for g1, g2 in pairs:
        assert g1 in left and g2 in right
        assert g1.startswith("A") or g2.startswith("A")
    exceptional = {name for pair in pairs for name in pair if name[0] == "E"}
    expected = {11: "E6", 12: "E6", 17: "E7", 18: "E7", 29: "E8", 30: "E8"}
    assert exceptional == ({expected[m]} if m in expected else set())


def test_m3_has_only_the_trivial_theta() -> None:
    result = classify_c_lt_1(3)
    assert result.mode == "full"
    assert [r.theta.sectors for r in result.candidates()] == [{0: 1}]
    assert [r.theta.sectors for r in result.records] == [{0: 1}]


@pytest.mark.slow
def test_m13_runs_in_full_mode() -> None:
    result = classify_c_lt_1(13)
    assert result.mode == "full"
    assert {r.label for r in result.records} == {"(A12,A13)", "(A12,D8)"}


@pytest.mark.slow
@pytest.mark.parametrize(
    ("m", "label", "kac_labels", "support"),
    [
        (29, "(A28,E8)", [(1, 1), (1, 11), (1, 19), (1, 29)], (0, 10, 18, 28)),
        (30, "(E8,A30)", [(1, 1), (11, 1), (19, 1), (29, 1)], (0, 29, 300, 329)),
    ],
)
def test_e8_theta_in_reduced_mode(m: int, label: str, kac_labels, support) -> None:
    result = classify_c_lt_1(m)
    assert result.mode == "reduced"
    assert result.exceptional
    index = MinimalModelIndex(m)
    e8 = by_label(result.records)[label]
    assert set(e8.theta.support()) == {index.index_of(kl) for kl in kac_labels}
    assert e8.theta.support() == support
    assert e8.passed


def test_label_invariant_families() -> None:
    z = labelled_su2_invariants(4)[0]
    assert label_invariant(z, "su2", 4) == z.label
    with pytest.raises(ClassificationError):
        label_invariant(z, "e8", 4)


# ---------------------------------------------------------------------------
# Boundary quadruples
# ---------------------------------------------------------------------------
def test_boundary_count_at_m3() -> None:
    assert boundary_count(3) == 2
    quadruples = boundary_quadruples(3)
    assert len(quadruples) == 2
    assert {q.left for q in quadruples} == {"A2"}
    assert {q.right for q in quadruples} == {"A3"}


@pytest.mark.parametrize("m", range(3, 13))
def test_boundary_count_matches_the_listing(m: int) -> None:
    assert boundary_count(m) == len(boundary_quadruples(m))


def test_boundary_count_with_a_fake_inventory() -> None:
    shelves = {5: [ade_graph("A4")], 6: [ade_graph("A5"), ade_graph("D4")]}
    assert boundary_count(5, shelves.__getitem__) == 2 * (3 + 2)


def test_boundary_needs_m_at_least_three() -> None:
    with pytest.raises(ClassificationError):
        boundary_count(2)


def test_boundary_count_grows_with_m() -> None:
    counts = [boundary_count(m) for m in range(3, 13)]
    assert counts == [2, 4, 10, 15, 24, 32, 40, 50, 80, 96]
    assert counts == sorted(counts)
