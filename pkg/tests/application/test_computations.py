"""ComputationService tests with fake model files and Monster data."""

from __future__ import annotations

from pathlib import Path

import pytest

from rcftkit.application.codec import ModelFileError, modular_data_to_dict
from rcftkit.application.computations import ComputationError
from rcftkit.application.config import Config
from rcftkit.domain.su2 import su2_data
from tests.application.fakes import (
    FakeMonsterCatalog,
    broken_ring_document,
    make_service,
)

RING = Path("ring.json")
MODEL = Path("su2_2.json")


def test_su2_model() -> None:
    report = make_service().su2_model(2)
    assert report.kind == "model"
    assert report.passed
    assert report.payload["name"] == "SU(2)_2"


@pytest.mark.parametrize("k", [0, 33])
def test_level_outside_the_ceiling(k: int) -> None:
    with pytest.raises(ComputationError):
        make_service().su2_model(k)


def test_ceilings_come_from_the_config() -> None:
    service = make_service(Config(su2_level_ceiling=3))
    with pytest.raises(ComputationError):
        service.su2_invariants(4)


def test_minimal_model() -> None:
    report = make_service().minimal_model(3)
    assert report.payload["c"] == "1/2"
    with pytest.raises(ComputationError):
        make_service().minimal_model(2)


def test_fusion_check_reports_violations() -> None:
    service = make_service(documents={RING: broken_ring_document()})
    report = service.fusion_check(RING)
    assert not report.passed
    assert "associativity" in {v["axiom"] for v in report.payload["violations"]}


def test_unreadable_file_propagates() -> None:
    with pytest.raises(ModelFileError):
        make_service().fusion_check(Path("missing.json"))


def test_mtc_check_passes_for_a_shipped_model() -> None:
    service = make_service(documents={MODEL: modular_data_to_dict(su2_data(2))})
    report = service.mtc_check(MODEL)
    assert report.passed
    assert report.payload["failures"] == []


def test_su2_invariants_are_labelled() -> None:
    report = make_service().su2_invariants(10)
    labels = sorted(z["label"] for z in report.payload["invariants"])
    assert labels == ["A11", "D7", "E6"]


def test_minimal_invariants_are_labelled_by_pairs() -> None:
    report = make_service().minimal_invariants(5)
    labels = sorted(z["label"] for z in report.payload["invariants"])
    assert labels == ["(A4,A5)", "(A4,D4)"]


def test_minimal_invariants_respect_the_full_ceiling() -> None:
    service = make_service(Config(minimal_full_ceiling=4))
    with pytest.raises(ComputationError):
        service.minimal_invariants(5)


def test_hetero_invariants_between_files() -> None:
    document = modular_data_to_dict(su2_data(4))
    left, right = Path("a.json"), Path("b.json")
    service = make_service(documents={left: document, right: document})
    report = service.hetero_invariants(left, right)
    assert report.payload["count"] == 2


def test_classify_su2() -> None:
    report = make_service().classify_su2(10)
    assert sorted(report.payload["local_candidates"]) == ["A11", "D7", "E6"]
    types = {r["label"]: r["type"] for r in report.payload["records"]}
    assert types["D7"] == "type-II"


def test_classify_vir_with_extras() -> None:
    report = make_service().classify_vir(5, full_cft=True, boundary=True)
    payload = report.payload
    assert payload["mode"] == "full"
    assert payload["full_cft_pairs"] == [["A4", "A5"], ["A4", "D4"]]
    assert payload["boundary"]["count"] == 10


def test_boundary_command() -> None:
    report = make_service().boundary(3)
    assert report.payload["count"] == 2
    with pytest.raises(ComputationError):
        make_service().boundary(2)


def test_j_and_big_j() -> None:
    service = make_service()
    assert service.j(1).payload["coeffs"] == ["1", "744", "196884"]
    assert service.J(1).payload["coeffs"] == ["1", "0", "196884"]


def test_mckay_against_the_catalog() -> None:
    report = make_service().mckay(3)
    assert report.passed
    assert report.payload["module_matches_J"] is True
    assert [c["found"] for c in report.payload["coefficients"]] == [True] * 3


def test_mckay_flags_a_wrong_module() -> None:
    monster = FakeMonsterCatalog(module=(1, 0, 196883))
    report = make_service(monster=monster).mckay(1)
    assert report.payload["module_matches_J"] is False
    assert not report.passed


def test_monster_order_and_jones() -> None:
    service = make_service()
    assert service.monster_order().payload["digits"] == 54
    assert len(service.jones(6).rows) == 4
    assert service.jones_test(3.5).payload["admissible"] is False
    assert service.jones_test(4.2).payload["continuum"] is True
