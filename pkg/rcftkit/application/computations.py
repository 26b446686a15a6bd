"""The service the front end calls: one method per command, each returning a Report."""

from __future__ import annotations

import logging
from fractions import Fraction
from pathlib import Path

from rcftkit.application.codec import modular_data_from_dict, ring_arrays
from rcftkit.application.config import Config
from rcftkit.application.ports import ModelFileStore, MonsterCatalog
from rcftkit.application.reports import (
    Report,
    boundary_payload,
    boundary_report,
    fusion_check_report,
    invariants_report,
    jones_test_report,
    jones_values_report,
    mckay_report,
    model_report,
    mtc_check_report,
    order_report,
    series_report,
    su2_classification_report,
    vir_classification_report,
)
from rcftkit.domain.classification import (
    boundary_count,
    boundary_quadruples,
    classify_c_lt_1,
    classify_su2_extensions,
    full_cft_pairs,
    label_invariant,
    labelled_su2_invariants,
)
from rcftkit.domain.extensions import is_admissible_index, jones_index_values
from rcftkit.domain.fusion import axiom_violations
from rcftkit.domain.invariant_search import SearchSettings, enumerate_invariants
from rcftkit.domain.invariants import LabelError
from rcftkit.domain.minimal import minimal_data
from rcftkit.domain.modular_data import check_sl2z
from rcftkit.domain.moonshine import (
    MONSTER_ORDER_FACTORS,
    CharacterSpec,
    J_series,
    character,
    j_series,
    mckay_check,
    monster_order,
)
from rcftkit.domain.su2 import su2_data

logger = logging.getLogger(__name__)

MONSTER_CENTRAL_CHARGE = Fraction(24)


class ComputationError(ValueError):
    """A request lies outside the configured limits."""


class ComputationService:
    """Runs domain computations under the configured tolerances and ceilings."""

    def __init__(
        self, config: Config, models: ModelFileStore, monster: MonsterCatalog
    ) -> None:
        self._config = config
        self._models = models
        self._monster = monster

    @property
    def config(self) -> Config:
        return self._config

    def settings(self) -> SearchSettings:
        return self._config.search_settings()

    def _level(self, k: int) -> int:
        if not 1 <= k <= self._config.su2_level_ceiling:
            raise ComputationError(
                f"SU(2) level {k} is outside 1..{self._config.su2_level_ceiling}"
            )
        return k

    def _index(self, m: int, ceiling: int | None = None) -> int:
        top = ceiling if ceiling is not None else self._config.classification_ceiling
        if not 3 <= m <= top:
            raise ComputationError(f"minimal model m={m} is outside 3..{top}")
        return m

    def su2_model(self, k: int) -> Report:
        md = su2_data(self._level(k))
        return model_report(md, check_sl2z(md, self._config.tolerance_relation))

    def minimal_model(self, m: int) -> Report:
        md = minimal_data(self._index(m))
        return model_report(md, check_sl2z(md, self._config.tolerance_relation))

    def fusion_check(self, path: Path) -> Report:
        N, conj, _ = ring_arrays(self._models.read(path))
        violations = axiom_violations(N, conj)
        for violation in violations:
            logger.info("%s: %s", path.name, violation.describe())
        return fusion_check_report(N.shape[0], violations)

    def mtc_check(self, path: Path) -> Report:
        md = modular_data_from_dict(self._models.read(path), path.stem)
        return mtc_check_report(md, check_sl2z(md, self._config.tolerance_relation))

    def su2_invariants(self, k: int) -> Report:
        md = su2_data(self._level(k))
        found = labelled_su2_invariants(k, self.settings())
        return invariants_report(md.name, md.name, found)

    def minimal_invariants(self, m: int) -> Report:
        md = minimal_data(self._index(m, self._config.minimal_full_ceiling))
        labelled = []
        for invariant in enumerate_invariants(md, md, self.settings()):
            try:
                label: str | None = label_invariant(
                    invariant, "vir", m, self.settings()
                )
            except LabelError as exc:
                logger.warning("%s", exc)
                label = None
            labelled.append(invariant.with_label(label))
        return invariants_report(md.name, md.name, labelled)

    def hetero_invariants(self, left: Path, right: Path) -> Report:
        left_md = modular_data_from_dict(self._models.read(left), left.stem)
        right_md = modular_data_from_dict(self._models.read(right), right.stem)
        found = enumerate_invariants(left_md, right_md, self.settings())
        return invariants_report(left_md.name, right_md.name, found)

    def classify_su2(self, k: int) -> Report:
        records = classify_su2_extensions(self._level(k), self.settings())
        return su2_classification_report(k, records)

    def classify_vir(
        self, m: int, full_cft: bool = False, boundary: bool = False
    ) -> Report:
        result = classify_c_lt_1(
            self._index(m), self.settings(), self._config.minimal_full_ceiling
        )
        pairs = None
        if full_cft:
            pairs = full_cft_pairs(
                self._index(m, self._config.minimal_full_ceiling), self.settings()
            )
        quadruples = None
        if boundary:
            quadruples = boundary_payload(boundary_count(m), boundary_quadruples(m))
        return vir_classification_report(result, pairs, quadruples)

    def boundary(self, m: int) -> Report:
        if m < 3:
            raise ComputationError(f"boundary counting starts at m=3, got {m}")
        return boundary_report(m, boundary_count(m), boundary_quadruples(m))

    def j(self, n_max: int) -> Report:
        return series_report("moonshine-j", j_series(n_max))

    def J(self, n_max: int) -> Report:
        return series_report("moonshine-J", J_series(n_max))

    def mckay(self, terms: int = 3) -> Report:
        """Decompose the J coefficients of ``q^1 .. q^terms`` into Monster irreps."""
        series = J_series(terms)
        irreps = self._monster.irrep_dimensions()
        found = [
            mckay_check(int(series.coefficient(n)), irreps, self._config.mckay_bound)
            for n in range(1, terms + 1)
        ]
        report = mckay_report(found)
        module = self._monster.module_dimensions()
        spec = CharacterSpec(module, Fraction(0), MONSTER_CENTRAL_CHARGE)
        graded = character(spec, len(module) - 1).as_laurent()
        matches = all(
            graded.coefficient(n) == series.coefficient(n)
            for n in range(-1, min(terms, len(module) - 2) + 1)
        )
        return Report(
            report.kind,
            {**report.payload, "module_matches_J": matches},
            report.columns,
            report.rows,
            report.passed and matches,
        )

    def monster_order(self) -> Report:
        return order_report(monster_order(), MONSTER_ORDER_FACTORS)

    def jones(self, n_max: int) -> Report:
        return jones_values_report(jones_index_values(n_max))

    def jones_test(self, value: float) -> Report:
        return jones_test_report(is_admissible_index(value))
