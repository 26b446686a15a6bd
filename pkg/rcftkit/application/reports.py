"""Report payloads and their canonical JSON text.

Canonical text sorts keys, writes floats with 17 significant digits and
complex numbers as ``[re, im]``, so identical results give identical bytes.
"""

from __future__ import annotations

import json
import math
from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

import numpy as np

from rcftkit.application.codec import complex_pair, modular_data_to_dict
from rcftkit.application.golden import GoldenReport
from rcftkit.domain.classification import (
    BoundaryQuadruple,
    CltOneClassification,
    ExtensionRecord,
)
from rcftkit.domain.extensions import IndexVerdict
from rcftkit.domain.fusion import AxiomViolation
from rcftkit.domain.invariants import InvariantMatrix
from rcftkit.domain.modular_data import ModularData, SL2ZReport, y_matrix
from rcftkit.domain.moonshine import McKayReport
from rcftkit.domain.qseries import QSeries


@dataclass(frozen=True)
class Report:
    """A command result: the JSON payload plus a flat table view of it."""

    kind: str
    payload: dict[str, Any]
    columns: tuple[str, ...] = ()
    rows: tuple[tuple[Any, ...], ...] = field(default=())
    passed: bool = True


def _plain(value: Any) -> Any:
    if isinstance(value, np.ndarray):
        return _plain(value.tolist())
    if isinstance(value, np.generic):
        return _plain(value.item())
    if isinstance(value, complex):
        return complex_pair(value)
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return value


def _encode(value: Any) -> str:
    if value is None or isinstance(value, bool):
        return json.dumps(value)
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return format(value, ".17g") if math.isfinite(value) else "null"
    if isinstance(value, str):
        return json.dumps(value, ensure_ascii=False)
    if isinstance(value, dict):
        items = sorted(value.items())
        return "{" + ",".join(f"{_encode(k)}:{_encode(v)}" for k, v in items) + "}"
    if isinstance(value, list):
        return "[" + ",".join(_encode(v) for v in value) + "]"
    raise TypeError(f"cannot encode {type(value).__name__}")


def canonical_json(payload: Any) -> str:
    """Byte-stable JSON text of ``payload``."""
    return _encode(_plain(payload))


def series_payload(series: QSeries) -> dict[str, Any]:
    """``{"lead": int, "coeffs": [str]}``; coefficients are exact integers as text."""
    return {"lead": series.lead, "coeffs": [str(c) for c in series.coeffs]}


def series_report(kind: str, series: QSeries) -> Report:
    rows = tuple((exponent, str(c)) for exponent, c in series.terms())
    return Report(kind, series_payload(series), ("exponent", "coefficient"), rows)


def sl2z_payload(report: SL2ZReport) -> dict[str, Any]:
    return {
        "passed": report.passed,
        "tolerance": report.tolerance,
        "residuals": dict(report.residuals),
        "failures": list(report.failures()),
    }


def model_report(md: ModularData, check: SL2ZReport) -> Report:
    payload = modular_data_to_dict(md)
    payload["w"] = md.w
    payload["sigma"] = complex_pair(md.sigma)
    payload["Y"] = [[complex_pair(x) for x in row] for row in y_matrix(md)]
    payload["checks"] = sl2z_payload(check)
    rows = tuple(
        (i, md.ring.names[i], float(md.d[i]), *complex_pair(md.omega[i]))
        for i in range(md.n)
    )
    columns = ("sector", "name", "d", "omega_re", "omega_im")
    return Report("model", payload, columns, rows, check.passed)


def mtc_check_report(md: ModularData, check: SL2ZReport) -> Report:
    payload = {"name": md.name, "n": md.n, **sl2z_payload(check)}
    rows = tuple(
        (key, value, value < check.tolerance) for key, value in check.residuals.items()
    )
    columns = ("relation", "residual", "ok")
    return Report("mtc-check", payload, columns, rows, check.passed)


def fusion_check_report(n: int, violations: Sequence[AxiomViolation]) -> Report:
    payload = {
        "n": n,
        "passed": not violations,
        "violations": [
            {"axiom": v.axiom, "witness": list(v.witness), "detail": v.detail}
            for v in violations
        ],
    }
    rows = tuple((v.axiom, str(v.witness), v.detail) for v in violations)
    return Report(
        "fusion-check", payload, ("axiom", "witness", "detail"), rows, not violations
    )


def invariant_payload(invariant: InvariantMatrix) -> dict[str, Any]:
    return {
        "Z": invariant.Z.tolist(),
        "label": invariant.label,
        "residuals": {"S": invariant.s_residual, "T": invariant.t_residual},
        "type": invariant.type_flag.value,
    }


def invariants_report(
    left: str, right: str, invariants: Sequence[InvariantMatrix]
) -> Report:
    payload = {
        "left": left,
        "right": right,
        "count": len(invariants),
        "invariants": [invariant_payload(z) for z in invariants],
    }
    rows = tuple(
        (i, z.label or "", str(z.vacuum_row()), z.s_residual, z.t_residual)
        for i, z in enumerate(invariants)
    )
    columns = ("index", "label", "vacuum_row", "s_residual", "t_residual")
    return Report("invariants", payload, columns, rows)


def _record_payload(record: ExtensionRecord) -> dict[str, Any]:
    return {
        "label": record.label,
        "theta": {str(k): v for k, v in record.theta.sectors.items()},
        "d_theta": record.theta.d_theta,
        "passed": record.passed,
        "verdicts": record.report.verdicts(),
        "residuals": {"twist": record.report.twist_residual},
        "type": record.type_flag.value,
        "Z": None if record.invariant is None else record.invariant.Z.tolist(),
    }


def _record_rows(records: Sequence[ExtensionRecord]) -> tuple[tuple[Any, ...], ...]:
    return tuple(
        (
            r.label or "",
            str(r.theta.sectors),
            r.theta.d_theta,
            r.passed,
            r.type_flag.value,
        )
        for r in records
    )


_RECORD_COLUMNS = ("label", "theta", "d_theta", "local", "type")


def su2_classification_report(k: int, records: Sequence[ExtensionRecord]) -> Report:
    payload = {
        "k": k,
        "records": [_record_payload(r) for r in records],
        "local_candidates": [r.label for r in records if r.passed],
    }
    return Report("classify-su2", payload, _RECORD_COLUMNS, _record_rows(records))


def boundary_payload(
    count: int, quadruples: Sequence[BoundaryQuadruple]
) -> dict[str, Any]:
    return {
        "count": count,
        "quadruples": [
            [q.left, list(q.left_orbit), q.right, list(q.right_orbit)]
            for q in quadruples
        ],
    }


def vir_classification_report(
    result: CltOneClassification,
    pairs: Sequence[tuple[str, str]] | None = None,
    boundary: dict[str, Any] | None = None,
) -> Report:
    payload: dict[str, Any] = {
        "m": result.m,
        "c": str(result.c),
        "exceptional": result.exceptional,
        "mode": result.mode,
        "candidates": [_record_payload(r) for r in result.candidates()],
        "rejected": [_record_payload(r) for r in result.rejected()],
    }
    if pairs is not None:
        payload["full_cft_pairs"] = [list(p) for p in pairs]
    if boundary is not None:
        payload["boundary"] = boundary
    return Report(
        "classify-vir", payload, _RECORD_COLUMNS, _record_rows(result.records)
    )


def mckay_report(reports: Sequence[McKayReport]) -> Report:
    payload = {
        "coefficients": [
            {
                "coefficient": str(r.coeff),
                "found": r.found,
                "decompositions": [
                    [[dim, mult] for dim, mult in d.items()]
                    for d in r.decompositions
                ],
            }
            for r in reports
        ]
    }
    rows = tuple(
        (str(r.coeff), r.found, " | ".join(str(d) for d in r.decompositions))
        for r in reports
    )
    passed = all(r.found for r in reports)
    return Report(
        "moonshine-mckay", payload, ("coefficient", "found", "sums"), rows, passed
    )


def order_report(order: int, factors: Sequence[tuple[int, int]]) -> Report:
    payload = {
        "order": str(order),
        "digits": len(str(order)),
        "factors": [[p, e] for p, e in factors],
    }
    rows = ((payload["order"], payload["digits"]),)
    return Report("moonshine-order", payload, ("order", "digits"), rows)


def jones_values_report(values: Sequence[float]) -> Report:
    rows = tuple((n, v) for n, v in enumerate(values, start=3))
    payload = {"values": [{"n": n, "index": v} for n, v in rows]}
    return Report("index-jones", payload, ("n", "index"), rows)


def jones_test_report(verdict: IndexVerdict) -> Report:
    payload = {
        "value": verdict.value,
        "admissible": verdict.admissible,
        "n": verdict.n,
        "continuum": verdict.continuum,
    }
    rows = ((verdict.value, verdict.admissible, verdict.n, verdict.continuum),)
    columns = ("value", "admissible", "n", "continuum")
    return Report("index-test", payload, columns, rows, True)


def boundary_report(
    m: int, count: int, quadruples: Sequence[BoundaryQuadruple]
) -> Report:
    payload = {"m": m, **boundary_payload(count, quadruples)}
    rows = tuple(
        (q.left, str(q.left_orbit), q.right, str(q.right_orbit)) for q in quadruples
    )
    columns = ("G1", "v1", "G2", "v2")
    return Report("classify-boundary", payload, columns, rows)


def golden_report(result: GoldenReport, directory: str) -> Report:
    payload = {
        "directory": directory,
        "checked": result.checked,
        "passed": result.passed,
        "mismatches": [{"name": m.name, "reason": m.reason} for m in result.mismatches],
    }
    rows = tuple((m.name, m.reason) for m in result.mismatches)
    return Report("golden-verify", payload, ("record", "reason"), rows, result.passed)
