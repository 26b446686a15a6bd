"""Dict forms of fusion rings and modular data.

Ring: ``{"n": int, "conj": [int], "N": [[[int]]], "names": [str]}`` (names
optional). Modular data: ``{"ring": <ring>, "d": [float], "omega": [[re, im]],
"S": [[[re, im]]], "T_diag": [[re, im]]}``; ``T_diag`` is optional and a
plain number is accepted wherever a complex pair is.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any

import numpy as np

from rcftkit.domain.fusion import (
    DimensionVector,
    FusionError,
    FusionRing,
    make_ring,
)
from rcftkit.domain.modular_data import (
    ConventionError,
    ModularData,
    assemble,
    gauss_sum,
)


class ModelFileError(ValueError):
    """A ring or modular-data document cannot be turned into a model."""


def complex_pair(value: complex) -> list[float]:
    return [float(value.real), float(value.imag)]


def _complex(value: Any) -> complex:
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        return complex(value)
    if isinstance(value, list) and len(value) == 2:
        return complex(float(value[0]), float(value[1]))
    raise ModelFileError(f"{value!r} is not a number or an [re, im] pair")


def _complex_array(values: Any, shape: tuple[int, ...], field: str) -> np.ndarray:
    try:
        array = np.array(values, dtype=object)
    except ValueError as exc:
        raise ModelFileError(f"{field}: ragged array") from exc
    # [re, im] pairs add a trailing axis of length 2.
    if array.shape == (*shape, 2):
        array = np.array(values, dtype=float)
        return array[..., 0] + 1j * array[..., 1]
    if array.shape != shape:
        raise ModelFileError(f"{field}: expected shape {shape}, got {array.shape}")
    return np.vectorize(_complex, otypes=[complex])(array)


def ring_to_dict(ring: FusionRing) -> dict[str, Any]:
    return {
        "n": ring.n,
        "conj": list(ring.conj),
        "N": ring.N.tolist(),
        "names": list(ring.names),
    }


def ring_arrays(data: Any) -> tuple[np.ndarray, list[int], list[str] | None]:
    """Structure constants, conjugation and names; shapes checked, axioms not."""
    if not isinstance(data, dict):
        raise ModelFileError("a ring document is a JSON object")
    try:
        n = int(data["n"])
        conj = [int(c) for c in data["conj"]]
        N = np.array(data["N"], dtype=np.int64)
    except KeyError as exc:
        field = exc.args[0]
        raise ModelFileError(f"ring document is missing field {field!r}") from exc
    except (TypeError, ValueError) as exc:
        raise ModelFileError(f"ring document: {exc}") from exc
    if N.shape != (n, n, n) or len(conj) != n:
        raise ModelFileError(f"ring of {n} sectors has N of shape {N.shape}")
    names = data.get("names")
    if names is not None and (
        not isinstance(names, list) or not all(isinstance(x, str) for x in names)
    ):
        raise ModelFileError("names must be a list of strings")
    return N, conj, names


def ring_from_dict(data: Any) -> FusionRing:
    N, conj, names = ring_arrays(data)
    try:
        return make_ring(N, conj, names)
    except FusionError as exc:
        raise ModelFileError(f"ring: {exc}") from exc


def modular_data_to_dict(md: ModularData) -> dict[str, Any]:
    return {
        "name": md.name,
        "ring": ring_to_dict(md.ring),
        "d": [float(x) for x in md.d],
        "omega": [complex_pair(x) for x in md.omega],
        "S": [[complex_pair(x) for x in row] for row in md.S],
        "T_diag": [complex_pair(x) for x in np.diag(md.T)],
        "c": None if md.central_charge is None else str(md.central_charge),
    }


def modular_data_from_dict(data: Any, name: str = "file") -> ModularData:
    """Build modular data from its dict form without checking the relations.

    When ``T_diag`` is absent the T convention is chosen as for shipped
    models; if no convention satisfies the relations the principal cube root
    is used so the failure shows up in the relation report.
    """
    if not isinstance(data, dict):
        raise ModelFileError("a modular-data document is a JSON object")
    ring = ring_from_dict(data.get("ring"))
    n = ring.n
    try:
        d = np.array(data["d"], dtype=float)
        omega = _complex_array(data["omega"], (n,), "omega")
        S = _complex_array(data["S"], (n, n), "S")
        charge = Fraction(data["c"]) if data.get("c") is not None else None
    except KeyError as exc:
        field = exc.args[0]
        raise ModelFileError(f"modular data is missing field {field!r}") from exc
    except (TypeError, ValueError) as exc:
        raise ModelFileError(f"modular data: {exc}") from exc
    if d.shape != (n,):
        raise ModelFileError(f"d has shape {d.shape}, expected ({n},)")
    d.setflags(write=False)
    dims = DimensionVector(d, float(np.sum(d**2)))
    label = str(data.get("name", name))
    if data.get("T_diag") is not None:
        T = np.diag(_complex_array(data["T_diag"], (n,), "T_diag"))
    else:
        try:
            return assemble(label, ring, dims, omega, S, charge)
        except ConventionError:
            sigma = gauss_sum(d, omega)
            T = np.diag(np.exp(1j * np.angle(sigma) / 3) * omega)
    return ModularData(label, ring, dims, omega, S, T, gauss_sum(d, omega), charge)
