"""Closed wire diagrams whose value is fixed by the modular data alone."""

from __future__ import annotations

from dataclasses import dataclass

from rcftkit.domain.modular_data import ModularData, ModularDataError, y_matrix


class DiagramError(ModularDataError):
    """The diagram needs more than S, T and d to evaluate."""


@dataclass(frozen=True, slots=True)
class Unknot:
    label: int


@dataclass(frozen=True, slots=True)
class TwistedUnknot:
    """An unknot carrying ``framing`` full twists."""

    label: int
    framing: int


@dataclass(frozen=True, slots=True)
class Hopf:
    left: int
    right: int


@dataclass(frozen=True, slots=True)
class DisjointUnion:
    parts: tuple[Diagram, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", tuple(self.parts))


Diagram = Unknot | TwistedUnknot | Hopf | DisjointUnion


def _label(md: ModularData, label: int) -> int:
    if not 0 <= label < md.n:
        raise DiagramError(f"label {label} is outside 0..{md.n - 1}")
    return label


def diagram_value(md: ModularData, diagram: Diagram) -> complex:
    """Evaluate an unknot, twisted unknot, Hopf link or a disjoint union."""
    if isinstance(diagram, Unknot):
        return complex(md.d[_label(md, diagram.label)])
    if isinstance(diagram, TwistedUnknot):
        a = _label(md, diagram.label)
        return complex(md.omega[a] ** diagram.framing * md.d[a])
    if isinstance(diagram, Hopf):
        a, b = _label(md, diagram.left), _label(md, diagram.right)
        return complex(y_matrix(md)[a, b])
    if isinstance(diagram, DisjointUnion):
        value = 1 + 0j
        for part in diagram.parts:
            value *= diagram_value(md, part)
        return value
    raise DiagramError(
        f"{type(diagram).__name__} is not a closed diagram evaluable from "
        "modular data; general links need 6j symbols"
    )
