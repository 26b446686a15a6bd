"""Exact truncated Laurent series in q.

A series knows its coefficients on the half-open exponent window
``[lead, order)``. Everything at or above ``order`` is unknown, and every
operation propagates that horizon pessimistically: no coefficient is ever
reported beyond what the operands determine.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from fractions import Fraction

Coefficient = int | Fraction


class QSeriesError(ValueError):
    """Base class for q-series errors."""


class TruncationError(QSeriesError):
    """A coefficient at or beyond the truncation order was requested."""


class NonInvertibleSeriesError(QSeriesError):
    """The series has no inverse in the requested coefficient ring."""


def _normalise(value: Coefficient) -> Coefficient:
    if isinstance(value, Fraction) and value.denominator == 1:
        return int(value.numerator)
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return value
    raise QSeriesError(f"coefficients must be int or Fraction, got {value!r}")


@dataclass(frozen=True, slots=True)
class QSeries:
    """Laurent series ``sum coeffs[i] * q**(lead + i)`` known below ``order``."""

    lead: int
    coeffs: tuple[Coefficient, ...]
    order: int

    def __post_init__(self) -> None:
        if self.order < self.lead:
            raise QSeriesError(
                f"order {self.order} lies below the lead exponent {self.lead}"
            )
        width = self.order - self.lead
        if len(self.coeffs) > width:
            raise QSeriesError(
                f"{len(self.coeffs)} coefficients do not fit in [{self.lead}, "
                f"{self.order})"
            )
        padded = tuple(_normalise(c) for c in self.coeffs)
        padded += (0,) * (width - len(padded))
        object.__setattr__(self, "coeffs", padded)

    @classmethod
    def from_coefficients(
        cls,
        coeffs: Iterable[Coefficient],
        lead: int = 0,
        order: int | None = None,
    ) -> QSeries:
        """Build a series; ``order`` defaults to just past the last coefficient."""
        values = tuple(coeffs)
        return cls(lead, values, lead + len(values) if order is None else order)

    @classmethod
    def monomial(cls, exponent: int, order: int, coeff: Coefficient = 1) -> QSeries:
        """Return ``coeff * q**exponent`` known below ``order``."""
        if exponent >= order:
            return cls(order, (), order)
        return cls(exponent, (coeff,), order)

    def coefficient(self, exponent: int) -> Coefficient:
        """Return the coefficient of ``q**exponent``."""
        if exponent >= self.order:
            raise TruncationError(
                f"q^{exponent} lies at or beyond the truncation order {self.order}"
            )
        if exponent < self.lead:
            return 0
        return self.coeffs[exponent - self.lead]

    def terms(self) -> Iterator[tuple[int, Coefficient]]:
        """Yield ``(exponent, coefficient)`` for every nonzero known term."""
        for offset, value in enumerate(self.coeffs):
            if value != 0:
                yield self.lead + offset, value

    def valuation(self) -> int | None:
        """Return the lowest exponent with a nonzero coefficient."""
        for exponent, _ in self.terms():
            return exponent
        return None

    def is_exact_integer(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def truncate(self, order: int) -> QSeries:
        """Forget every coefficient at or above ``order``."""
        if order >= self.order:
            return self
        if order <= self.lead:
            return QSeries(order, (), order)
        return QSeries(self.lead, self.coeffs[: order - self.lead], order)

    def shift(self, k: int) -> QSeries:
        """Multiply by ``q**k``."""
        return QSeries(self.lead + k, self.coeffs, self.order + k)

    def __neg__(self) -> QSeries:
        return QSeries(self.lead, tuple(-c for c in self.coeffs), self.order)

    def __add__(self, other: QSeries | Coefficient) -> QSeries:
        other_series = _coerce(other, self.order)
        if other_series is None:
            return NotImplemented
        lead = min(self.lead, other_series.lead)
        order = min(self.order, other_series.order)
        if order <= lead:
            return QSeries(order, (), order)
        coeffs = tuple(
            self.coefficient(e) + other_series.coefficient(e)
            for e in range(lead, order)
        )
        return QSeries(lead, coeffs, order)

    __radd__ = __add__

    def __sub__(self, other: QSeries | Coefficient) -> QSeries:
        other_series = _coerce(other, self.order)
        if other_series is None:
            return NotImplemented
        return self + (-other_series)

    def __rsub__(self, other: Coefficient) -> QSeries:
        return (-self) + other

    def __mul__(self, other: QSeries | Coefficient) -> QSeries:
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return QSeries(self.lead, tuple(c * other for c in self.coeffs), self.order)
        if not isinstance(other, QSeries):
            return NotImplemented
        lead = self.lead + other.lead
        order = min(self.order + other.lead, other.order + self.lead)
        width = order - lead
        if width <= 0:
            return QSeries(order, (), order)
        out: list[Coefficient] = [0] * width
        for i, a in enumerate(self.coeffs[:width]):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs[: width - i]):
                if b:
                    out[i + j] += a * b
        return QSeries(lead, tuple(out), order)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> QSeries:
        return series_pow(self, exponent)

    def invert(self, exact: bool = False) -> QSeries:
        return series_invert(self, exact=exact)


def _coerce(value: QSeries | Coefficient, order: int) -> QSeries | None:
    if isinstance(value, QSeries):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return QSeries.monomial(0, max(order, 1), value)
    return None


def one(order: int) -> QSeries:
    """Return the constant series 1 known below ``order``."""
    return QSeries.monomial(0, order)


def series_add(a: QSeries, b: QSeries | Coefficient) -> QSeries:
    return a + b


def series_mul(a: QSeries, b: QSeries | Coefficient) -> QSeries:
    return a * b


def series_pow(a: QSeries, exponent: int) -> QSeries:
    """Raise ``a`` to a nonnegative power by repeated squaring."""
    if exponent < 0:
        return series_pow(series_invert(a), -exponent)
    result = one(a.order - a.lead)
    base = a
    first = True
    while exponent:
        if exponent & 1:
            result = base if first else result * base
            first = False
        exponent >>= 1
        if exponent:
            base = base * base
    return result


def series_invert(a: QSeries, exact: bool = False) -> QSeries:
    """Return ``1 / a``.

    In integer mode the lowest nonzero coefficient must be a unit (+1 or
    -1); ``exact=True`` allows any nonzero rational and produces Fractions.
    The relative precision ``order - valuation`` is preserved.
    """
    valuation = a.valuation()
    if valuation is None:
        raise NonInvertibleSeriesError("cannot invert a series that is zero to order")
    head = a.coefficient(valuation)
    if exact:
        unit_inverse: Coefficient = Fraction(1) / Fraction(head)
    elif head in (1, -1) and isinstance(head, int):
        unit_inverse = head
    else:
        raise NonInvertibleSeriesError(
            f"lowest coefficient {head} is not a unit over the integers"
        )
    precision = a.order - valuation
    tail = [a.coefficient(valuation + i) for i in range(precision)]
    out: list[Coefficient] = [unit_inverse]
    for n in range(1, precision):
        acc: Coefficient = 0
        for i in range(1, n + 1):
            if tail[i]:
                acc += tail[i] * out[n - i]
        out.append(-unit_inverse * acc)
    return QSeries(-valuation, tuple(out), -valuation + precision)
