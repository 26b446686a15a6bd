"""Tests for j, J, characters, the Monster order and McKay decompositions."""

from __future__ import annotations

import math
from fractions import Fraction

import pytest

from rcftkit.domain.moonshine import (
    CharacterSpec,
    J_series,
    MoonshineError,
    character,
    discriminant,
    eisenstein_e4,
    euler_product,
    j_series,
    mckay_check,
    monster_order,
    sigma3,
)
from rcftkit.domain.qseries import TruncationError

J_COEFFICIENTS = (
    1,
    744,
    196884,
    21493760,
    864299970,
    20245856256,
    333202640600,
)
MONSTER_IRREPS = (1, 196883, 21296876, 842609326)


@pytest.mark.parametrize(
    ("n", "expected"), [(1, 1), (2, 9), (3, 28), (4, 73), (6, 252)]
)
def test_sigma3(n: int, expected: int) -> None:
    assert sigma3(n) == expected


def test_sigma3_is_multiplicative_on_coprime_arguments() -> None:
    for a in range(1, 101):
        for b in range(1, 101):
            if math.gcd(a, b) == 1:
                assert sigma3(a * b) == sigma3(a) * sigma3(b), (a, b)


def test_sigma3_rejects_zero() -> None:
    with pytest.raises(MoonshineError):
        sigma3(0)


def test_e4_head() -> None:
    assert eisenstein_e4(4).coeffs == (1, 240, 2160, 6720)


def test_euler_product_follows_the_pentagonal_numbers() -> None:
    assert euler_product(8).coeffs == (1, -1, -1, 0, 0, 1, 0, 1)


def test_discriminant_gives_ramanujan_tau() -> None:
    delta = discriminant(6)
    assert [delta.coefficient(n) for n in range(1, 6)] == [1, -24, 252, -1472, 4830]


def test_j_coefficients() -> None:
    j = j_series(5)
    assert j.lead == -1
    assert j.order == 6
    assert tuple(j.coefficient(n) for n in range(-1, 6)) == J_COEFFICIENTS
    assert j.is_exact_integer()


def test_j_times_discriminant_is_e4_cubed_through_q50() -> None:
    product = j_series(50) * discriminant(52)
    cube = eisenstein_e4(51) ** 3
    assert (product.lead, product.order) == (0, 51)
    assert product.coeffs == cube.coeffs
    assert j_series(50).coefficient(50) > 0


def test_j_stops_at_n_max() -> None:
    with pytest.raises(TruncationError):
        j_series(3).coefficient(4)


def test_big_j_has_no_constant_term() -> None:
    J = J_series(2)
    assert J.coefficient(-1) == 1
    assert J.coefficient(0) == 0
    assert J.coefficient(1) == 196884


def test_character_of_the_moonshine_module_is_laurent() -> None:
    spec = CharacterSpec((1, 0, 196884), Fraction(0), Fraction(24))
    graded = character(spec, 2).as_laurent()
    assert graded.coefficient(-1) == 1
    assert graded.coefficient(1) == 196884


def test_fractional_offset_stays_metadata() -> None:
    spec = CharacterSpec((1, 1), Fraction(1, 16), Fraction(1, 2))
    chi = character(spec, 1)
    assert chi.offset == Fraction(1, 24)
    with pytest.raises(MoonshineError):
        chi.as_laurent()


def test_negative_graded_dimension_is_rejected() -> None:
    with pytest.raises(MoonshineError):
        CharacterSpec((1, -1), Fraction(0), Fraction(0))


def test_monster_order() -> None:
    order = monster_order()
    assert len(str(order)) == 54
    assert order % 71 == 0
    assert str(order).startswith("80801742479451287588645990496171075700575436")


@pytest.mark.parametrize(
    ("coeff", "expected"),
    [
        (196884, {1: 1, 196883: 1}),
        (21493760, {1: 1, 196883: 1, 21296876: 1}),
        (864299970, {1: 2, 196883: 2, 21296876: 1, 842609326: 1}),
    ],
)
def test_mckay_decompositions(coeff: int, expected: dict[int, int]) -> None:
    report = mckay_check(coeff, MONSTER_IRREPS)
    assert report.found
    assert report.decompositions == (expected,)


def test_mckay_respects_the_bound() -> None:
    report = mckay_check(196884, MONSTER_IRREPS, bound=0)
    assert not report.found


def test_mckay_needs_the_trivial_irrep_first() -> None:
    with pytest.raises(MoonshineError):
        mckay_check(10, (2, 3))
