"""Tests for S/T assembly, Verlinde, degeneracy and the SL(2,Z) relations."""

from __future__ import annotations

import dataclasses
import math

import numpy as np
import pytest

from rcftkit.domain.fusion import DimensionVector, make_ring
from rcftkit.domain.modular_data import (
    ConventionError,
    ModularData,
    VerlindeError,
    assemble,
    check_sl2z,
    degenerate_sectors,
    gauss_sum,
    tensor_product,
    trivial_data,
    twists_from_T,
    verlinde,
    y_matrix,
)
from rcftkit.domain.su2 import su2_data, su2_fusion_tensor


def symmetric_z2() -> ModularData:
    """Rep(Z2) with trivial braiding: both sectors are transparent."""
    N = np.zeros((2, 2, 2), dtype=np.int64)
    for a in range(2):
        for b in range(2):
            N[a, b, (a + b) % 2] = 1
    ring = make_ring(N, [0, 1], ["1", "g"])
    d = np.ones(2)
    S = np.ones((2, 2), dtype=complex) / math.sqrt(2)
    omega = np.ones(2, dtype=complex)
    return ModularData(
        "Rep(Z2)", ring, DimensionVector(d, 2.0), omega, S, np.eye(2), 2 + 0j
    )


def test_su2_level_one_s_and_t() -> None:
    md = su2_data(1)
    expected = np.array([[1, 1], [1, -1]]) / math.sqrt(2)
    assert np.allclose(md.S, expected)
    omega, _ = twists_from_T(md.T)
    assert np.allclose(omega, [1, 1j])
    assert check_sl2z(md).passed


def test_gauss_sum_of_su2_level_one() -> None:
    sigma = gauss_sum(np.ones(2), np.array([1, 1j]))
    assert sigma == pytest.approx(1 - 1j)


def test_vacuum_row_of_y_is_d() -> None:
    md = su2_data(3)
    assert np.allclose(y_matrix(md)[0], md.d)


def test_trivial_theory() -> None:
    md = trivial_data()
    assert md.n == 1
    assert check_sl2z(md).passed
    assert degenerate_sectors(md) == (0,)


@pytest.mark.parametrize("k", range(1, 33))
def test_verlinde_reproduces_su2_fusion(k: int) -> None:
    result = verlinde(su2_data(k).S)
    assert np.array_equal(result.N, su2_fusion_tensor(k))
    assert result.residual < 1e-6


def test_verlinde_rejects_a_non_modular_s() -> None:
    S = np.array([[0.6, 0.8], [0.8, -0.6]])
    with pytest.raises(VerlindeError):
        verlinde(S)


def test_no_t_convention_for_trivial_twists_on_a_nontrivial_s() -> None:
    ring = su2_data(1).ring
    S = np.array([[1, 1], [1, -1]]) / math.sqrt(2)
    with pytest.raises(ConventionError):
        assemble("bad", ring, DimensionVector(np.ones(2), 2.0), np.ones(2), S)


def test_wrong_t_fails_the_relation_check() -> None:
    md = dataclasses.replace(su2_data(1), T=np.eye(2, dtype=complex))
    report = check_sl2z(md)
    assert not report.passed
    assert report.failures() == ("st_cubed_is_s_squared",)


def test_modular_theory_has_only_the_vacuum_degenerate() -> None:
    assert degenerate_sectors(su2_data(2)) == (0,)


def test_symmetric_z2_is_fully_degenerate() -> None:
    assert degenerate_sectors(symmetric_z2()) == (0, 1)


def test_tensor_product_with_a_degenerate_factor() -> None:
    product = tensor_product(su2_data(1), symmetric_z2())
    assert product.n == 4
    assert product.w == pytest.approx(4.0)
    assert degenerate_sectors(product) == (0, 1)


def test_tensor_product_of_modular_theories_is_modular() -> None:
    product = tensor_product(su2_data(1), su2_data(2))
    assert product.n == 6
    assert product.central_charge == 1 + su2_data(2).central_charge
    assert check_sl2z(product).passed
