import math

import numpy as np
import pytest

from apps.core.exceptions import AssumptionViolation, DomainError, ParameterError
from apps.core.models import Numerics
from apps.dynamics.generator import utility_generator
from apps.dynamics.models import Regime, UtilitySpec
from apps.dynamics.presets import get_preset
from apps.seller.models import SellerCase
from apps.seller.solver import (
    seller_derivative_at,
    seller_value_at,
    solve_negative_stage,
    solve_positive_stage,
    solve_seller,
)


def test_closed_form_boundaries(seller):
    assert seller.B == pytest.approx(3.839282, abs=5e-3)
    assert seller.m == pytest.approx(1.775502, abs=5e-3)
    assert seller.A == pytest.approx(20 / 7, abs=1e-6)
    assert seller.case == SellerCase.M_ABOVE_L
    assert seller.coupling_value == pytest.approx(1.0)


def test_residuals_within_tolerance(seller):
    assert abs(seller.pasting_residual_B) <= 1e-3
    assert abs(seller.pasting_residual_m) <= 1e-3
    assert abs(seller.continuity_residual_H) <= 1e-6


def test_value_dominates_utility(seller, util):
    for curve in (seller.v_pos, seller.v_neg):
        assert np.min(curve.values - util.value(curve.nodes)) >= -1e-4


def test_value_on_stopping_region_is_utility(seller, util):
    assert seller_value_at(seller, util, 5.0, Regime.POSITIVE) == pytest.approx(5.0 ** 0.8)
    assert seller_value_at(seller, util, 1.0, Regime.NEGATIVE) == pytest.approx(1.0)
    assert seller_value_at(seller, util, 0.0, Regime.NEGATIVE) == 0.0


def test_value_is_continuous_at_H(seller, util):
    pos = seller_value_at(seller, util, 2.0, Regime.POSITIVE)
    neg = seller_value_at(seller, util, 2.0, Regime.NEGATIVE)
    assert pos == pytest.approx(neg, abs=1e-6)


def test_smooth_fit_at_boundaries(seller, util):
    left = seller_derivative_at(seller, util, seller.B, Regime.POSITIVE)
    assert left == pytest.approx(float(util.first(seller.B)), abs=1e-3)
    right = seller_derivative_at(seller, util, seller.m, Regime.NEGATIVE)
    assert right == pytest.approx(float(util.first(seller.m)), abs=1e-3)


def test_value_outside_state_space(seller, util):
    with pytest.raises(DomainError):
        seller_value_at(seller, util, 0.5, Regime.POSITIVE)
    with pytest.raises(DomainError):
        seller_value_at(seller, util, 2.5, Regime.NEGATIVE)
    with pytest.raises(DomainError):
        seller_value_at(seller, util, math.inf, Regime.POSITIVE)


def test_grid_refinement_moves_boundaries_little(model, util, seller, numerics):
    fine = solve_seller(model, util, numerics.refined())
    assert fine.B == pytest.approx(seller.B, abs=1e-4)
    assert fine.m == pytest.approx(seller.m, abs=1e-4)


def test_infinite_pasting_tolerance_stops_at_threshold(model, util, seller):
    B, curve = solve_positive_stage(model, util, 1.0, seller.A, Numerics(tol_pasting=math.inf))
    assert B == seller.A
    assert curve.hi == seller.A


def test_negative_stage_requires_value_above_utility(model, util):
    with pytest.raises(ParameterError):
        solve_negative_stage(model, util, float(util.value(model.H)), Numerics())


def test_violated_assumptions_are_reported(model):
    with pytest.raises(AssumptionViolation):
        solve_seller(model, UtilitySpec(2.5))



def discrete_residual(curve, dyn, r):
    x, v = curve.nodes, curve.values
    hm, hp = x[1:-1] - x[:-2], x[2:] - x[1:-1]
    first = (hm**2 * v[2:] - hp**2 * v[:-2] + (hp**2 - hm**2) * v[1:-1]) / (hm * hp * (hm + hp))
    second = 2.0 * (hm * v[2:] - (hm + hp) * v[1:-1] + hp * v[:-2]) / (hm * hp * (hm + hp))
    inner = x[1:-1]
    return dyn.drift_values(inner) * first + 0.5 * dyn.variance_values(inner) * second - r * v[1:-1]


def test_generator_vanishes_on_continuation_region(model, seller):
    for curve, dyn in ((seller.v_pos, model.positive), (seller.v_neg, model.negative)):
        assert np.max(np.abs(discrete_residual(curve, dyn, model.r))) <= 10 * curve.step


def test_utility_is_supermartingale_on_stopping_region(model, util, seller):
    above_B = np.arange(seller.B, 10 * seller.B, 1e-3)
    assert np.max(utility_generator(model.positive, model.r, util, above_B)) <= 1e-12
    below_m = np.arange(1e-3, seller.m, 1e-3)
    assert np.max(utility_generator(model.negative, model.r, util, below_m)) <= 1e-12


def test_pasting_points_are_nodes(model, seller):
    (index,) = np.flatnonzero(seller.v_pos.nodes == model.H)
    assert seller.v_pos.resample(model.H) == seller.v_pos.values[index]


@pytest.mark.slow
@pytest.mark.parametrize('kind', ['vasicek_sweep', 'cir_sweep'])
def test_lower_boundary_drops_below_L_for_large_gamma(kind):
    preset = get_preset(kind, gamma=1.3)
    solution = solve_seller(preset.model, preset.utility)
    assert solution.case in (SellerCase.M_BELOW_L, SellerCase.M_ZERO)
    assert solution.m < preset.model.L
    assert abs(solution.continuity_residual_H) <= 1e-6
    assert solution.v_neg.lo == solution.m
    assert solution.v_pos.values[0] == pytest.approx(solution.v_neg.resample(preset.model.L), abs=1e-6)


@pytest.mark.slow
def test_vasicek_moderate_gamma_keeps_m_above_L():
    preset = get_preset('vasicek_sweep', gamma=0.9)
    solution = solve_seller(preset.model, preset.utility)
    assert solution.case == SellerCase.M_ABOVE_L
    assert solution.A <= solution.B
