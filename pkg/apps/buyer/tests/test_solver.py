import numpy as np
import pytest

from apps.buyer.models import KCase
from apps.buyer.solver import _k_value, buyer_value_at, find_b, gains_g
from apps.closedform.oracle import buyer_negative_coefficient
from apps.core.exceptions import DomainError, UnsupportedCaseError
from apps.dynamics.models import Regime
from apps.odesolve.fundamental import fundamental_phi_plus


def test_closed_form_interval(buyer):
    assert buyer.a == pytest.approx(1.1632, abs=5e-3)
    assert buyer.b == pytest.approx(2.1686, abs=5e-3)
    assert buyer.L < buyer.a < buyer.b <= buyer.A


def test_boundary_value_at_H_uses_gains(buyer, seller, util):
    assert buyer.k_case == KCase.H_IN_BUY_INTERVAL
    assert buyer.k == pytest.approx(gains_g(seller, util, 2.0, Regime.POSITIVE))
    assert abs(buyer.continuity_residual_H) <= 1e-9
    assert abs(buyer.continuity_residual_L) <= 1e-9


def test_negative_branch_follows_derived_coefficient(buyer, seller, util):
    coefficient = buyer_negative_coefficient()
    assert coefficient == pytest.approx(0.012791, abs=1e-6)
    assert buyer_value_at(buyer, seller, util, 1.5, Regime.NEGATIVE) == pytest.approx(coefficient * 2.25, abs=1e-4)
    assert buyer_value_at(buyer, seller, util, 0.0, Regime.NEGATIVE) == 0.0


def test_residuals(buyer):
    assert abs(buyer.pasting_residual_a) <= 1e-3
    assert abs(buyer.pasting_residual_b) <= 1e-3
    assert abs(buyer.root_residual_b) <= 1e-5


def test_value_dominates_gains(buyer, seller, util):
    xs = np.linspace(1.0, 6.0, 201)
    for x in xs:
        value = buyer_value_at(buyer, seller, util, x, Regime.POSITIVE)
        assert value >= max(gains_g(seller, util, x, Regime.POSITIVE), 0.0) - 1e-4


def test_tail_is_scaled_fundamental_solution(buyer, seller, util):
    g_b = gains_g(seller, util, buyer.b, Regime.POSITIVE)
    assert buyer.tail_coeff * buyer.phi.value(buyer.b) == pytest.approx(g_b)
    assert buyer_value_at(buyer, seller, util, 4.0, Regime.POSITIVE) < g_b


def test_b_does_not_depend_on_phi_scale(buyer, seller, util):
    b = find_b(seller, util, buyer.phi.scaled(7.5), buyer.A)
    assert b == pytest.approx(buyer.b, abs=1e-5)


def test_unsupported_branch(buyer, seller, util):
    with pytest.raises(UnsupportedCaseError):
        _k_value(seller, util, 2.05, buyer.b, buyer.tail_coeff, buyer.phi)


def test_value_outside_state_space(buyer, seller, util):
    with pytest.raises(DomainError):
        buyer_value_at(buyer, seller, util, 0.9, Regime.POSITIVE)
    with pytest.raises(DomainError):
        buyer_value_at(buyer, seller, util, 2.1, Regime.NEGATIVE)


def test_buyer_waits_everywhere_in_negative_regime(buyer, seller, util):
    nodes = buyer.vp_neg.nodes[1:-1:16]
    gap = np.array([buyer.vp_neg.resample(x) - gains_g(seller, util, x, Regime.NEGATIVE) for x in nodes])
    assert np.min(gap) > -1e-4
    assert np.all(gap[nodes <= buyer.H - 1e-2] > 0)


def test_value_never_exceeds_best_gains(buyer, seller, util):
    positive = np.linspace(seller.L, 2 * seller.B, 400)
    negative = np.linspace(0.0, seller.H, 200)
    best = max(
        max(gains_g(seller, util, x, Regime.POSITIVE) for x in positive),
        max(gains_g(seller, util, x, Regime.NEGATIVE) for x in negative),
    )
    values = [buyer_value_at(buyer, seller, util, x, Regime.POSITIVE) for x in positive]
    values += [buyer_value_at(buyer, seller, util, x, Regime.NEGATIVE) for x in negative]
    assert min(values) >= -1e-4
    assert max(values) <= best + 1e-4


def test_b_is_stable_under_longer_truncation(model, buyer, seller, util, numerics):
    x_max = 2 * buyer.phi.x_max
    longer = fundamental_phi_plus(model, x_max, numerics.phi_cells(x_max - model.L))
    assert find_b(seller, util, longer, buyer.A) == pytest.approx(buyer.b, abs=1e-5)


def test_lower_level_is_a_node_of_negative_curve(buyer):
    assert buyer.L in buyer.vp_neg.nodes
