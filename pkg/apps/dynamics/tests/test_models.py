import numpy as np
import pytest
from django.core.exceptions import ValidationError

from apps.dynamics.models import DynamicsKind, ModelSpec, Regime, RegimeDynamics, UtilitySpec
from apps.dynamics.presets import NEGATIVE_GBM, PRESETS, get_preset


def test_affine_offset_defaults_to_mu():
    dyn = RegimeDynamics.affine(mu=0.1, sigma2=0.1)
    assert dyn.c == 0.1
    assert dyn.drift_values(2.0) == pytest.approx(0.3)
    assert dyn.variance_values(2.0) == pytest.approx(0.4)


def test_mean_reverting_kinds():
    vasicek = RegimeDynamics.vasicek(c=0.7, mu=0.1, sigma2=0.1)
    cir = RegimeDynamics.cir(c=0.7, mu=0.1, sigma2=0.1)
    assert vasicek.drift_values(3.0) == pytest.approx(0.4)
    assert vasicek.variance_values(3.0) == pytest.approx(0.1)
    assert cir.variance_values(3.0) == pytest.approx(0.3)
    with pytest.raises(ValidationError):
        RegimeDynamics(DynamicsKind.CIR, mu=0.1, sigma2=0.1)


def test_tabulated_interpolates_with_flat_ends():
    dyn = RegimeDynamics.tabulated((1.0, 2.0, 4.0), (0.1, 0.3, 0.0), (0.2, 0.2, 0.4))
    np.testing.assert_allclose(dyn.drift_values([0.5, 1.5, 3.0, 9.0]), [0.1, 0.2, 0.15, 0.0])
    assert dyn.variance_values(3.0) == pytest.approx(0.3)
    with pytest.raises(ValidationError):
        RegimeDynamics.tabulated((1.0, 1.0), (0.1, 0.1), (0.1, 0.1))
    with pytest.raises(ValidationError):
        RegimeDynamics.tabulated((1.0, 2.0), (0.1, 0.1), (0.1, 0.0))


def test_model_requires_ordered_levels():
    dyn = RegimeDynamics.gbm(mu=0.05, sigma2=0.1)
    with pytest.raises(ValidationError) as info:
        ModelSpec(dyn, dyn, L=2.0, H=1.0, r=0.1)
    assert 'H' in info.value.message_dict
    with pytest.raises(ValidationError):
        ModelSpec(dyn, dyn, L=1.0, H=2.0, r=0.0)


def test_dynamics_lookup_by_regime():
    flat = RegimeDynamics.tabulated((0.0, 1.5, 30.0), (0.0, 0.0, 0.0), (0.1, 0.1, 0.1))
    model = ModelSpec(flat, NEGATIVE_GBM, L=1.0, H=2.0, r=0.1)
    assert model.dynamics('+') is flat
    assert model.dynamics(Regime.NEGATIVE) is NEGATIVE_GBM


def test_regime_sign():
    assert Regime.POSITIVE.sign == 1
    assert Regime.from_sign(-1) == Regime.NEGATIVE
    assert str(Regime.NEGATIVE) == '-'


def test_utility_derivatives():
    util = UtilitySpec(0.8)
    assert util.value(2.0) == pytest.approx(2.0 ** 0.8)
    assert util.first(2.0) == pytest.approx(0.8 * 2.0 ** -0.2)
    assert util.second(2.0) == pytest.approx(0.8 * -0.2 * 2.0 ** -1.2)
    with pytest.raises(ValidationError):
        UtilitySpec(0.0)


@pytest.mark.parametrize('name', sorted(PRESETS))
def test_presets_build(name):
    preset = get_preset(name)
    assert preset.model.L == 1.0 and preset.model.H == 2.0
    assert preset.gammas == tuple(sorted(preset.gammas))


def test_affine_sweep_parameters():
    model = get_preset('affine_sweep').model
    assert model.positive.mu == 0.15
    assert model.positive.c == 0.16
    assert model.negative.mu == pytest.approx(1 / 30)
    assert model.r == 0.15
