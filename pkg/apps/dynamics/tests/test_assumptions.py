import numpy as np
import pytest

from apps.core.exceptions import AssumptionViolation, EllipticityError
from apps.dynamics.assumptions import find_A, verify_assumptions
from apps.dynamics.generator import apply_generator, drift, utility_generator, vol
from apps.dynamics.models import ModelSpec, RegimeDynamics, UtilitySpec
from apps.dynamics.presets import PRESETS, get_preset


def test_threshold_of_closed_form_example(model, util):
    assert find_A(model, util) == pytest.approx(20 / 7, abs=1e-6)


def test_generator_matches_hand_computation(model, util):
    x = 2.0
    by_hand = apply_generator(model.positive, model.r, float(util.value(x)), float(util.first(x)), float(util.second(x)), x)
    assert float(utility_generator(model.positive, model.r, util, x)) == pytest.approx(by_hand)
    assert drift(model.positive, x) == pytest.approx(0.3)
    assert vol(model.positive, x) == pytest.approx((0.4) ** 0.5)


def test_vol_rejects_zero_variance():
    dyn = RegimeDynamics.gbm(mu=0.05, sigma2=0.1)
    with pytest.raises(EllipticityError):
        vol(dyn, 0.0)


def test_report_for_closed_form_example(model, util):
    report = verify_assumptions(model, util)
    assert report.all_ok
    assert report.A == pytest.approx(20 / 7, abs=1e-6)
    assert report.lines()[0].startswith('A: 2.857142')


@pytest.mark.parametrize('name', ['affine_sweep', 'vasicek_sweep', 'cir_sweep'])
def test_presets_satisfy_sign_conditions(name):
    preset = get_preset(name)
    assert verify_assumptions(preset.model, preset.utility).all_ok


def test_growing_drift_has_no_threshold():
    # mu x u' - r u = (mu gamma - r) x^gamma > 0 для всех x
    dyn = RegimeDynamics.gbm(mu=0.5, sigma2=0.01)
    model = ModelSpec(dyn, RegimeDynamics.gbm(mu=1 / 30, sigma2=1 / 30), L=1.0, H=2.0, r=0.1)
    util = UtilitySpec(0.8)
    with pytest.raises(AssumptionViolation):
        find_A(model, util)
    report = verify_assumptions(model, util)
    assert not report.all_ok
    assert report.notes


def test_threshold_does_not_depend_on_scan_step(model, util):
    assert find_A(model, util, step=5e-4) == pytest.approx(find_A(model, util), abs=1e-8)


def test_generator_is_linear():
    rng = np.random.default_rng(11)
    dyn = RegimeDynamics.affine(mu=0.1, sigma2=0.1)
    for x in (1.0, 2.5, 7.0):
        h, h1, h2, alpha = rng.normal(size=4)
        scaled = apply_generator(dyn, 0.1, alpha * h, alpha * h1, alpha * h2, x)
        assert scaled == pytest.approx(alpha * apply_generator(dyn, 0.1, h, h1, h2, x), rel=1e-12, abs=1e-15)
        k, k1, k2 = rng.normal(size=3)
        total = apply_generator(dyn, 0.1, h + k, h1 + k1, h2 + k2, x)
        parts = apply_generator(dyn, 0.1, h, h1, h2, x) + apply_generator(dyn, 0.1, k, k1, k2, x)
        assert total == pytest.approx(parts, rel=1e-12, abs=1e-15)


def test_positive_excess_changes_sign_at_threshold(model, util):
    A = 20 / 7
    grid = np.arange(model.L + 1e-3, 10 * A, 1e-3)
    grid = grid[np.abs(grid - A) > 1e-9]
    excess = utility_generator(model.positive, model.r, util, grid)
    np.testing.assert_array_equal(np.sign(excess), np.sign(A - grid))


@pytest.mark.parametrize('name', sorted(PRESETS))
def test_presets_have_positive_volatility(name):
    model = get_preset(name).model
    grid = np.arange(1e-3, 10 * model.H, 1e-3)
    for dyn in (model.positive, model.negative):
        assert min(vol(dyn, x) for x in grid) > 0
