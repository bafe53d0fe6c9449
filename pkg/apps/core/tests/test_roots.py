import math

import pytest
from django.core.exceptions import ValidationError

from apps.core.exceptions import ConfigError, ConvergenceError, DomainError, NoBracketError, StoplineError
from apps.core.models import CheckResult, MonteCarloParams, Numerics
from apps.core.roots import (
    ascending_candidates,
    descending_candidates,
    locate_root,
    refine_root,
    scan_sign_change,
    sign,
)


def test_sign_deadband():
    assert sign(1e-13) == 0
    assert sign(-0.5) == -1
    assert sign(2.0) == 1


def test_scan_respects_direction():
    fn = lambda x: math.sin(x)
    points = [0.5 + 0.5 * i for i in range(14)]
    pair, _ = scan_sign_change(fn, points, direction='up')
    assert pair[0] < 2 * math.pi < pair[1]
    pair, _ = scan_sign_change(fn, points, direction='down')
    assert pair[0] < math.pi < pair[1]


def test_scan_skips_non_finite_values():
    values = {0.0: -1.0, 1.0: float('nan'), 2.0: 1.0}
    pair, samples = scan_sign_change(values.get, [0.0, 1.0, 2.0])
    assert pair == (0.0, 2.0)
    assert len(samples) == 3


def test_locate_root_refines_with_brentq():
    root = locate_root(lambda x: x * x - 2.0, [0.0, 1.0, 2.0], 1e-12, 'x')
    assert root == pytest.approx(math.sqrt(2.0), abs=1e-10)


def test_locate_root_without_sign_change_reports_samples():
    with pytest.raises(NoBracketError) as info:
        locate_root(lambda x: x * x + 1.0, [0.0, 1.0, 2.0], 1e-8, 'B')
    assert info.value.quantity == 'B'
    assert len(info.value.samples) == 3
    assert '2' in info.value.describe_samples()



def test_refine_root_wraps_scipy_failures():
    with pytest.raises(ConvergenceError) as info:
        refine_root(lambda x: x * x + 1.0, -1.0, 1.0, 1e-8, 'B')
    assert isinstance(info.value, StoplineError)
    assert isinstance(info.value.__cause__, ValueError)
    with pytest.raises(ConvergenceError):
        refine_root(lambda x: x**3 - 2.0, 0.0, 2.0, 1e-14, 'm', maxiter=2)


def test_refine_root_keeps_domain_errors():
    def residual(x):
        raise DomainError(f'x={x}')

    with pytest.raises(DomainError):
        refine_root(residual, 0.0, 1.0, 1e-8, 'a')


def test_candidates_stay_inside_and_are_ordered():
    down = descending_candidates(2.0, 0.0, 32)
    assert down[0] < 2.0 and down[-1] > 0.0
    assert (down[:-1] > down[1:]).all()
    up = ascending_candidates(1.0, 3.0, 32)
    assert up[0] > 1.0 and up[-1] < 3.0
    assert (up[:-1] < up[1:]).all()
    assert up[0] - 1.0 < 1e-6


def test_numerics_defaults_and_validation():
    numerics = Numerics()
    assert numerics.tol_boundary == 1e-6
    assert numerics.tol_pasting == 1e-3
    assert numerics.cells(0.5) == 2048
    assert numerics.refined().cells_per_unit == 8192
    with pytest.raises(ValidationError) as info:
        Numerics(tol_continuity=0.0)
    assert 'tol_continuity' in info.value.message_dict


def test_monte_carlo_params():
    params = MonteCarloParams(dt=0.01, t_max=1.0)
    assert params.n_steps == 100
    assert params.with_dt(0.005).n_steps == 200
    with pytest.raises(ValidationError):
        MonteCarloParams(n_paths=0)


def test_check_result_text():
    assert str(CheckResult('B', True, 'ok')) == '[PASS] B: ok'
    assert str(CheckResult('m', False)) == '[FAIL] m'


def test_config_error_names_line_and_key():
    error = ConfigError('неизвестный ключ', line=3, key='model.q')
    assert str(error) == 'строка 3, model.q: неизвестный ключ'
