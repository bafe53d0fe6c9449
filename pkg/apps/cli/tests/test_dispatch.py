import io
from pathlib import Path

import pytest
from django.conf import settings
from django.core.management import call_command

from apps.cli.dispatch import EXIT_FAILURE, EXIT_OK, EXIT_USAGE, dispatch

PRESETS = Path(settings.STOPLINE_PRESETS_DIR)


def config_file(tmp_path, preset='affine_closed_form.cfg', extra=''):
    lines = [
        line for line in (PRESETS / preset).read_text(encoding='utf-8').splitlines()
        if not line.startswith('output.dir')
    ]
    lines.append(f'output.dir = {tmp_path / "out"}')
    path = tmp_path / 'run.cfg'
    path.write_text('\n'.join(lines) + '\n' + extra, encoding='utf-8')
    return path


def run(*argv):
    stdout, stderr = io.StringIO(), io.StringIO()
    code = dispatch([str(arg) for arg in argv], stdout, stderr)
    return code, stdout.getvalue(), stderr.getvalue()


def test_unknown_subcommand():
    code, _, err = run('solve-everything', 'x.cfg')
    assert code == EXIT_USAGE
    assert 'solve-everything' in err


def test_missing_arguments():
    assert run('solve-seller')[0] == EXIT_USAGE


def test_bad_config_exits_with_usage_code(tmp_path):
    path = tmp_path / 'bad.cfg'
    path.write_text('model.L = 1\nmodel.zeta = 2\n', encoding='utf-8')
    code, _, err = run('solve-seller', path)
    assert code == EXIT_USAGE
    assert 'строка 2' in err


def test_unwritable_output_exits_with_usage_code(tmp_path):
    path = config_file(tmp_path)
    (tmp_path / 'out' / 'report.txt').mkdir(parents=True)
    code, _, err = run('solve-seller', path)
    assert code == EXIT_USAGE
    assert 'report.txt' in err


def test_solve_seller(tmp_path):
    code, out, _ = run('solve-seller', config_file(tmp_path))
    assert code == EXIT_OK
    assert 'case: MAboveL' in out
    assert 'B = 3.83' in out
    assert 'm = 1.77' in out or 'm = 1.78' in out
    assert 'not computed' in out
    values = (tmp_path / 'out' / 'values.csv').read_text(encoding='utf-8')
    assert values.splitlines()[0] == 'x,regime,branch,value,utility'
    assert (tmp_path / 'out' / 'report.txt').read_text(encoding='utf-8') in out


def test_outputs_are_deterministic(tmp_path):
    path = config_file(tmp_path)
    run('solve-buyer', path)
    first = {name: (tmp_path / 'out' / name).read_bytes() for name in ('report.txt', 'values.csv')}
    run('solve-buyer', path)
    second = {name: (tmp_path / 'out' / name).read_bytes() for name in ('report.txt', 'values.csv')}
    assert first == second
    assert b'a = 1.16' in first['report.txt']


def test_solver_failure_exit_code(tmp_path):
    path = config_file(tmp_path)
    path.write_text(path.read_text(encoding='utf-8').replace('utility.gamma = 0.8', 'utility.gamma = 2.5'))
    code, _, err = run('solve-seller', path)
    assert code == EXIT_FAILURE
    assert 'AssumptionViolation' in err


def test_simulate_prints_estimate(tmp_path):
    extra = 'mc.n_paths = 500\nmc.dt = 0.005\nmc.t_max = 40\nmc.start_x = 2\n'
    code, out, _ = run('simulate', config_file(tmp_path, extra=extra))
    assert code == EXIT_OK
    assert 'estimate: ' in out
    assert 'solver: 1.792' in out


def test_sweep_without_plot_exits_with_failure(tmp_path):
    code, out, _ = run('sweep', config_file(tmp_path, extra='sweep.gammas = 0.8, 2.5\n'))
    assert code == EXIT_FAILURE
    assert (tmp_path / 'out' / 'sweep.csv').exists()
    assert not (tmp_path / 'out' / 'sweep.svg').exists()
    assert 'assumption_failed' in out


def test_management_command(tmp_path):
    stdout = io.StringIO()
    call_command('stopline', 'solve-seller', str(config_file(tmp_path)), stdout=stdout)
    assert 'case: MAboveL' in stdout.getvalue()


@pytest.mark.slow
def test_verify_closed_form_example(tmp_path):
    extra = 'mc.n_paths = 8000\nmc.t_max = 100\n'
    code, out, err = run('verify', config_file(tmp_path, extra=extra))
    assert code == EXIT_OK, out + err
    assert '[FAIL]' not in out
    assert 'checks: ' in out


@pytest.mark.slow
def test_vasicek_report_shows_lower_case(tmp_path):
    path = config_file(tmp_path, preset='vasicek_sweep.cfg')
    path.write_text(path.read_text(encoding='utf-8').replace('utility.gamma = 0.8', 'utility.gamma = 1.3'))
    code, out, _ = run('solve-seller', path)
    assert code == EXIT_OK
    assert 'case: MBelowL' in out
