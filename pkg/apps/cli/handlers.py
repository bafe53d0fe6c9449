"""Обработчики подкоманд stopline.

Каждый обработчик получает RunSpec и поток вывода и возвращает код выхода.
Ошибки решателей не перехватываются: коды для них назначает dispatch.
"""
import logging

from django.core.exceptions import ValidationError

from apps.buyer.solver import buyer_value_at, solve_buyer
from apps.closedform.checks import is_closed_form_example, run_oracle_suite
from apps.closedform.oracle import oracle_seller_value
from apps.core.exceptions import DomainError, ParameterError, StoplineError
from apps.core.models import CheckResult
from apps.seller.solver import seller_value_at, solve_seller
from apps.simulate.consistency import (
    EXAMPLE_STARTS,
    default_starts,
    mc_consistency_checks,
    perturbation_checks,
    seller_reference,
)
from apps.simulate.estimators import compare_standard_rule, mc_value
from apps.simulate.models import PathState, StoppingRule
from apps.simulate.rewards import gains_reward
from apps.sweep.emitters import emit_csv, emit_plot
from apps.sweep.runner import run_gamma_sweep

from .report import render_report, write_report, write_text, write_value_curves

logger = logging.getLogger(__name__)


def _print(stdout, lines):
    for line in lines:
        stdout.write(f'{line}\n')


def _finish_solve(spec, stdout, seller, buyer):
    text = write_report(seller, buyer, spec.outputs.report, run_spec=spec)
    write_value_curves(seller, buyer, spec.utility, spec.outputs.values)
    stdout.write(text)
    _print(stdout, [f'report: {spec.outputs.report}', f'values: {spec.outputs.values}'])
    return 0


def handle_solve_seller(spec, stdout):
    seller = solve_seller(spec.model, spec.utility, spec.numerics)
    return _finish_solve(spec, stdout, seller, None)


def handle_solve_buyer(spec, stdout):
    seller = solve_seller(spec.model, spec.utility, spec.numerics)
    buyer = solve_buyer(spec.model, spec.utility, seller, spec.numerics)
    return _finish_solve(spec, stdout, seller, buyer)


def handle_sweep(spec, stdout):
    """CSV пишется всегда; без двух успешных строк график не строится и код 1"""
    rows = run_gamma_sweep(spec.model, spec.gammas, spec.numerics)
    text = emit_csv(rows)
    write_text(spec.outputs.csv, text)
    stdout.write(text)
    _print(stdout, [f'csv: {spec.outputs.csv}'])
    for row in rows.failed():
        logger.warning(f'gamma={row.gamma:g}: {row.status} {row.detail}')
    try:
        document = emit_plot(rows, L=spec.model.L)
    except ParameterError as exc:
        logger.error(f'График не построен: {exc}')
        return 1
    write_text(spec.outputs.svg, document)
    _print(stdout, [f'svg: {spec.outputs.svg}'])
    return 0


def _simulation_start(spec, seller):
    request = spec.simulation
    if request.start_x is not None:
        return PathState(0.0, request.start_x, request.start_regime)
    x, regime = default_starts(seller)[0]
    return PathState(0.0, x, regime)


def handle_simulate(spec, stdout):
    """Оценка Монте-Карло для найденного правила и, по запросу, сравнение с BL/SH"""
    seller = solve_seller(spec.model, spec.utility, spec.numerics)
    buyer = None
    if spec.simulation.rule == 'buyer' or spec.simulation.compare_standard:
        buyer = solve_buyer(spec.model, spec.utility, seller, spec.numerics)
    start = _simulation_start(spec, seller)
    mc = spec.mc

    if spec.simulation.rule == 'buyer':
        rule, reward = StoppingRule.buyer(buyer), gains_reward(seller, spec.utility)
        reference = lambda: buyer_value_at(buyer, seller, spec.utility, start.S, start.F)
    else:
        rule, reward = StoppingRule.seller(seller), None
        reference = lambda: seller_value_at(seller, spec.utility, start.S, start.F)

    estimate = mc_value(
        spec.model, spec.utility, rule, start, mc.n_paths, mc.dt, mc.t_max, mc.seed, reward=reward
    )
    lines = [f'start: ({start.S:.10g}, {start.F})', f'rule: {rule.label}', f'estimate: {estimate}']
    try:
        lines.append(f'solver: {reference():.10g}')
    except DomainError:
        lines.append('solver: вне области определения')
    if spec.simulation.compare_standard:
        for name, report in compare_standard_rule(spec.model, spec.utility, seller, buyer, start, mc).items():
            lines.append(f'[{name}]')
            lines.extend(report.lines())
    _print(stdout, lines)
    return 0


def _buyer_or_failure(spec, seller):
    try:
        return solve_buyer(spec.model, spec.utility, seller, spec.numerics), None
    except (StoplineError, ValidationError) as exc:
        return None, CheckResult('решение покупателя', False, f'{type(exc).__name__}: {exc}')


def handle_verify(spec, stdout):
    """Сверка с замкнутыми формулами, согласие с Монте-Карло, парные сдвиги границ"""
    seller = solve_seller(spec.model, spec.utility, spec.numerics)
    buyer, failure = _buyer_or_failure(spec, seller)
    results = [failure] if failure else []

    if is_closed_form_example(spec.model, spec.utility):
        results.extend(run_oracle_suite(seller, buyer, spec.utility))
        starts = EXAMPLE_STARTS
        reference = oracle_seller_value
    else:
        logger.info('Конфигурация не совпадает с примером, замкнутые формулы пропущены')
        starts = default_starts(seller)
        reference = seller_reference(seller, spec.utility)
    results.extend(mc_consistency_checks(spec.model, spec.utility, seller, spec.mc, starts, reference))
    results.extend(perturbation_checks(spec.model, spec.utility, seller, spec.mc, starts[0]))

    _print(stdout, [str(result) for result in results])
    failed = sum(not result.passed for result in results)
    summary = f'checks: {len(results) - failed} passed, {failed} failed'
    text = render_report(seller, buyer, spec) + '\n[verify]\n' + '\n'.join(map(str, results)) + f'\n{summary}\n'
    write_text(spec.outputs.report, text)
    _print(stdout, [summary])
    return 1 if failed else 0


HANDLERS = {
    'solve-seller': handle_solve_seller,
    'solve-buyer': handle_solve_buyer,
    'sweep': handle_sweep,
    'simulate': handle_simulate,
    'verify': handle_verify,
}
