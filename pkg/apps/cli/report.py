"""Текстовый отчёт и CSV кривых цены.

Числа печатаются как %.10g, поэтому одинаковые конфигурация и seed дают
побайтно одинаковые файлы.
"""
import csv
import io

from apps.core.exceptions import OutputError, ParameterError
from apps.dynamics.models import Regime

VALUE_COLUMNS = ('x', 'regime', 'branch', 'value', 'utility')


def _num(value):
    return f'{value:.10g}'


def _seller_lines(sol):
    lines = [
        '[seller]',
        f'case: {sol.case}',
        f'A = {_num(sol.A)}',
        f'B = {_num(sol.B)}',
        f'm = {_num(sol.m)}',
        f'v(L,+-) = {_num(sol.coupling_value)}',
    ]
    lines.extend(f'residual.{name} = {_num(value)}' for name, value in sol.residuals.items())
    if sol.assumptions is not None:
        lines.append('assumptions:')
        lines.extend(f'  {line}' for line in sol.assumptions.lines())
    return lines


def _buyer_lines(sol):
    if sol is None:
        return ['[buyer]', 'not computed']
    lines = [
        '[buyer]',
        f'a = {_num(sol.a)}',
        f'b = {_num(sol.b)}',
        f'k_case: {sol.k_case}',
        f'k = {_num(sol.k)}',
        f'tail = {_num(sol.tail_coeff)}',
        f'phi.x_max = {_num(sol.phi.x_max)}',
    ]
    lines.extend(f'residual.{name} = {_num(value)}' for name, value in sol.residuals.items())
    return lines


def render_report(seller_sol, buyer_sol, run_spec=None):
    if seller_sol is None and buyer_sol is None:
        raise ParameterError('Для отчёта нужно хотя бы одно решение')
    lines = _seller_lines(seller_sol) if seller_sol is not None else ['[seller]', 'not computed']
    lines.append('')
    lines.extend(_buyer_lines(buyer_sol))
    if run_spec is not None:
        lines.append('')
        lines.append('[parameters]')
        lines.extend(run_spec.parameter_lines())
    elif seller_sol is not None and seller_sol.numerics is not None:
        lines.append('')
        lines.append('[numerics]')
        lines.extend(f'{key} = {value}' for key, value in seller_sol.numerics.as_dict().items())
    return '\n'.join(lines) + '\n'


def _write(path, text):
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding='utf-8')
    except OSError as exc:
        raise OutputError(path, exc.strerror or str(exc)) from exc


def write_report(seller_sol, buyer_sol, out, *, run_spec=None):
    """Отчёт в файл out (Path); возвращает текст"""
    text = render_report(seller_sol, buyer_sol, run_spec)
    _write(out, text)
    return text


def value_rows(seller_sol, buyer_sol, util):
    """Узлы всех кривых продолжения"""
    curves = []
    if seller_sol is not None:
        curves.append(('seller', Regime.POSITIVE, seller_sol.v_pos))
        curves.append(('seller', Regime.NEGATIVE, seller_sol.v_neg))
    if buyer_sol is not None:
        curves.append(('buyer', Regime.POSITIVE, buyer_sol.vp_pos))
        curves.append(('buyer', Regime.NEGATIVE, buyer_sol.vp_neg))
    for branch, regime, curve in curves:
        utility = util.value(curve.nodes)
        for x, value, u in zip(curve.nodes, curve.values, utility):
            yield {
                'x': _num(x),
                'regime': regime.value,
                'branch': branch,
                'value': _num(value),
                'utility': _num(u),
            }


def render_value_curves(seller_sol, buyer_sol, util):
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=VALUE_COLUMNS, lineterminator='\n')
    writer.writeheader()
    writer.writerows(value_rows(seller_sol, buyer_sol, util))
    return buffer.getvalue()


def write_value_curves(seller_sol, buyer_sol, util, out):
    text = render_value_curves(seller_sol, buyer_sol, util)
    _write(out, text)
    return text


def write_text(out, text):
    _write(out, text)
