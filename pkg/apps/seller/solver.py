"""Задача продавца: границы B, m и функция цены V.

Этап 1 предполагает m >= L: положительный режим решается с v(L,+) = u(L),
затем отрицательный с v(H,-) = v(H,+). Если m < L, этап 2 ищет общее
значение w = v(L,+-), при котором склеиваются значения в H.
"""
import logging
import math

import numpy as np

from apps.core.exceptions import (
    AssumptionViolation,
    ConvergenceError,
    DomainError,
    InvalidShapeError,
    NoBracketError,
    ParameterError,
)
from apps.core.models import Numerics
from apps.core.roots import descending_candidates, locate_root, refine_root, scan_sign_change
from apps.core.signals import seller_solved
from apps.dynamics.assumptions import verify_assumptions
from apps.dynamics.models import Regime
from apps.odesolve.bvp import solve_bvp_basis, solve_linear_bvp

from .models import SellerCase, SellerSolution

logger = logging.getLogger(__name__)

SLACK = 1e-4
MAX_WIDENINGS = 8


def _u(util, x):
    return float(util.value(x))


def _du(util, x):
    return float(util.first(x))


def default_B_max(model, A, numerics):
    return numerics.B_max or max(10.0 * A, 2.0 * model.H)


def positive_curve(model, util, v_at_L, B, numerics):
    """Кривая продолжения на [L, B] с v(B) = u(B)"""
    return solve_linear_bvp(
        model.positive, model.r, model.L, B, v_at_L, _u(util, B), numerics.cells(B - model.L),
        knots=(model.H,),
    )


def negative_curve(model, util, m, v_at_H, numerics):
    """Кривая продолжения на [m, H] с v(m) = u(m)"""
    return solve_linear_bvp(
        model.negative, model.r, m, model.H, _u(util, m), v_at_H, numerics.cells(model.H - m),
        knots=(model.L,),
    )


def _positive_value_at(v_pos, util, x):
    return _u(util, x) if x >= v_pos.hi else v_pos.resample(x)


def solve_positive_stage(model, util, v_at_L, A, numerics, hint=None):
    """Граница B на [A, B_max] по склейке v'(B-) = u'(B).

    hint: граница с предыдущей итерации этапа 2; если невязка меняет знак
    в её окрестности, скан не нужен.
    """
    if v_at_L < _u(util, model.L) - 1e-12:
        raise ParameterError(f'v(L,+)={v_at_L:.10g} меньше u(L)')
    B_max = default_B_max(model, A, numerics)
    if not B_max > A:
        raise ParameterError(f'B_max={B_max:g} должен превышать A={A:g}')

    def residual(B):
        return positive_curve(model, util, v_at_L, B, numerics).derivative_at(B) - _du(util, B)

    first = residual(A)
    if abs(first) <= numerics.tol_pasting:
        return A, positive_curve(model, util, v_at_L, A, numerics)

    B = None
    if hint is not None:
        delta = 0.05 * (hint - model.L)
        lo, hi = max(A, hint - delta), min(B_max, hint + delta)
        if lo < hi and residual(lo) < 0 < residual(hi):
            B = refine_root(residual, lo, hi, numerics.tol_boundary, 'B')
    if B is None:
        points = np.linspace(A, B_max, numerics.scan_points)
        B = locate_root(residual, points, numerics.tol_boundary, 'B', direction='up')

    curve = positive_curve(model, util, v_at_L, B, numerics)
    pasting = curve.derivative_at(B) - _du(util, B)
    if abs(pasting) > numerics.tol_pasting:
        raise ConvergenceError(f'Невязка склейки в B={B:.6f}: {pasting:.2e}', residual=pasting)
    return B, curve


def solve_negative_stage(model, util, v_at_H, numerics):
    """Граница m на [0, H) по склейке v'(m+) = u'(m); m = 0, если склейки нет"""
    if not v_at_H > _u(util, model.H):
        raise ParameterError(f'v(H,-)={v_at_H:.10g} должно превышать u(H)')

    def residual(m):
        return negative_curve(model, util, m, v_at_H, numerics).derivative_at(m) - _du(util, m)

    candidates = descending_candidates(model.H, 0.0, numerics.scan_points)
    pair, samples = scan_sign_change(residual, candidates, direction='down')
    if samples[0][1] <= 0:
        raise InvalidShapeError(
            f'm = H - {model.H - samples[0][0]:.1e}: в отрицательном режиме нет продолжения'
        )
    if pair is None:
        logger.debug('Склейка в отрицательном режиме не найдена, m = 0')
        curve = negative_curve(model, util, 0.0, v_at_H, numerics)
        return 0.0, curve
    lo, hi = sorted(pair)
    m = lo if lo == hi else refine_root(residual, lo, hi, numerics.tol_boundary, 'm')
    return m, negative_curve(model, util, m, v_at_H, numerics)


def _negative_through_L(model, util, w, numerics):
    """m < L при v(m) = u(m), v(L) = w и склейке в m.

    Возвращает (m, кривая на [m, H], v(H,-)). Кривая собирается из
    базиса двух краевых задач, поэтому условие в L выполняется точно.
    """

    def assemble(m):
        e_lo, e_hi = solve_bvp_basis(
            model.negative, model.r, m, model.H, numerics.cells(model.H - m), knots=(model.L,)
        )
        um = _u(util, m)
        at_H = (w - um * e_lo.resample(model.L)) / e_hi.resample(model.L)
        return e_lo.combine(um, e_hi, at_H), at_H

    def residual(m):
        curve, _ = assemble(m)
        return curve.derivative_at(m) - _du(util, m)

    candidates = descending_candidates(model.L, 0.0, numerics.scan_points)
    pair, samples = scan_sign_change(residual, candidates, direction='down')
    if samples[0][1] <= 0:
        raise NoBracketError('m', candidates.min(), candidates.max(), samples)
    if pair is None:
        m = 0.0
    else:
        lo, hi = sorted(pair)
        m = lo if lo == hi else refine_root(residual, lo, hi, numerics.tol_boundary, 'm')
    curve, at_H = assemble(m)
    return m, curve, at_H


def _solve_coupled(model, util, A, numerics):
    """Этап 2: поиск w = v(L,+-) по невязке v(H,+) - v(H,-)"""
    u_L = _u(util, model.L)
    span = _u(util, model.H) - u_L
    span = span if span > 0 else 1.0
    results = {}
    state = {'hint': None}

    def continuity(w):
        B, v_pos = solve_positive_stage(model, util, w, A, numerics, hint=state['hint'])
        state['hint'] = B
        m, v_neg, at_H = _negative_through_L(model, util, w, numerics)
        value = _positive_value_at(v_pos, util, model.H) - at_H
        results[w] = (B, v_pos, m, v_neg, value)
        return value

    samples = []
    lo = None
    for fraction in (1e-6, 1e-4, 1e-2):
        w = u_L + fraction * span
        try:
            samples.append((w, continuity(w)))
        except NoBracketError:
            continue
        lo = w
        break
    if lo is None:
        raise ConvergenceError('Этап 2: нет допустимого w у нижнего края', samples=samples)

    hi = u_L + 10.0 * span
    for _ in range(MAX_WIDENINGS):
        samples.append((hi, continuity(hi)))
        if samples[-1][1] * results[lo][4] <= 0:
            break
        hi = u_L + 2.0 * (hi - u_L)
    else:
        raise ConvergenceError(
            f'Этап 2: невязка непрерывности в H не меняет знак на [{lo:.6g}, {hi:.6g}]',
            samples=samples,
        )

    xtol = 1e-3 * min(numerics.tol_boundary, numerics.tol_continuity)
    w = refine_root(continuity, lo, hi, xtol, 'w', maxiter=200)
    if w not in results:
        continuity(w)
    B, v_pos, m, v_neg, value = results[w]
    if abs(value) > numerics.tol_continuity:
        raise ConvergenceError(
            f'Этап 2: |v(H,+) - v(H,-)| = {abs(value):.2e} при w={w:.10g}',
            residual=value,
            samples=sorted((k, v[4]) for k, v in results.items()),
        )
    return w, B, v_pos, m, v_neg, value


def _check_dominance(curve, util, label):
    gap = curve.values - util.value(curve.nodes)
    if np.min(gap) < -SLACK:
        raise InvalidShapeError(f'{label}: V < u на {np.min(gap):.2e}')


def solve_seller(model, util, numerics=None):
    """Решение задачи продавца (этап 1, при необходимости этап 2)"""
    numerics = numerics or Numerics()
    report = verify_assumptions(model, util)
    if not report.all_ok:
        raise AssumptionViolation('; '.join(report.notes) or 'Условия знака не выполнены')
    A = report.A

    w = _u(util, model.L)
    B, v_pos = solve_positive_stage(model, util, w, A, numerics)
    v_at_H = _positive_value_at(v_pos, util, model.H)
    if not v_at_H > _u(util, model.H):
        raise InvalidShapeError(f'B={B:.6f} <= H: v(H,+) = u(H), продолжения в режиме - нет')
    m, v_neg = solve_negative_stage(model, util, v_at_H, numerics)
    continuity = v_neg.values[-1] - v_at_H

    if m >= model.L:
        case = SellerCase.M_ABOVE_L
    else:
        logger.debug(f'Этап 1 дал m={m:.6f} < L, переходим к этапу 2')
        w, B, v_pos, m, v_neg, continuity = _solve_coupled(model, util, A, numerics)
        case = SellerCase.M_ZERO if m == 0.0 else SellerCase.M_BELOW_L

    pasting_B = v_pos.derivative_at(B) - _du(util, B)
    pasting_m = v_neg.derivative_at(m) - _du(util, m) if m > 0 else 0.0
    if m > 0 and abs(pasting_m) > numerics.tol_pasting:
        raise ConvergenceError(f'Невязка склейки в m={m:.6f}: {pasting_m:.2e}', residual=pasting_m)
    _check_dominance(v_pos, util, 'v(.,+)')
    _check_dominance(v_neg, util, 'v(.,-)')

    solution = SellerSolution(
        B=B,
        m=m,
        case=case,
        v_pos=v_pos,
        v_neg=v_neg,
        pasting_residual_B=pasting_B,
        pasting_residual_m=pasting_m,
        continuity_residual_H=continuity,
        A=A,
        coupling_value=w,
        assumptions=report,
        numerics=numerics,
    )
    seller_solved.send(sender=SellerSolution, solution=solution)
    return solution


def seller_value_at(sol, util, x, f):
    """V(x, f): u на области остановки, кривая продолжения иначе"""
    regime = Regime(f)
    slack = 1e-12 * max(1.0, sol.H)
    if not math.isfinite(x):
        raise DomainError(f'x={x!r} вне пространства состояний')
    if regime == Regime.POSITIVE:
        if x < sol.L - slack:
            raise DomainError(f'x={x} < L в положительном режиме')
        if x >= sol.B:
            return _u(util, x)
        return sol.v_pos.resample(max(x, sol.L))
    if x < 0 or x > sol.H + slack:
        raise DomainError(f'x={x} вне [0, H] в отрицательном режиме')
    if x <= sol.m:
        return _u(util, x)
    return sol.v_neg.resample(min(x, sol.H))


def seller_derivative_at(sol, util, x, f):
    """dV/dx; в B берётся левая производная кривой продолжения"""
    regime = Regime(f)
    if regime == Regime.POSITIVE:
        return _du(util, x) if x > sol.B else sol.v_pos.derivative_at(max(x, sol.L))
    return _du(util, x) if x < sol.m else sol.v_neg.derivative_at(min(max(x, sol.v_neg.lo), sol.H))
