"""Задача покупателя поверх решения продавца.

Сначала находится b (условие зависит только от g и phi_+), затем k(a, b),
отрицательный режим на (0, H) и граница a по склейке с g.
"""
import logging

import numpy as np

from apps.core.exceptions import (
    DomainError,
    InvalidShapeError,
    NoBracketError,
    ParameterError,
    UnsupportedCaseError,
)
from apps.core.models import Numerics
from apps.core.roots import ascending_candidates, locate_root
from apps.core.signals import buyer_solved
from apps.dynamics.models import Regime
from apps.odesolve.bvp import solve_linear_bvp
from apps.odesolve.fundamental import converged_phi_plus
from apps.seller.solver import seller_derivative_at, seller_value_at

from .models import BuyerSolution, KCase

logger = logging.getLogger(__name__)

SLACK = 1e-4


def gains_g(seller_sol, util, x, f):
    """g(x, f) = V(x, f) - u(x)"""
    return seller_value_at(seller_sol, util, x, f) - float(util.value(x))


def gains_derivative(seller_sol, util, x, f):
    return seller_derivative_at(seller_sol, util, x, f) - float(util.first(x))


def find_b(seller_sol, util, phi, A, xtol=1e-6, points=32):
    """Корень rho(x) = g(x,+) phi'(x) - g'(x,+) phi(x) на (L, A]"""
    L = seller_sol.L

    def rho(x):
        return (
            gains_g(seller_sol, util, x, Regime.POSITIVE) * phi.derivative(x)
            - gains_derivative(seller_sol, util, x, Regime.POSITIVE) * phi.value(x)
        )

    candidates = np.append(ascending_candidates(L, A, points), A)
    if max(gains_g(seller_sol, util, x, Regime.POSITIVE) for x in candidates) <= 0:
        raise ParameterError('g(., +) не положительна на (L, A]')
    return locate_root(rho, candidates, xtol, 'b', direction='up')


def _k_value(seller_sol, util, a, b, tail_coeff, phi):
    H = seller_sol.H
    if H <= a:
        raise UnsupportedCaseError('Ветвь k(a, b) при H <= a не поддерживается')
    if H <= b:
        return KCase.H_IN_BUY_INTERVAL, gains_g(seller_sol, util, H, Regime.POSITIVE)
    return KCase.H_ABOVE_B, tail_coeff * phi.value(H)


def solve_buyer(model, util, seller_sol, numerics=None, phi=None):
    """Интервал покупки [a, b] и кривые v_p.

    k(a, b) зависит от a только через ветвь, поэтому при a < H задача в
    отрицательном режиме фиксируется после нахождения b, и значение в L
    согласуется за один шаг.
    """
    numerics = numerics or Numerics()
    L, H, A = model.L, model.H, seller_sol.A
    phi = phi or converged_phi_plus(model, A, numerics)
    b = find_b(seller_sol, util, phi, A, xtol=numerics.tol_boundary, points=numerics.scan_points)
    g_b = gains_g(seller_sol, util, b, Regime.POSITIVE)
    tail_coeff = g_b / phi.value(b)

    # ветвь a < H; проверяется после нахождения a
    k_case, k = _k_value(seller_sol, util, L, b, tail_coeff, phi)
    vp_neg = solve_linear_bvp(model.negative, model.r, 0.0, H, 0.0, k, numerics.cells(H), knots=(L,))
    value_at_L = vp_neg.resample(L)

    def curve(a):
        g_a = gains_g(seller_sol, util, a, Regime.POSITIVE)
        return solve_linear_bvp(model.positive, model.r, L, a, value_at_L, g_a, numerics.cells(a - L))

    def residual(a):
        return curve(a).derivative_at(a) - gains_derivative(seller_sol, util, a, Regime.POSITIVE)

    try:
        a = locate_root(
            residual, ascending_candidates(L, b, numerics.scan_points), numerics.tol_boundary, 'a', direction='up'
        )
    except NoBracketError as exc:
        raise InvalidShapeError(f'Граница a не найдена на (L, b):\n{exc.describe_samples()}') from exc
    if not L < a < b:
        raise InvalidShapeError(f'a={a:.6f} вне (L, b)')
    k_case, value_at_H = _k_value(seller_sol, util, a, b, tail_coeff, phi)
    vp_pos = curve(a)

    solution = BuyerSolution(
        a=a,
        b=b,
        A=A,
        vp_pos=vp_pos,
        vp_neg=vp_neg,
        tail_coeff=tail_coeff,
        phi=phi,
        k=k,
        k_case=k_case,
        pasting_residual_a=vp_pos.derivative_at(a) - gains_derivative(seller_sol, util, a, Regime.POSITIVE),
        pasting_residual_b=tail_coeff * phi.derivative(b) - gains_derivative(seller_sol, util, b, Regime.POSITIVE),
        root_residual_b=g_b * phi.derivative(b) - gains_derivative(seller_sol, util, b, Regime.POSITIVE) * phi.value(b),
        continuity_residual_L=vp_pos.values[0] - vp_neg.resample(L),
        continuity_residual_H=vp_neg.values[-1] - value_at_H,
    )
    _check_dominance(solution, seller_sol, util)
    buyer_solved.send(sender=BuyerSolution, solution=solution)
    return solution


def _check_dominance(sol, seller_sol, util):
    pos_gains = np.array([gains_g(seller_sol, util, x, Regime.POSITIVE) for x in sol.vp_pos.nodes])
    if np.min(sol.vp_pos.values - pos_gains) < -SLACK:
        raise InvalidShapeError('v_p(., +) < g(., +) на [L, a]')
    if np.min(sol.vp_neg.values) < -SLACK:
        raise InvalidShapeError('v_p(., -) < 0')


def buyer_value_at(sol, seller_sol, util, x, f):
    """V_p(x, f) по ветвям: кривая, g на [a, b], хвост phi_+ за b"""
    regime = Regime(f)
    if not np.isfinite(x):
        raise DomainError(f'x={x!r} вне пространства состояний')
    if regime == Regime.POSITIVE:
        if x < sol.L:
            raise DomainError(f'x={x} < L в положительном режиме')
        if x < sol.a:
            return sol.vp_pos.resample(x)
        if x <= sol.b:
            return gains_g(seller_sol, util, x, regime)
        return sol.tail_coeff * sol.phi.value(x)
    if x < 0 or x > sol.H:
        raise DomainError(f'x={x} вне [0, H] в отрицательном режиме')
    return sol.vp_neg.resample(x)
