"""Замкнутые формулы примера как эталон для решателей.

Опубликованные коэффициенты 0.0277 и 0.0138 покупателя не удовлетворяют
граничному условию v_p(H, -) = g(H, +) при a < H <= b. Эталон выводит их
из граничных условий (buyer_negative_coefficient, buyer_c2), остальные
константы берутся как есть.
"""
import math

from apps.core.exceptions import DomainError, ParameterError
from apps.dynamics.models import Regime

from .models import EXAMPLE


def negative_regime_exponents(mu, sigma2, r):
    """Корни sigma2/2 y^2 + (mu - sigma2/2) y - r = 0, (больший, меньший)"""
    if not sigma2 > 0:
        raise ParameterError('sigma2 должна быть положительной')
    a, b, c = 0.5 * sigma2, mu - 0.5 * sigma2, -r
    disc = b * b - 4 * a * c
    if disc < 0:
        raise ParameterError('Комплексные корни: нужно r >= 0')
    if b == 0 and c == 0:
        return 0.0, 0.0
    q = -0.5 * (b + math.copysign(math.sqrt(disc), b))
    roots = sorted((q / a, c / q), reverse=True)
    return roots[0], roots[1]


def _exp_branch(x):
    return (x - 1) * math.exp(2 / x)


def _linear_branch(x):
    return x + 1


def _decaying(x):
    # (x+1) - (x-1)e^(2/x) без потери точности на больших x
    return 2 - (x - 1) * math.expm1(2 / x)


def _u(x, oracle):
    return x ** oracle.gamma


def _exponents(oracle):
    return negative_regime_exponents(oracle.mu_minus, oracle.sigma2_minus, oracle.r)


def oracle_seller_value(x, f, oracle=EXAMPLE):
    """V(x, f) по трём ветвям"""
    regime = Regime(f)
    if regime == Regime.POSITIVE:
        if x < oracle.L:
            raise DomainError(f'x={x} < L в положительном режиме')
        if x >= oracle.B_star:
            return _u(x, oracle)
        c1, c2 = oracle.seller_pos
        return c1 * _exp_branch(x) + c2 * _linear_branch(x)
    if x < 0 or x > oracle.H:
        raise DomainError(f'x={x} вне [0, H]')
    if x <= oracle.m_star:
        return _u(x, oracle)
    alpha, beta = _exponents(oracle)
    c3, c4 = oracle.seller_neg
    return c3 * x**beta + c4 * x**alpha


def oracle_gains(x, f, oracle=EXAMPLE):
    return oracle_seller_value(x, f, oracle) - _u(x, oracle)


def buyer_negative_coefficient(oracle=EXAMPLE):
    """K в v_p(x, -) = K x^alpha из условия v_p(H, -) = g(H, +)"""
    alpha, _ = _exponents(oracle)
    return oracle_gains(oracle.H, Regime.POSITIVE, oracle) / oracle.H**alpha


def buyer_c2(oracle=EXAMPLE):
    """Коэффициент при (x+1) на (L, a*) из непрерывности в L"""
    alpha, _ = _exponents(oracle)
    return buyer_negative_coefficient(oracle) * oracle.L**alpha / _linear_branch(oracle.L)


def oracle_buyer_value(x, f, oracle=EXAMPLE):
    """V_p(x, f) по четырём ветвям"""
    regime = Regime(f)
    if regime == Regime.POSITIVE:
        if x < oracle.L:
            raise DomainError(f'x={x} < L в положительном режиме')
        if x < oracle.a_star:
            return oracle.buyer_pos[0] * _exp_branch(x) + buyer_c2(oracle) * _linear_branch(x)
        if x <= oracle.b_star:
            return oracle_gains(x, regime, oracle)
        return oracle.buyer_tail * _decaying(x)
    if x < 0 or x > oracle.H:
        raise DomainError(f'x={x} вне [0, H]')
    alpha, _ = _exponents(oracle)
    return buyer_negative_coefficient(oracle) * x**alpha


def printed_buyer_value(x, f, oracle=EXAMPLE):
    """Ветви покупателя с опубликованными 0.0138 и 0.0277"""
    regime = Regime(f)
    if regime == Regime.NEGATIVE:
        return oracle.buyer_neg * x**2
    if x < oracle.a_star:
        c1, c2 = oracle.buyer_pos
        return c1 * _exp_branch(x) + c2 * _linear_branch(x)
    return oracle_buyer_value(x, f, oracle)
