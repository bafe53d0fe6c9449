"""Сверка решателей с замкнутыми формулами примера."""
import math

import numpy as np

from apps.buyer.solver import buyer_value_at
from apps.core.models import CheckResult
from apps.dynamics.models import DynamicsKind, Regime
from apps.seller.models import SellerCase
from apps.seller.solver import seller_value_at

from .models import EXAMPLE
from .oracle import oracle_buyer_value, oracle_seller_value

BOUNDARY_TOLERANCE = 5e-3
VALUE_TOLERANCE = 1e-3
SAMPLES_PER_BRANCH = 1000


def is_closed_form_example(model, util, oracle=EXAMPLE):
    """Совпадает ли конфигурация с параметрами примера"""
    pos, neg = model.positive, model.negative
    close = lambda a, b: math.isclose(a, b, rel_tol=1e-9, abs_tol=1e-12)
    return (
        pos.kind == DynamicsKind.AFFINE
        and neg.kind == DynamicsKind.GBM
        and close(pos.mu, oracle.c) and close(pos.c, oracle.c) and close(pos.sigma2, oracle.c)
        and close(neg.mu, oracle.mu_minus) and close(neg.sigma2, oracle.sigma2_minus)
        and close(model.L, oracle.L) and close(model.H, oracle.H) and close(model.r, oracle.r)
        and close(util.gamma, oracle.gamma) and util.scale == 1.0
    )


def _boundary(name, value, expected, tolerance=BOUNDARY_TOLERANCE):
    error = abs(value - expected)
    return CheckResult(name, error <= tolerance, f'{value:.6f} против {expected:.6f}, ошибка {error:.1e}')


def _branch(name, solver, oracle, lo, hi):
    xs = np.linspace(lo, hi, SAMPLES_PER_BRANCH + 2)[1:-1]
    error = max(abs(solver(x) - oracle(x)) for x in xs)
    return CheckResult(name, error <= VALUE_TOLERANCE, f'max |ошибка| = {error:.2e} на ({lo:.4f}, {hi:.4f})')


def seller_oracle_checks(seller, util, oracle=EXAMPLE):
    pos, neg = Regime.POSITIVE, Regime.NEGATIVE
    value = lambda f: (lambda x: seller_value_at(seller, util, x, f))
    exact = lambda f: (lambda x: oracle_seller_value(x, f, oracle))
    return [
        _boundary('A', seller.A, oracle.A, 1e-6),
        _boundary('B', seller.B, oracle.B_star),
        _boundary('m', seller.m, oracle.m_star),
        CheckResult('случай продавца', seller.case == SellerCase.M_ABOVE_L, f'case: {seller.case}'),
        _branch('V(., +) на (L, B*)', value(pos), exact(pos), oracle.L, oracle.B_star),
        _branch('V(., +) на (B*, 2B*)', value(pos), exact(pos), oracle.B_star, 2 * oracle.B_star),
        _branch('V(., -) на (m*, H)', value(neg), exact(neg), oracle.m_star, oracle.H),
        _branch('V(., -) на (0, m*)', value(neg), exact(neg), 0.0, oracle.m_star),
    ]


def buyer_oracle_checks(buyer, seller, util, oracle=EXAMPLE):
    pos, neg = Regime.POSITIVE, Regime.NEGATIVE
    value = lambda f: (lambda x: buyer_value_at(buyer, seller, util, x, f))
    exact = lambda f: (lambda x: oracle_buyer_value(x, f, oracle))
    return [
        _boundary('a', buyer.a, oracle.a_star),
        _boundary('b', buyer.b, oracle.b_star),
        _branch('V_p(., +) на (L, a*)', value(pos), exact(pos), oracle.L, oracle.a_star),
        _branch('V_p(., +) на (a*, b*)', value(pos), exact(pos), oracle.a_star, oracle.b_star),
        _branch('V_p(., +) на (b*, 5)', value(pos), exact(pos), oracle.b_star, 5.0),
        _branch('V_p(., -) на (0, H)', value(neg), exact(neg), 0.0, oracle.H),
    ]


def run_oracle_suite(seller, buyer, util, oracle=EXAMPLE):
    results = seller_oracle_checks(seller, util, oracle)
    if buyer is not None:
        results.extend(buyer_oracle_checks(buyer, seller, util, oracle))
    return results
