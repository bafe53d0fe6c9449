"""Снос, волатильность и оператор L_f h - r h для одного режима."""
import math

import numpy as np

from apps.core.exceptions import DomainError, EllipticityError, ParameterError


def _check_price(x):
    if not math.isfinite(x) or x < 0:
        raise DomainError(f'Цена {x!r} вне пространства состояний')


def drift(dyn, x):
    """mu_f(x) по формуле вида динамики"""
    _check_price(x)
    value = float(dyn.drift_values(x))
    if not math.isfinite(value):
        raise ParameterError(f'Снос {dyn.describe()} не конечен в x={x}')
    return value


def vol(dyn, x):
    """sigma_f(x) > 0; иначе EllipticityError"""
    _check_price(x)
    variance = float(dyn.variance_values(x))
    if not math.isfinite(variance):
        raise ParameterError(f'Волатильность {dyn.describe()} не конечна в x={x}')
    if variance <= 0:
        raise EllipticityError(f'sigma^2({x}) = {variance} <= 0 для {dyn.describe()}')
    return math.sqrt(variance)


def apply_generator(dyn, r, h, h1, h2, x):
    """mu h' + sigma^2 h''/2 - r h в точке x"""
    if not all(math.isfinite(v) for v in (h, h1, h2)):
        raise ParameterError('Значения h, h\', h\'\' должны быть конечными')
    sigma = vol(dyn, x)
    return drift(dyn, x) * h1 + 0.5 * sigma * sigma * h2 - r * h


def utility_generator(dyn, r, util, x):
    """L_f u - r u на массиве цен"""
    x = np.asarray(x, dtype=float)
    return (
        dyn.drift_values(x) * util.first(x)
        + 0.5 * dyn.variance_values(x) * util.second(x)
        - r * util.value(x)
    )
