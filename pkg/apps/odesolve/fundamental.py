"""Убывающее фундаментальное решение phi_+ положительного режима."""
import logging

import numpy as np

from apps.core.exceptions import TruncationError

from .bvp import solve_linear_bvp
from .models import FundamentalSolution

logger = logging.getLogger(__name__)

MAX_DOUBLINGS = 8


def fundamental_phi_plus(model, x_max, n):
    """L+phi - r phi = 0 на [L, x_max], phi(x_max) = 0, затем phi(H) = 1.

    Немонотонный результат означает, что x_max слишком мал.
    """
    if not x_max > model.H:
        raise TruncationError(f'x_max={x_max} должен превышать H={model.H}', x_max=x_max)
    raw = solve_linear_bvp(model.positive, model.r, model.L, x_max, 1.0, 0.0, n)
    values = raw.values
    if not (np.all(np.diff(values) < 0) and np.all(values[:-1] > 0)):
        raise TruncationError(f'phi_+ немонотонна при x_max={x_max:g}', x_max=x_max)
    scale = raw.resample(model.H)
    return FundamentalSolution(raw.with_values(values / scale), model.H)


def _relative_change(coarse, fine, lo, hi):
    nodes = coarse.phi_plus.nodes
    window = nodes[(nodes >= lo) & (nodes <= hi)]
    a = coarse.phi_plus.resample(window)
    b = fine.phi_plus.resample(window)
    return float(np.max(np.abs(a - b) / np.abs(b)))


def converged_phi_plus(model, A, numerics):
    """phi_+ с x_max, удвоенным до стабилизации на [L, 2A].

    Начальное x_max = numerics.x_max или 10*max(H, A); шаг сетки
    фиксирован (phi_cells_per_unit), поэтому узлы при удвоении совпадают.
    """
    x_max = numerics.x_max or 10.0 * max(model.H, A)
    window_hi = 2.0 * A

    def build(limit):
        return fundamental_phi_plus(model, limit, numerics.phi_cells(limit - model.L))

    current = None
    for _ in range(MAX_DOUBLINGS):
        try:
            current = current or build(x_max)
            doubled = build(2.0 * x_max)
        except TruncationError as exc:
            logger.debug(f'phi_+: {exc}; удваиваем x_max')
            current = None
            x_max *= 2.0
            continue
        change = _relative_change(current, doubled, model.L, min(window_hi, x_max))
        logger.debug(f'phi_+: x_max={x_max:g}, относительное изменение {change:.2e}')
        if change <= numerics.tol_truncation:
            return doubled
        current = doubled
        x_max *= 2.0
    raise TruncationError(
        f'phi_+ не стабилизировалась после {MAX_DOUBLINGS} удвоений x_max (последнее {x_max:g})',
        x_max=x_max,
    )
