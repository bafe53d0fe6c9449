"""Краевые задачи mu v' + sigma^2 v''/2 - r v = 0 на сетке.

Трёхточечные разности второго порядка дают трёхдиагональную систему,
которая решается scipy.linalg.solve_banded. Внутренние точки из knots
становятся узлами: сетка равномерна на каждом куске между ними.
"""
import math

import numpy as np
from scipy.linalg import LinAlgError, solve_banded

from apps.core.exceptions import EllipticityError, NumericalFailure, ParameterError

from .models import MIN_CELLS, GridFunction


def mesh_nodes(lo, hi, n, knots=()):
    """Узлы на [lo, hi]: n ячеек, либо куски с шагом не больше (hi - lo)/n.

    Точка из knots ближе половины шага к концу куска пропускается.
    Возвращает (узлы, признак неравномерности).
    """
    if not lo < hi:
        raise ParameterError(f'Нужно lo < hi, получено [{lo}, {hi}]')
    if n < MIN_CELLS:
        raise ParameterError(f'Нужно n >= {MIN_CELLS}, получено {n}')
    step = (hi - lo) / n
    edges = [lo]
    for knot in sorted(float(k) for k in knots):
        if edges[-1] + 0.5 * step < knot < hi - 0.5 * step:
            edges.append(knot)
    edges.append(hi)
    if len(edges) == 2:
        return np.linspace(lo, hi, n + 1), False
    pieces = [
        np.linspace(a, b, max(1, math.ceil((b - a) / step - 1e-9)) + 1)[:-1]
        for a, b in zip(edges[:-1], edges[1:])
    ]
    return np.concatenate(pieces + [[hi]]), True


def _assemble(dyn, r, nodes):
    inner = nodes[1:-1]
    widths = np.diff(nodes)
    hm, hp = widths[:-1], widths[1:]
    mu = dyn.drift_values(inner)
    s2 = dyn.variance_values(inner)
    if not np.all(s2 > 0):
        raise EllipticityError(f'sigma^2 <= 0 на [{nodes[0]:.6g}, {nodes[-1]:.6g}] для {dyn.describe()}')
    lower = (s2 - mu * hp) / (hm * (hm + hp))
    upper = (s2 + mu * hm) / (hp * (hm + hp))
    diagonal = -s2 / (hm * hp) + mu * (hp - hm) / (hm * hp) - r
    size = nodes.size - 2
    banded = np.zeros((3, size))
    banded[0, 1:] = upper[:-1]
    banded[1, :] = diagonal
    banded[2, :-1] = lower[1:]
    return banded, lower[0], upper[-1]


def _solve(banded, rhs, where):
    try:
        solution = solve_banded((1, 1), banded, rhs, check_finite=False)
    except (LinAlgError, ValueError) as exc:
        raise NumericalFailure(f'Вырожденная трёхдиагональная система на {where}') from exc
    if not np.all(np.isfinite(solution)):
        raise NumericalFailure(f'Нечисловое решение краевой задачи на {where}')
    return solution


def _grid_function(lo, hi, values, nodes, uneven):
    return GridFunction(lo, hi, values, nodes if uneven else None)


def solve_linear_bvp(dyn, r, lo, hi, v_lo, v_hi, n, knots=()):
    """Решение с данными Дирихле v(lo) = v_lo, v(hi) = v_hi"""
    nodes, uneven = mesh_nodes(lo, hi, n, knots)
    banded, first_lower, last_upper = _assemble(dyn, r, nodes)
    rhs = np.zeros(nodes.size - 2)
    rhs[0] -= first_lower * v_lo
    rhs[-1] -= last_upper * v_hi
    inner = _solve(banded, rhs, f'[{lo:.6g}, {hi:.6g}]')
    return _grid_function(lo, hi, np.concatenate(([v_lo], inner, [v_hi])), nodes, uneven)


def solve_bvp_basis(dyn, r, lo, hi, n, knots=()):
    """Базис (e_lo, e_hi): e_lo(lo)=1, e_lo(hi)=0 и e_hi(lo)=0, e_hi(hi)=1.

    Обе задачи решаются одной факторизацией.
    """
    nodes, uneven = mesh_nodes(lo, hi, n, knots)
    banded, first_lower, last_upper = _assemble(dyn, r, nodes)
    rhs = np.zeros((nodes.size - 2, 2))
    rhs[0, 0] = -first_lower
    rhs[-1, 1] = -last_upper
    inner = _solve(banded, rhs, f'[{lo:.6g}, {hi:.6g}]')
    e_lo = np.concatenate(([1.0], inner[:, 0], [0.0]))
    e_hi = np.concatenate(([0.0], inner[:, 1], [1.0]))
    return _grid_function(lo, hi, e_lo, nodes, uneven), _grid_function(lo, hi, e_hi, nodes, uneven)
