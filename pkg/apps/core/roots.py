"""Поиск корней невязок: сканирование знака и уточнение brentq."""
import math

import numpy as np
from scipy.optimize import brentq

from .exceptions import ConvergenceError, NoBracketError, StoplineError

SIGN_DEADBAND = 1e-12


def sign(value, deadband=SIGN_DEADBAND):
    """Знак с мёртвой зоной вокруг нуля"""
    if abs(value) < deadband:
        return 0
    return 1 if value > 0 else -1


def _changes(previous, current, direction):
    if previous * current >= 0:
        return False
    if direction == 'up':
        return previous < 0 < current
    if direction == 'down':
        return previous > 0 > current
    return True


def scan_sign_change(fn, points, direction=None):
    """Первая смена знака fn вдоль points в порядке обхода.

    direction: 'up' ищет переход - -> +, 'down' ищет + -> -, None любой.
    Возвращает (пара соседних точек или None, выборка [(x, fn(x))]).
    Точное попадание в ноль даёт вырожденную пару (x, x).
    """
    samples = []
    previous = None
    for x in points:
        x = float(x)
        value = float(fn(x))
        samples.append((x, value))
        if not math.isfinite(value):
            continue
        if value == 0.0:
            return (x, x), samples
        if previous is not None and _changes(previous[1], value, direction):
            return (previous[0], x), samples
        previous = (x, value)
    return None, samples


def refine_root(fn, lo, hi, xtol, quantity, method=brentq, **kwargs):
    """Уточнение корня внутри [lo, hi]; сбои scipy становятся ConvergenceError"""
    try:
        return method(fn, lo, hi, xtol=xtol, **kwargs)
    except StoplineError:
        raise
    except (ValueError, ArithmeticError, RuntimeError) as exc:
        raise ConvergenceError(f'Уточнение {quantity} на [{lo:.6g}, {hi:.6g}] не удалось: {exc}') from exc


def locate_root(fn, points, xtol, quantity, direction=None):
    """Скан знака по points, затем brentq внутри найденной пары"""
    pair, samples = scan_sign_change(fn, points, direction)
    if pair is None:
        points = np.asarray(points, dtype=float)
        raise NoBracketError(quantity, points.min(), points.max(), samples)
    lo, hi = sorted(pair)
    if lo == hi:
        return lo
    return refine_root(fn, lo, hi, xtol, quantity, maxiter=200)


def descending_candidates(top, bottom, points, offset=None):
    """Кандидаты границы от top вниз к bottom.

    Сгущаются геометрически у обоих концов: невязки гладких задач
    меняются быстрее всего рядом с краями отрезка.
    """
    width = top - bottom
    offset = offset if offset is not None else 1e-7 * max(1.0, top)
    half = max(points // 3, 2)
    near_top = top - np.geomspace(offset, width / 2, half)
    middle = np.linspace(top - width / 2, bottom + width / points, points - 2 * half + 2)
    near_bottom = bottom + np.geomspace(width / points, max(offset, 1e-9 * width), half)
    grid = np.concatenate([near_top, middle, near_bottom])
    grid = grid[(grid < top) & (grid > bottom)]
    return np.unique(grid)[::-1]


def ascending_candidates(bottom, top, points, offset=None):
    """Зеркальный вариант descending_candidates: от bottom вверх"""
    flipped = descending_candidates(-bottom, -top, points, offset)
    return -flipped
