"""Проверка условий знака для L±u - ru и поиск порога A."""
import logging

import numpy as np
from scipy.optimize import bisect

from apps.core.exceptions import AssumptionViolation, ParameterError
from apps.core.roots import SIGN_DEADBAND, refine_root

from .generator import utility_generator
from .models import AssumptionReport

logger = logging.getLogger(__name__)

SCAN_STEP = 1e-3
NEGATIVE_EPSILON = 1e-6


def default_search_hi(model):
    return max(100.0, 50.0 * model.H)


def _signs(values):
    signs = np.sign(values)
    signs[np.abs(values) < SIGN_DEADBAND] = 0
    return signs


def find_A(model, util, search_hi=None, step=SCAN_STEP):
    """Единственная смена знака L+u - ru на (L, search_hi).

    Сначала скан с шагом step, затем bisect до 1e-10.
    """
    search_hi = default_search_hi(model) if search_hi is None else search_hi
    if not search_hi > model.L:
        raise ParameterError('search_hi должен быть больше L')

    def excess(x):
        return float(utility_generator(model.positive, model.r, util, x))

    grid = np.arange(model.L + step, search_hi + 0.5 * step, step)
    signs = _signs(utility_generator(model.positive, model.r, util, grid))
    nonzero = np.flatnonzero(signs)
    if nonzero.size == 0:
        raise AssumptionViolation('Нет A: L+u - ru тождественно равно нулю на сетке')
    changes = nonzero[1:][np.diff(signs[nonzero]) != 0]
    if changes.size == 0:
        raise AssumptionViolation(f'Нет A: L+u - ru не меняет знак на (L, {search_hi:g}]')
    if changes.size > 1:
        raise AssumptionViolation(
            f'Знак L+u - ru немонотонен: {changes.size} смен на (L, {search_hi:g}]'
        )
    hi_index = changes[0]
    lo_index = nonzero[np.searchsorted(nonzero, hi_index) - 1]
    lo, hi = grid[lo_index], grid[hi_index]
    A = refine_root(excess, lo, hi, 1e-10, 'A', method=bisect)
    logger.debug(f'A={A:.10f} на [{lo:.4f}, {hi:.4f}]')
    return A


def verify_assumptions(model, util):
    """Заполняет AssumptionReport; нарушения отражаются флагами"""
    notes = []
    grid = np.arange(NEGATIVE_EPSILON, model.H, SCAN_STEP)
    negative = _signs(utility_generator(model.negative, model.r, util, grid))
    negative_ok = bool(np.all(negative <= 0) and np.any(negative < 0))
    if not negative_ok:
        bad = grid[negative > 0]
        notes.append(f'L-u - ru >= 0 в {bad.size} точках, первая {bad[0]:.4g}' if bad.size else 'L-u - ru = 0')

    try:
        A = find_A(model, util)
    except AssumptionViolation as exc:
        notes.append(str(exc))
        return AssumptionReport(A=None, negative_sign_ok=negative_ok, positive_pattern_ok=False, notes=tuple(notes))

    grid = np.arange(model.L + SCAN_STEP, 10 * A, SCAN_STEP)
    positive = _signs(utility_generator(model.positive, model.r, util, grid))
    before, after = positive[grid < A], positive[grid > A]
    positive_ok = bool(np.all(before >= 0) and np.all(after <= 0) and A > model.L)
    if not positive_ok:
        notes.append('Знак L+u - ru не имеет вида + на (L, A), - на (A, бесконечность)')
    return AssumptionReport(A=A, negative_sign_ok=negative_ok, positive_pattern_ok=positive_ok, notes=tuple(notes))
