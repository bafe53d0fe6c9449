"""Прогон обеих задач по списку gamma."""
import logging
from concurrent.futures import ThreadPoolExecutor

from django.core.exceptions import ValidationError

from apps.buyer.solver import solve_buyer
from apps.core.conf import worker_count
from apps.core.exceptions import AssumptionViolation, ParameterError, StoplineError
from apps.core.models import Numerics
from apps.core.signals import sweep_row_finished
from apps.dynamics.assumptions import find_A
from apps.dynamics.models import UtilitySpec
from apps.seller.solver import solve_seller

from .managers import SweepRowSet
from .models import SweepRow, SweepStatus

logger = logging.getLogger(__name__)

FAILURES = (StoplineError, ValidationError)


def _describe(exc):
    return f'{type(exc).__name__}: {exc}'


def solve_row(model, gamma, numerics):
    """Одна строка; исключения решателей превращаются в статус"""
    util = UtilitySpec(gamma)
    try:
        seller = solve_seller(model, util, numerics)
    except AssumptionViolation as exc:
        return SweepRow(gamma, status=SweepStatus.ASSUMPTION_FAILED, detail=_describe(exc))
    except FAILURES as exc:
        try:
            A = find_A(model, util)
        except FAILURES:
            A = None
        return SweepRow(gamma, A=A, status=SweepStatus.SELLER_FAILED, detail=_describe(exc))

    seller_part = {'A': seller.A, 'B': seller.B, 'm': seller.m, 'seller_case': seller.case}
    try:
        buyer = solve_buyer(model, util, seller, numerics)
    except FAILURES as exc:
        return SweepRow(gamma, **seller_part, status=SweepStatus.BUYER_FAILED, detail=_describe(exc))

    row = SweepRow(gamma, **seller_part, a=buyer.a, b=buyer.b)
    problems = row.violations(model.L, model.H)
    if problems:
        return SweepRow(gamma, **seller_part, a=buyer.a, b=buyer.b,
                        status=SweepStatus.INVALID, detail='; '.join(problems))
    return row


def run_gamma_sweep(model_template, gammas, numerics=None):
    """Строка на каждое gamma в порядке возрастания; сбой строки не прерывает прогон"""
    gammas = [float(g) for g in gammas]
    if gammas != sorted(gammas):
        raise ParameterError('Значения gamma должны идти по возрастанию')
    numerics = numerics or Numerics()

    def work(gamma):
        return solve_row(model_template, gamma, numerics)

    with ThreadPoolExecutor(max_workers=max(1, min(worker_count(), len(gammas)))) as executor:
        rows = SweepRowSet(executor.map(work, gammas))
    for row in rows:
        sweep_row_finished.send(sender=SweepRow, row=row)
    return rows
