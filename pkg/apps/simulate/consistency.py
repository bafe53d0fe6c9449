"""Проверки решения продавца моделированием для команды verify."""
import math

from apps.core.models import CheckResult
from apps.dynamics.models import Regime
from apps.seller.solver import seller_value_at

from .estimators import mc_value, perturbation_test, shifted_seller_rules
from .models import PathState, StoppingRule

EXAMPLE_STARTS = ((2.0, Regime.POSITIVE), (1.5, Regime.POSITIVE), (1.9, Regime.NEGATIVE))


def dt_shift_bound(coarse, fine, z=2.0):
    """Порог сдвига среднего при dt/2: z stderr разности независимых оценок"""
    return z * math.hypot(coarse.stderr, fine.stderr)


def default_starts(seller):
    """Три точки в областях продолжения"""
    L, B, H = seller.L, seller.B, seller.H
    low = max(seller.m, 0.0)
    return (
        (L + 0.5 * (B - L), Regime.POSITIVE),
        (L + 0.25 * (B - L), Regime.POSITIVE),
        (low + 0.5 * (H - low), Regime.NEGATIVE),
    )


def mc_consistency_checks(model, util, seller, mc, starts, reference):
    """Оценка в пределах 3 stderr от reference(x, f); сдвиг при dt/2 меньше 2 stderr разности"""
    rule = StoppingRule.seller(seller)
    results = []
    first = None
    for x, f in starts:
        estimate = mc_value(model, util, rule, PathState(0.0, x, f), mc.n_paths, mc.dt, mc.t_max, mc.seed)
        expected = reference(x, f)
        first = first or (x, f, estimate)
        results.append(CheckResult(
            f'MC V({x:g}, {f})',
            estimate.within(expected, 3.0),
            f'{estimate} против {expected:.6f}',
        ))
    x, f, coarse = first
    fine = mc_value(model, util, rule, PathState(0.0, x, f), mc.n_paths, mc.dt / 2, mc.t_max, mc.seed)
    shift = abs(fine.mean - coarse.mean)
    bound = dt_shift_bound(coarse, fine)
    results.append(CheckResult(f'MC dt/2 в ({x:g}, {f})', shift < bound, f'сдвиг {shift:.2e}, порог {bound:.2e}'))
    return results


def perturbation_checks(model, util, seller, mc, start):
    """Сдвиги B на 0.25 и m на 0.1 не выигрывают больше 2 stderr разности"""
    report = perturbation_test(
        model, util, StoppingRule.seller(seller), shifted_seller_rules(seller), PathState(0.0, *start), mc
    )
    return [
        CheckResult(
            f'CRN {row.label}',
            not row.beats_base(2.0),
            f'разность {row.diff_mean:+.6f} ± {row.diff_stderr:.6f}',
        )
        for row in report.rows
    ]


def seller_reference(seller, util):
    return lambda x, f: seller_value_at(seller, util, x, f)
