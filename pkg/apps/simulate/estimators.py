"""Оценки Монте-Карло и парные сравнения правил остановки."""
import logging
import math

import numpy as np

from apps.core.exceptions import ParameterError
from apps.core.models import MonteCarloParams
from apps.core.signals import estimate_ready

from .engine import path_payoffs
from .models import ComparisonReport, McEstimate, PerturbationRow, StoppingRule
from .rewards import gains_reward, utility_reward

logger = logging.getLogger(__name__)

MIN_PATHS = 100


def _mean_and_stderr(values):
    n = values.size
    if np.all(values == values[0]):
        return float(values[0]), 0.0
    mean = math.fsum(values) / n
    variance = math.fsum((values - mean) ** 2) / (n - 1)
    return mean, math.sqrt(variance / n)


def _params(n_paths, dt, t_max, seed, block_size=MonteCarloParams.block_size):
    if n_paths < MIN_PATHS:
        raise ParameterError(f'Нужно не меньше {MIN_PATHS} траекторий, получено {n_paths}')
    return MonteCarloParams(n_paths=n_paths, dt=dt, t_max=t_max, seed=seed, block_size=block_size)


def mc_value(model, util, rule, start, n_paths, dt, t_max, seed, reward=None, label=''):
    """Среднее e^(-r tau) * reward(S_tau) по траекториям.

    По умолчанию reward = u; усечённые траектории дают
    e^(-r t_max) * reward(S_t_max) и учитываются в truncated_fraction.
    """
    params = _params(n_paths, dt, t_max, seed)
    payoff, truncated = path_payoffs(model, reward or utility_reward(util), rule, start, params)
    mean, stderr = _mean_and_stderr(payoff)
    estimate = McEstimate(mean, stderr, payoff.size, float(np.count_nonzero(truncated)) / payoff.size)
    estimate_ready.send(sender=McEstimate, estimate=estimate, label=label or rule.label)
    return estimate


def perturbation_test(model, util, base_rule, perturbed_rules, start, mc, reward=None):
    """Базовое правило против возмущённых на общих случайных числах"""
    reward = reward or utility_reward(util)
    params = _params(mc.n_paths, mc.dt, mc.t_max, mc.seed, mc.block_size)
    base, base_truncated = path_payoffs(model, reward, base_rule, start, params)

    def estimate(payoff, truncated):
        mean, stderr = _mean_and_stderr(payoff)
        return McEstimate(mean, stderr, payoff.size, float(np.count_nonzero(truncated)) / payoff.size)

    rows = []
    for rule in perturbed_rules:
        payoff, truncated = path_payoffs(model, reward, rule, start, params)
        diff_mean, diff_stderr = _mean_and_stderr(payoff - base)
        rows.append(PerturbationRow(rule.label, estimate(payoff, truncated), diff_mean, diff_stderr))
        logger.debug(f'{rule.label}: разность {diff_mean:+.6f} ± {diff_stderr:.6f}')
    return ComparisonReport(base_rule.label, estimate(base, base_truncated), tuple(rows))


def shifted_seller_rules(seller_sol, dB=0.25, dm=0.1):
    """Правила продавца со сдвигом B на +-dB и m на +-dm"""
    B, m = seller_sol.B, seller_sol.m
    rules = [
        StoppingRule(((B + dB, math.inf),), ((0.0, m),), f'B{dB:+g}'),
        StoppingRule(((B - dB, math.inf),), ((0.0, m),), f'B{-dB:+g}'),
        StoppingRule(((B, math.inf),), ((0.0, min(m + dm, seller_sol.H)),), f'm{dm:+g}'),
    ]
    if m - dm >= 0:
        rules.append(StoppingRule(((B, math.inf),), ((0.0, m - dm),), f'm{-dm:+g}'))
    return rules


def standard_rules(model):
    """Эвристики: покупать в [L, H] в режиме +, продавать в [L, H] в режиме -"""
    buy_low = StoppingRule(((model.L, model.H),), ((0.0, 0.0),), 'BL')
    sell_high = StoppingRule((), ((0.0, 0.0), (model.L, model.H)), 'SH')
    return buy_low, sell_high


def compare_standard_rule(model, util, seller_sol, buyer_sol, start, mc):
    """Оптимальные правила против стандартных BL/SH"""
    buy_low, sell_high = standard_rules(model)
    seller = perturbation_test(model, util, StoppingRule.seller(seller_sol), [sell_high], start, mc)
    result = {'seller': seller}
    if buyer_sol is not None:
        result['buyer'] = perturbation_test(
            model, util, StoppingRule.buyer(buyer_sol), [buy_low], start, mc,
            reward=gains_reward(seller_sol, util),
        )
    return result
