"""Схема Эйлера-Маруямы для цены с флагом режима.

Траектории моделируются блоками по block_size. Генератор блока k строится
из SeedSequence(seed, spawn_key=(k,)), и на каждом шаге блок тянет
block_size нормальных величин, даже если часть траекторий остановилась.
Траектория i = k*block_size + j поэтому получает один и тот же шум при
любом правиле остановки и любом числе потоков.
"""
import logging
import math
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from apps.core.conf import worker_count
from apps.core.exceptions import ParameterError, SimulationError
from apps.dynamics.models import DynamicsKind, Regime

from .models import PathState

logger = logging.getLogger(__name__)

POSITIVE, NEGATIVE = 1, -1


def _guarded(dyn, x, floor):
    # full truncation для CIR на нижней границе режима
    return np.maximum(x, floor) if dyn.kind == DynamicsKind.CIR else x


def _coefficients(model, S, F):
    drift = np.empty_like(S)
    variance = np.empty_like(S)
    for sign, dyn, floor in ((POSITIVE, model.positive, model.L), (NEGATIVE, model.negative, 0.0)):
        regime = F == sign
        if regime.any():
            x = S[regime]
            drift[regime] = dyn.drift_values(x)
            variance[regime] = dyn.variance_values(_guarded(dyn, x, floor))
    return drift, variance


def advance(model, S, F, dt, z):
    """Один шаг для массивов: (S, F, поглощённые)"""
    drift, variance = _coefficients(model, S, F)
    S_new = S + drift * dt + np.sqrt(np.maximum(variance, 0.0) * dt) * z
    if not np.all(np.isfinite(S_new)):
        raise SimulationError('Нечисловая цена на шаге Эйлера')
    F_new = F.copy()
    F_new[(F == POSITIVE) & (S_new <= model.L)] = NEGATIVE
    F_new[(F == NEGATIVE) & (S_new >= model.H)] = POSITIVE
    absorbed = (F_new == NEGATIVE) & (S_new <= 0.0)
    S_new[absorbed] = 0.0
    return S_new, F_new, absorbed


def step_euler(state, dt, model, z):
    """Один шаг из состояния PathState"""
    if not dt > 0:
        raise ParameterError('dt должен быть положительным')
    if state.absorbed:
        raise ParameterError('Поглощённое состояние не продвигается')
    S, F, absorbed = advance(
        model, np.array([state.S], dtype=float), np.array([state.F.sign], dtype=np.int8), dt, np.array([z])
    )
    return PathState(state.t + dt, float(S[0]), Regime.from_sign(F[0]), bool(absorbed[0]))


def block_generator(seed, block):
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(block,)))


def run_block(model, start, rule, reward, dt, t_max, seed, block, size):
    """Блок траекторий до остановки или t_max.

    Возвращает словарь массивов: payoff (дисконтированное вознаграждение),
    tau, S, F в момент остановки и truncated.
    """
    rng = block_generator(seed, block)
    n_steps = math.ceil(t_max / dt - 1e-9)
    S = np.full(size, float(start.S))
    F = np.full(size, start.F.sign, dtype=np.int8)
    tau = np.zeros(size)
    payoff = np.zeros(size)
    truncated = np.zeros(size, dtype=bool)

    stopped = rule.mask(S, F) | start.absorbed
    if stopped.any():
        payoff[stopped] = reward(S[stopped], F[stopped])
    alive = np.flatnonzero(~stopped)

    for step in range(1, n_steps + 1):
        if alive.size == 0:
            break
        z = rng.standard_normal(size)
        s, f, absorbed = advance(model, S[alive], F[alive], dt, z[alive])
        S[alive] = s
        F[alive] = f
        hit = rule.mask(s, f) | absorbed
        if hit.any():
            t = step * dt
            index = alive[hit]
            tau[index] = t
            payoff[index] = math.exp(-model.r * t) * reward(s[hit], f[hit])
            alive = alive[~hit]

    if alive.size:
        t = n_steps * dt
        tau[alive] = t
        payoff[alive] = math.exp(-model.r * t) * reward(S[alive], F[alive])
        truncated[alive] = True
    return {'payoff': payoff, 'tau': tau, 'S': S, 'F': F, 'truncated': truncated}


def simulate_until_stop(model, start, rule, dt, t_max, seed):
    """Одна траектория: (tau, S_tau, F_tau, truncated)"""
    result = run_block(model, start, rule, lambda S, F: np.zeros_like(S), dt, t_max, seed, 0, 1)
    return (
        float(result['tau'][0]),
        float(result['S'][0]),
        Regime.from_sign(result['F'][0]),
        bool(result['truncated'][0]),
    )


def path_payoffs(model, reward, rule, start, params):
    """Дисконтированные вознаграждения всех траекторий в порядке номеров"""
    sizes = [
        min(params.block_size, params.n_paths - offset)
        for offset in range(0, params.n_paths, params.block_size)
    ]

    def work(block):
        return run_block(model, start, rule, reward, params.dt, params.t_max, params.seed, block, sizes[block])

    with ThreadPoolExecutor(max_workers=min(worker_count(), len(sizes))) as executor:
        blocks = list(executor.map(work, range(len(sizes))))
    payoff = np.concatenate([block['payoff'] for block in blocks])
    truncated = np.concatenate([block['truncated'] for block in blocks])
    return payoff, truncated


def record_paths(model, start, n_paths, n_steps, dt, seed):
    """Полные траектории без остановки: массивы S и F формы (n_steps+1, n_paths)"""
    rng = block_generator(seed, 0)
    S = np.empty((n_steps + 1, n_paths))
    F = np.empty((n_steps + 1, n_paths), dtype=np.int8)
    S[0], F[0] = start.S, start.F.sign
    frozen = np.full(n_paths, start.absorbed)
    for step in range(1, n_steps + 1):
        z = rng.standard_normal(n_paths)
        s, f, absorbed = advance(model, S[step - 1], F[step - 1], dt, z)
        S[step] = np.where(frozen, S[step - 1], s)
        F[step] = np.where(frozen, F[step - 1], f)
        frozen |= absorbed
    return S, F
