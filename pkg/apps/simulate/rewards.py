"""Вознаграждения в момент остановки: функции (S, F) -> массив"""
import numpy as np

from apps.buyer.solver import gains_g
from apps.dynamics.models import Regime


def utility_reward(util):
    """u(S) для задачи продавца"""

    def reward(S, F):
        return util.value(S)

    return reward


def gains_reward(seller_sol, util):
    """g(S, F) = V(S, F) - u(S) для задачи покупателя"""

    def reward(S, F):
        return np.array([
            gains_g(seller_sol, util, float(s), Regime.from_sign(f)) for s, f in zip(S, F)
        ])

    return reward


def upper_exit_reward():
    """1 в положительном режиме, 0 в отрицательном"""

    def reward(S, F):
        return (F > 0).astype(float)

    return reward
