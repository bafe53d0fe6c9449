import math
from dataclasses import dataclass

import numpy as np
from django.core.exceptions import ValidationError
from django.utils.translation import gettext_lazy as _

from apps.dynamics.models import Regime

TRUNCATION_WARNING_LEVEL = 0.05


@dataclass(frozen=True)
class PathState:
    t: float
    S: float
    F: Regime
    absorbed: bool = False

    def __post_init__(self):
        object.__setattr__(self, 'F', Regime(self.F))
        self.clean()

    def clean(self):
        """Валидация на уровне модели"""
        if not (math.isfinite(self.S) and self.S >= 0):
            raise ValidationError({'S': _('Цена должна быть конечной и неотрицательной')})
        if self.absorbed and (self.S != 0 or self.F != Regime.NEGATIVE):
            raise ValidationError({'absorbed': _('Поглощение возможно только в (0, -)')})


def _normalize(intervals):
    return tuple(sorted((float(lo), float(hi)) for lo, hi in intervals))


@dataclass(frozen=True)
class StoppingRule:
    """Замкнутые интервалы остановки по режимам"""

    pos_intervals: tuple = ()
    neg_intervals: tuple = ()
    label: str = ''

    def __post_init__(self):
        object.__setattr__(self, 'pos_intervals', _normalize(self.pos_intervals))
        object.__setattr__(self, 'neg_intervals', _normalize(self.neg_intervals))
        self.clean()

    def clean(self):
        """Валидация на уровне модели"""
        for lo, hi in self.pos_intervals + self.neg_intervals:
            if math.isnan(lo) or math.isnan(hi) or lo > hi or lo < 0:
                raise ValidationError({'pos_intervals': _('Интервал должен иметь 0 <= lo <= hi')})

    @classmethod
    def seller(cls, sol, label='seller'):
        return cls(((sol.B, math.inf),), ((0.0, sol.m),), label)

    @classmethod
    def buyer(cls, sol, label='buyer'):
        return cls(((sol.a, sol.b),), ((0.0, 0.0),), label)

    @classmethod
    def everywhere(cls, model, label='everywhere'):
        return cls(((model.L, math.inf),), ((0.0, model.H),), label)

    @staticmethod
    def _inside(x, intervals):
        return any(lo <= x <= hi for lo, hi in intervals)

    def contains(self, x, f):
        intervals = self.pos_intervals if Regime(f) == Regime.POSITIVE else self.neg_intervals
        return self._inside(x, intervals)

    def mask(self, S, F):
        """Векторная проверка; F кодируется +1/-1"""
        result = np.zeros(S.shape, dtype=bool)
        for sign, intervals in ((1, self.pos_intervals), (-1, self.neg_intervals)):
            regime = F == sign
            for lo, hi in intervals:
                result |= regime & (S >= lo) & (S <= hi)
        return result


@dataclass(frozen=True)
class McEstimate:
    mean: float
    stderr: float
    n_paths: int
    truncated_fraction: float

    @property
    def truncation_warning(self):
        return self.truncated_fraction > TRUNCATION_WARNING_LEVEL

    def within(self, value, k=3.0):
        return abs(self.mean - value) <= k * self.stderr

    def __str__(self):
        line = f'{self.mean:.6f} ± {self.stderr:.6f} (n={self.n_paths}, усечено {self.truncated_fraction:.2%})'
        return line + ' [предупреждение: много усечённых траекторий]' if self.truncation_warning else line


@dataclass(frozen=True)
class PerturbationRow:
    label: str
    estimate: McEstimate
    diff_mean: float
    diff_stderr: float

    def beats_base(self, k=2.0):
        return self.diff_mean > k * self.diff_stderr


@dataclass(frozen=True)
class ComparisonReport:
    """Парное сравнение правил на общих случайных числах"""

    base_label: str
    base: McEstimate
    rows: tuple

    def base_is_optimal(self, k=2.0):
        return not any(row.beats_base(k) for row in self.rows)

    def lines(self):
        result = [f'{self.base_label}: {self.base}']
        for row in self.rows:
            result.append(f'  {row.label}: разность {row.diff_mean:+.6f} ± {row.diff_stderr:.6f}')
        return result
