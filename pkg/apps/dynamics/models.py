import math
from dataclasses import dataclass, field

import numpy as np
from django.core.exceptions import ValidationError
from django.db import models
from django.utils.translation import gettext_lazy as _


class Regime(models.TextChoices):
    """Флаг режима рынка"""

    POSITIVE = '+', 'Положительный (уровень как поддержка)'
    NEGATIVE = '-', 'Отрицательный (уровень как сопротивление)'

    @property
    def sign(self):
        return 1 if self is Regime.POSITIVE else -1

    @classmethod
    def from_sign(cls, value):
        return cls.POSITIVE if value > 0 else cls.NEGATIVE


class DynamicsKind(models.TextChoices):
    AFFINE = 'affine', 'Аффинная: mu*x + c, sigma*x'
    GBM = 'gbm', 'Геометрическое броуновское движение'
    VASICEK = 'vasicek', 'Васичек: c - mu*x, sigma'
    CIR = 'cir', 'Кокс-Ингерсолл-Росс: c - mu*x, sigma*sqrt(x)'
    TABULATED = 'tabulated', 'Табличная (линейная интерполяция)'


@dataclass(frozen=True)
class RegimeDynamics:
    """Снос и волатильность одного режима.

    Для аффинной динамики c по умолчанию равно mu, что даёт mu*(x+1).
    sigma2 хранит квадрат параметра волатильности.
    """

    kind: DynamicsKind
    mu: float = 0.0
    sigma2: float = 0.0
    c: float | None = None
    table_x: tuple = ()
    table_mu: tuple = ()
    table_sigma2: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, 'kind', DynamicsKind(self.kind))
        if self.kind == DynamicsKind.AFFINE and self.c is None:
            object.__setattr__(self, 'c', self.mu)
        for name in ('table_x', 'table_mu', 'table_sigma2'):
            object.__setattr__(self, name, tuple(float(v) for v in getattr(self, name)))
        self.clean()

    @classmethod
    def affine(cls, mu, sigma2, c=None):
        return cls(DynamicsKind.AFFINE, mu=mu, sigma2=sigma2, c=c)

    @classmethod
    def gbm(cls, mu, sigma2):
        return cls(DynamicsKind.GBM, mu=mu, sigma2=sigma2)

    @classmethod
    def vasicek(cls, c, mu, sigma2):
        return cls(DynamicsKind.VASICEK, mu=mu, sigma2=sigma2, c=c)

    @classmethod
    def cir(cls, c, mu, sigma2):
        return cls(DynamicsKind.CIR, mu=mu, sigma2=sigma2, c=c)

    @classmethod
    def tabulated(cls, xs, mus, sigma2s):
        return cls(DynamicsKind.TABULATED, table_x=xs, table_mu=mus, table_sigma2=sigma2s)

    def clean(self):
        """Валидация на уровне модели"""
        errors = {}
        if self.kind == DynamicsKind.TABULATED:
            xs = np.asarray(self.table_x)
            if len(xs) < 2 or len(xs) != len(self.table_mu) or len(xs) != len(self.table_sigma2):
                errors['table_x'] = _('Таблицы x, mu, sigma2 должны быть одной длины не меньше 2')
            elif not np.all(np.diff(xs) > 0):
                errors['table_x'] = _('Узлы таблицы должны строго возрастать')
            elif not np.all(np.isfinite(np.concatenate([xs, self.table_mu, self.table_sigma2]))):
                errors['table_mu'] = _('Значения таблицы должны быть конечными')
            elif not np.all(np.asarray(self.table_sigma2) > 0):
                errors['table_sigma2'] = _('Дисперсия в таблице должна быть положительной')
        else:
            if not math.isfinite(self.mu):
                errors['mu'] = _('Параметр сноса должен быть конечным')
            if not (math.isfinite(self.sigma2) and self.sigma2 > 0):
                errors['sigma2'] = _('Параметр волатильности должен быть положительным')
            if self.c is not None and not math.isfinite(self.c):
                errors['c'] = _('Параметр c должен быть конечным')
            if self.kind in (DynamicsKind.VASICEK, DynamicsKind.CIR) and self.c is None:
                errors['c'] = _('Для возврата к среднему нужен параметр c')
        if errors:
            raise ValidationError(errors)

    @property
    def sigma(self):
        return math.sqrt(self.sigma2)

    @property
    def drift_params(self):
        if self.kind == DynamicsKind.GBM:
            return {'mu': self.mu}
        if self.kind == DynamicsKind.TABULATED:
            return {'x': self.table_x, 'mu': self.table_mu}
        return {'mu': self.mu, 'c': self.c}

    @property
    def vol_params(self):
        if self.kind == DynamicsKind.TABULATED:
            return {'x': self.table_x, 'sigma2': self.table_sigma2}
        return {'sigma': self.sigma}

    def drift_values(self, x):
        """Снос на массиве цен"""
        x = np.asarray(x, dtype=float)
        if self.kind == DynamicsKind.AFFINE:
            return self.mu * x + self.c
        if self.kind == DynamicsKind.GBM:
            return self.mu * x
        if self.kind in (DynamicsKind.VASICEK, DynamicsKind.CIR):
            return self.c - self.mu * x
        return np.interp(x, self.table_x, self.table_mu)

    def variance_values(self, x):
        """Квадрат волатильности на массиве цен"""
        x = np.asarray(x, dtype=float)
        if self.kind in (DynamicsKind.AFFINE, DynamicsKind.GBM):
            return self.sigma2 * x * x
        if self.kind == DynamicsKind.VASICEK:
            return np.full_like(x, self.sigma2)
        if self.kind == DynamicsKind.CIR:
            return self.sigma2 * x
        return np.interp(x, self.table_x, self.table_sigma2)

    def describe(self):
        if self.kind == DynamicsKind.TABULATED:
            return f'{self.kind.value}(узлов {len(self.table_x)})'
        params = ', '.join(f'{k}={v:.10g}' for k, v in {**self.drift_params, 'sigma2': self.sigma2}.items())
        return f'{self.kind.value}({params})'


@dataclass(frozen=True)
class ModelSpec:
    """Пара режимов, уровни L < H и ставка дисконтирования r"""

    positive: RegimeDynamics
    negative: RegimeDynamics
    L: float
    H: float
    r: float

    def __post_init__(self):
        self.clean()

    def clean(self):
        """Валидация на уровне модели"""
        errors = {}
        if not all(math.isfinite(v) for v in (self.L, self.H, self.r)):
            errors['L'] = _('Уровни и ставка должны быть конечными')
        elif not 0 < self.L < self.H:
            errors['H'] = _('Нужно 0 < L < H')
        elif not self.r > 0:
            errors['r'] = _('Ставка дисконтирования должна быть положительной')
        if not errors:
            grid = np.linspace(self.L, 10 * self.H, 2049)[1:]
            if not np.all(self.positive.variance_values(grid) > 0):
                errors['positive'] = _('Положительный режим не эллиптичен на (L, бесконечность)')
            grid = np.linspace(0.0, self.H, 2049)[1:-1]
            if not np.all(self.negative.variance_values(grid) > 0):
                errors['negative'] = _('Отрицательный режим не эллиптичен на (0, H)')
        if errors:
            raise ValidationError(errors)

    def dynamics(self, regime):
        return self.positive if Regime(regime) == Regime.POSITIVE else self.negative


@dataclass(frozen=True)
class UtilitySpec:
    """Степенная полезность u(x) = scale * x**gamma.

    scale=0 даёт нулевое вознаграждение, удобное для вырожденных проверок.
    """

    gamma: float
    scale: float = 1.0

    def __post_init__(self):
        self.clean()

    def clean(self):
        """Валидация на уровне модели"""
        errors = {}
        if not (math.isfinite(self.gamma) and self.gamma > 0):
            errors['gamma'] = _('Показатель полезности должен быть положительным')
        if not (math.isfinite(self.scale) and self.scale >= 0):
            errors['scale'] = _('Масштаб полезности не может быть отрицательным')
        if errors:
            raise ValidationError(errors)

    def value(self, x):
        return self.scale * np.power(x, self.gamma)

    def first(self, x):
        with np.errstate(divide='ignore'):
            return self.scale * self.gamma * np.power(x, self.gamma - 1.0)

    def second(self, x):
        with np.errstate(divide='ignore', invalid='ignore'):
            return self.scale * self.gamma * (self.gamma - 1.0) * np.power(x, self.gamma - 2.0)


@dataclass(frozen=True)
class AssumptionReport:
    """Результат проверки условий знака"""

    A: float | None
    negative_sign_ok: bool
    positive_pattern_ok: bool
    notes: tuple = field(default=())

    @property
    def all_ok(self):
        return self.negative_sign_ok and self.positive_pattern_ok and self.A is not None

    def lines(self):
        A = 'не найден' if self.A is None else f'{self.A:.10g}'
        rows = [
            f'A: {A}',
            f'negative_sign_ok: {self.negative_sign_ok}',
            f'positive_pattern_ok: {self.positive_pattern_ok}',
        ]
        rows.extend(f'  {note}' for note in self.notes)
        return rows
