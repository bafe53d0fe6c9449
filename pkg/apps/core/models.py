"""Общие неизменяемые параметры численных схем.

Модели здесь не связаны с БД: это замороженные dataclass-ы, которые
проверяют себя в clean(), как это делают модели Django.
"""
import math
from dataclasses import asdict, dataclass, replace

from django.core.exceptions import ValidationError
from django.utils.translation import gettext_lazy as _


@dataclass(frozen=True)
class Numerics:
    """Параметры сеток и допуски решателей свободной границы"""

    cells_per_unit: int = 4096
    tol_boundary: float = 1e-6
    tol_pasting: float = 1e-3
    tol_continuity: float = 1e-6
    x_max: float | None = None
    B_max: float | None = None
    phi_cells_per_unit: int = 512
    tol_truncation: float = 1e-6
    scan_points: int = 32

    def __post_init__(self):
        self.clean()

    def clean(self):
        """Валидация на уровне модели"""
        errors = {}
        if self.cells_per_unit < 16:
            errors['cells_per_unit'] = _('Нужно не меньше 16 ячеек на единицу длины')
        if self.phi_cells_per_unit < 16:
            errors['phi_cells_per_unit'] = _('Нужно не меньше 16 ячеек на единицу длины')
        if self.scan_points < 4:
            errors['scan_points'] = _('Нужно не меньше 4 точек сканирования')
        for name in ('tol_boundary', 'tol_pasting', 'tol_continuity', 'tol_truncation'):
            value = getattr(self, name)
            if not value > 0 or math.isnan(value):
                errors[name] = _('Допуск должен быть положительным')
        for name in ('x_max', 'B_max'):
            value = getattr(self, name)
            if value is not None and not (math.isfinite(value) and value > 0):
                errors[name] = _('Граница должна быть конечной и положительной')
        if errors:
            raise ValidationError(errors)

    def cells(self, width):
        """Число ячеек равномерной сетки для отрезка длины width"""
        return max(16, math.ceil(self.cells_per_unit * width))

    def phi_cells(self, width):
        return max(16, math.ceil(self.phi_cells_per_unit * width))

    def refined(self, factor=2):
        """Та же схема с шагом сетки, уменьшенным в factor раз"""
        return replace(
            self,
            cells_per_unit=self.cells_per_unit * factor,
            phi_cells_per_unit=self.phi_cells_per_unit * factor,
        )

    def as_dict(self):
        return asdict(self)


@dataclass(frozen=True)
class MonteCarloParams:
    """Параметры моделирования Эйлера-Маруямы"""

    n_paths: int = 20000
    dt: float = 1e-3
    t_max: float = 200.0
    seed: int = 20240611
    block_size: int = 4096

    def __post_init__(self):
        self.clean()

    def clean(self):
        """Валидация на уровне модели"""
        errors = {}
        if self.n_paths < 1:
            errors['n_paths'] = _('Число траекторий должно быть положительным')
        if not (math.isfinite(self.dt) and self.dt > 0):
            errors['dt'] = _('Шаг по времени должен быть положительным')
        if not (math.isfinite(self.t_max) and self.t_max > self.dt):
            errors['t_max'] = _('Горизонт должен превышать шаг по времени')
        if self.seed < 0:
            errors['seed'] = _('Зерно генератора не может быть отрицательным')
        if self.block_size < 1:
            errors['block_size'] = _('Размер блока должен быть положительным')
        if errors:
            raise ValidationError(errors)

    @property
    def n_steps(self):
        return math.ceil(self.t_max / self.dt - 1e-9)

    def with_dt(self, dt):
        return replace(self, dt=dt)

    def as_dict(self):
        return asdict(self)


@dataclass(frozen=True)
class CheckResult:
    """Итог одной проверки набора verify"""

    name: str
    passed: bool
    detail: str = ''

    def __str__(self):
        mark = 'PASS' if self.passed else 'FAIL'
        return f'[{mark}] {self.name}: {self.detail}' if self.detail else f'[{mark}] {self.name}'
