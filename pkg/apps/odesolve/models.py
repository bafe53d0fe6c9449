from dataclasses import dataclass, field
from functools import cached_property

import numpy as np
from django.core.exceptions import ValidationError
from django.utils.translation import gettext_lazy as _

from apps.core.exceptions import DomainError

MIN_CELLS = 16


@dataclass(frozen=True, eq=False)
class GridFunction:
    """Функция на сетке lo = x_0 < ... < x_n = hi.

    Без mesh сетка равномерная; mesh задаёт узлы явно (кусочно-равномерная
    сетка с внутренними точками L или H в качестве узлов).
    """

    lo: float
    hi: float
    values: np.ndarray
    mesh: np.ndarray | None = field(default=None, repr=False)

    def __post_init__(self):
        values = np.array(self.values, dtype=float)
        values.setflags(write=False)
        object.__setattr__(self, 'lo', float(self.lo))
        object.__setattr__(self, 'hi', float(self.hi))
        object.__setattr__(self, 'values', values)
        if self.mesh is not None:
            mesh = np.array(self.mesh, dtype=float)
            mesh.setflags(write=False)
            object.__setattr__(self, 'mesh', mesh)
        self.clean()

    def clean(self):
        """Валидация на уровне модели"""
        if not self.lo < self.hi:
            raise ValidationError({'hi': _('Нужно lo < hi')})
        if self.values.ndim != 1 or self.values.size - 1 < MIN_CELLS:
            raise ValidationError({'values': _('Нужно не меньше 16 ячеек')})
        if not np.all(np.isfinite(self.values)):
            raise ValidationError({'values': _('Значения должны быть конечными')})
        if self.mesh is not None:
            mesh = self.mesh
            if mesh.shape != self.values.shape or mesh[0] != self.lo or mesh[-1] != self.hi:
                raise ValidationError({'mesh': _('Узлы должны идти от lo до hi по одному на значение')})
            if not np.all(np.diff(mesh) > 0):
                raise ValidationError({'mesh': _('Узлы должны строго возрастать')})

    @property
    def n(self):
        return self.values.size - 1

    @property
    def step(self):
        """Наибольший шаг сетки"""
        if self.mesh is None:
            return (self.hi - self.lo) / self.n
        return float(np.max(np.diff(self.mesh)))

    @cached_property
    def nodes(self):
        if self.mesh is not None:
            return self.mesh
        nodes = np.linspace(self.lo, self.hi, self.n + 1)
        nodes.setflags(write=False)
        return nodes

    @cached_property
    def nodal_derivative(self):
        # центральные разности внутри, односторонние второго порядка на концах
        spacing = self.step if self.mesh is None else self.mesh
        return np.gradient(self.values, spacing, edge_order=2)

    def _check(self, x):
        x = np.asarray(x, dtype=float)
        slack = 1e-12 * max(1.0, abs(self.hi))
        if np.any(x < self.lo - slack) or np.any(x > self.hi + slack) or not np.all(np.isfinite(x)):
            raise DomainError(f'x={x} вне [{self.lo:.10g}, {self.hi:.10g}]')
        return x

    def resample(self, x):
        """Линейная интерполяция между соседними узлами"""
        x = self._check(x)
        result = np.interp(x, self.nodes, self.values)
        return float(result) if result.ndim == 0 else result

    __call__ = resample

    def derivative_at(self, x):
        """Производная: разностный шаблон в узлах, интерполированный между ними"""
        x = self._check(x)
        result = np.interp(x, self.nodes, self.nodal_derivative)
        return float(result) if result.ndim == 0 else result

    def second_derivative(self):
        spacing = self.step if self.mesh is None else self.mesh
        return np.gradient(self.nodal_derivative, spacing, edge_order=2)

    def with_values(self, values):
        """Другие значения на той же сетке"""
        return GridFunction(self.lo, self.hi, values, self.mesh)

    def combine(self, weight, other, other_weight):
        """weight*self + other_weight*other на той же сетке"""
        if other.n != self.n or other.lo != self.lo or other.hi != self.hi:
            raise DomainError('Сетки не совпадают')
        if not np.array_equal(other.nodes, self.nodes):
            raise DomainError('Сетки не совпадают')
        return self.with_values(weight * self.values + other_weight * other.values)

@dataclass(frozen=True, eq=False)
class FundamentalSolution:
    """Убывающее решение phi_+ на [L, x_max], нормированное phi_+(H) = 1.

    За x_max хвост считается нулевым.
    """

    phi_plus: GridFunction
    H: float

    def __post_init__(self):
        self.clean()

    def clean(self):
        """Валидация на уровне модели"""
        values = self.phi_plus.values
        if not (np.all(np.diff(values) < 0) and np.all(values[:-1] > 0)):
            raise ValidationError({'phi_plus': _('phi_+ должна строго убывать и быть положительной')})

    @property
    def L(self):
        return self.phi_plus.lo

    @property
    def x_max(self):
        return self.phi_plus.hi

    def value(self, x):
        if x >= self.x_max:
            return 0.0
        return self.phi_plus.resample(x)

    def derivative(self, x):
        if x > self.x_max:
            return 0.0
        return self.phi_plus.derivative_at(x)

    def scaled(self, factor):
        """phi_+ с другим положительным множителем (для проверок инвариантности)"""
        return FundamentalSolution(self.phi_plus.with_values(factor * self.phi_plus.values), self.H)
