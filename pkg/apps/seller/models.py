import math
from dataclasses import dataclass

from django.core.exceptions import ValidationError
from django.db import models
from django.utils.translation import gettext_lazy as _

from apps.core.models import Numerics
from apps.dynamics.models import AssumptionReport
from apps.odesolve.models import GridFunction


class SellerCase(models.TextChoices):
    M_ABOVE_L = 'MAboveL', 'm не ниже L'
    M_BELOW_L = 'MBelowL', 'm ниже L'
    M_ZERO = 'MZero', 'm = 0'


@dataclass(frozen=True, eq=False)
class SellerSolution:
    """Границы продажи B (режим +) и m (режим -) с кривыми продолжения.

    v_pos задана на [L, B], v_neg на [max(m, 0), H]; coupling_value
    равно v(L, +).
    """

    B: float
    m: float
    case: SellerCase
    v_pos: GridFunction
    v_neg: GridFunction
    pasting_residual_B: float
    pasting_residual_m: float
    continuity_residual_H: float
    A: float
    coupling_value: float
    assumptions: AssumptionReport | None = None
    numerics: Numerics | None = None

    def __post_init__(self):
        object.__setattr__(self, 'case', SellerCase(self.case))
        self.clean()

    def clean(self):
        """Валидация на уровне модели"""
        errors = {}
        if not (math.isfinite(self.B) and self.B >= self.A - 1e-9):
            errors['B'] = _('Нужно A <= B < бесконечности')
        if not 0 <= self.m < self.H:
            errors['m'] = _('Нужно 0 <= m < H')
        if errors:
            raise ValidationError(errors)

    @property
    def L(self):
        return self.v_pos.lo

    @property
    def H(self):
        return self.v_neg.hi

    @property
    def residuals(self):
        return {
            'pasting_B': self.pasting_residual_B,
            'pasting_m': self.pasting_residual_m,
            'continuity_H': self.continuity_residual_H,
        }
