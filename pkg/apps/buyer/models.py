from dataclasses import dataclass

from django.core.exceptions import ValidationError
from django.db import models
from django.utils.translation import gettext_lazy as _

from apps.odesolve.models import FundamentalSolution, GridFunction


class KCase(models.TextChoices):
    """Ветвь граничного значения v_p(H, -) = k(a, b)"""

    H_NOT_ABOVE_A = 'H<=a', 'H <= a (не поддерживается)'
    H_IN_BUY_INTERVAL = 'a<H<=b', 'a < H <= b: k = g(H, +)'
    H_ABOVE_B = 'b<H', 'b < H: k = хвост phi_+ в H'


@dataclass(frozen=True, eq=False)
class BuyerSolution:
    """Интервал покупки [a, b] и функция цены покупателя"""

    a: float
    b: float
    A: float
    vp_pos: GridFunction
    vp_neg: GridFunction
    tail_coeff: float
    phi: FundamentalSolution
    k: float
    k_case: KCase
    pasting_residual_a: float
    pasting_residual_b: float
    root_residual_b: float
    continuity_residual_L: float
    continuity_residual_H: float

    def __post_init__(self):
        object.__setattr__(self, 'k_case', KCase(self.k_case))
        self.clean()

    def clean(self):
        """Валидация на уровне модели"""
        if not self.L < self.a < self.b <= self.A + 1e-9:
            raise ValidationError({'a': _('Нужно L < a < b <= A')})
        if self.vp_neg.lo != 0.0 or self.vp_neg.values[0] != 0.0:
            raise ValidationError({'vp_neg': _('Нужно v_p(0, -) = 0')})

    @property
    def L(self):
        return self.vp_pos.lo

    @property
    def H(self):
        return self.vp_neg.hi

    @property
    def residuals(self):
        return {
            'pasting_a': self.pasting_residual_a,
            'pasting_b': self.pasting_residual_b,
            'root_b': self.root_residual_b,
            'continuity_L': self.continuity_residual_L,
            'continuity_H': self.continuity_residual_H,
        }
