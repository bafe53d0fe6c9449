from dataclasses import dataclass

from django.db import models


class SweepStatus(models.TextChoices):
    OK = 'ok', 'Обе задачи решены'
    ASSUMPTION_FAILED = 'assumption_failed', 'Условия знака нарушены'
    SELLER_FAILED = 'seller_failed', 'Сбой задачи продавца'
    BUYER_FAILED = 'buyer_failed', 'Сбой задачи покупателя'
    INVALID = 'invalid', 'Нарушено b <= A <= B'


@dataclass(frozen=True)
class SweepRow:
    """Строка прогона: границы для одного gamma"""

    gamma: float
    A: float | None = None
    B: float | None = None
    m: float | None = None
    a: float | None = None
    b: float | None = None
    seller_case: str | None = None
    status: str = SweepStatus.OK
    detail: str = ''

    @property
    def is_successful(self):
        return self.status == SweepStatus.OK

    def violations(self, L, H):
        """Нарушения b <= A <= B, m < H, L < a < b"""
        problems = []
        if not self.b <= self.A <= self.B:
            problems.append(f'b={self.b:.6g}, A={self.A:.6g}, B={self.B:.6g}')
        if not self.m < H:
            problems.append(f'm={self.m:.6g} >= H')
        if not L < self.a < self.b:
            problems.append(f'a={self.a:.6g} вне (L, b)')
        return problems
