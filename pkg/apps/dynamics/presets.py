"""Готовые конфигурации модели.

Условия интегрируемости и невзрывания для каждого набора проверены
аналитически (численно они не проверяются) и записаны в docstring.
"""
from collections import namedtuple

from .models import ModelSpec, RegimeDynamics, UtilitySpec

Preset = namedtuple('Preset', ['name', 'model', 'utility', 'gammas'])

NEGATIVE_GBM = RegimeDynamics.gbm(mu=1 / 30, sigma2=1 / 30)


def _sweep(start, stop, step):
    count = int(round((stop - start) / step)) + 1
    return tuple(round(start + i * step, 10) for i in range(count))


def affine_closed_form(gamma=0.8):
    """Пример с замкнутой формой: mu+(x) = 0.1(x+1), sigma+^2(x) = 0.1x^2, r = 0.1.

    Снос и квадрат волатильности растут не быстрее x и x^2, поэтому
    процесс не взрывается; 1/sigma^2 локально интегрируема на (0, inf).
    """
    model = ModelSpec(
        positive=RegimeDynamics.affine(mu=0.1, sigma2=0.1, c=0.1),
        negative=NEGATIVE_GBM,
        L=1.0,
        H=2.0,
        r=0.1,
    )
    return Preset('affine_closed_form', model, UtilitySpec(gamma), (gamma,))


def affine_sweep(gamma=0.8):
    """Аффинная динамика: mu+ = 0.15, c = 0.16, sigma+^2 = 0.1, r = 0.15.

    Линейный снос и квадратичная дисперсия: те же оценки, что и для
    примера с замкнутой формой.
    """
    model = ModelSpec(
        positive=RegimeDynamics.affine(mu=0.15, sigma2=0.1, c=0.16),
        negative=NEGATIVE_GBM,
        L=1.0,
        H=2.0,
        r=0.15,
    )
    return Preset('affine_sweep', model, UtilitySpec(gamma), _sweep(0.70, 0.95, 0.05))


def vasicek_sweep(gamma=0.8):
    """Васичек в положительном режиме: 0.7 - 0.1x, sigma^2 = 0.1, r = 0.1.

    Постоянная дисперсия и ограниченный на компактах снос; возврат к
    уровню 7 исключает уход на бесконечность.
    """
    model = ModelSpec(
        positive=RegimeDynamics.vasicek(c=0.7, mu=0.1, sigma2=0.1),
        negative=NEGATIVE_GBM,
        L=1.0,
        H=2.0,
        r=0.1,
    )
    return Preset('vasicek_sweep', model, UtilitySpec(gamma), _sweep(0.5, 1.5, 0.1))


def cir_sweep(gamma=0.8):
    """CIR в положительном режиме: 0.7 - 0.1x, sigma^2(x) = 0.1x, r = 0.1.

    Положительный режим живёт на (L, inf) с L > 0, поэтому sqrt(x)
    отделена от нуля, а условие Феллера на нуле не требуется.
    """
    model = ModelSpec(
        positive=RegimeDynamics.cir(c=0.7, mu=0.1, sigma2=0.1),
        negative=NEGATIVE_GBM,
        L=1.0,
        H=2.0,
        r=0.1,
    )
    return Preset('cir_sweep', model, UtilitySpec(gamma), _sweep(0.5, 1.5, 0.1))


PRESETS = {
    'affine_closed_form': affine_closed_form,
    'affine_sweep': affine_sweep,
    'vasicek_sweep': vasicek_sweep,
    'cir_sweep': cir_sweep,
}


def get_preset(name, gamma=0.8):
    try:
        factory = PRESETS[name]
    except KeyError:
        raise KeyError(f'Неизвестный набор параметров: {name}') from None
    return factory(gamma)
