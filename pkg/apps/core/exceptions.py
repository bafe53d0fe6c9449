"""Исключения решателя stopline.

Коды выхода CLI строятся по этой иерархии: ошибки конфигурации и вывода
дают 2, всё остальное из StoplineError даёт 1.
"""


class StoplineError(Exception):
    """Базовое исключение проекта"""


class ParameterError(StoplineError, ValueError):
    """Недопустимые параметры модели или численной схемы"""


class DomainError(ParameterError):
    """Точка вне области определения"""


class EllipticityError(ParameterError):
    """Волатильность не положительна в рабочей области режима"""


class AssumptionViolation(StoplineError):
    """Нарушены условия знака для L±u - ru"""


class InvalidShapeError(StoplineError):
    """Найденная область остановки противоречит теореме о форме"""


class UnsupportedCaseError(StoplineError):
    """Ветвь задачи покупателя, которую решатель не поддерживает"""


class NumericalFailure(StoplineError):
    """Сбой численной процедуры"""


class NoBracketError(NumericalFailure):
    """Невязка не меняет знак на отрезке поиска.

    samples хранит пары (x, невязка) для диагностики.
    """

    def __init__(self, quantity, lo, hi, samples=()):
        self.quantity = quantity
        self.lo = lo
        self.hi = hi
        self.samples = tuple(samples)
        super().__init__(
            f'Невязка для {quantity} не меняет знак на [{lo:.6g}, {hi:.6g}]'
        )

    def describe_samples(self, limit=12):
        """Короткая таблица выборки невязки"""
        step = max(1, len(self.samples) // limit)
        rows = [f'  {x:.6g}: {value:+.6e}' for x, value in self.samples[::step]]
        return '\n'.join(rows)


class TruncationError(NumericalFailure):
    """Усечение x_max слишком мало для phi_plus"""

    def __init__(self, message, x_max=None):
        self.x_max = x_max
        super().__init__(message)


class ConvergenceError(NumericalFailure):
    """Итерация не достигла заданной точности"""

    def __init__(self, message, residual=None, samples=()):
        self.residual = residual
        self.samples = tuple(samples)
        super().__init__(message)


class SimulationError(NumericalFailure):
    """Нечисловое значение цены при моделировании"""


class ConfigError(StoplineError):
    """Ошибка разбора файла конфигурации"""

    def __init__(self, message, line=None, key=None):
        self.line = line
        self.key = key
        prefix = []
        if line is not None:
            prefix.append(f'строка {line}')
        if key:
            prefix.append(key)
        super().__init__(f"{', '.join(prefix)}: {message}" if prefix else message)


class OutputError(StoplineError):
    """Не удалось записать файл результата"""

    def __init__(self, path, reason):
        self.path = path
        super().__init__(f'{path}: {reason}')
