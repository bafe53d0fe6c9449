import os

from django.conf import settings


def worker_count():
    """Число потоков для прогонов и моделирования.

    STOPLINE_THREADS=0 означает os.cpu_count(). Без настроенного Django
    (библиотечное использование) действует то же правило.
    """
    requested = getattr(settings, 'STOPLINE_THREADS', 0) if settings.configured else 0
    if requested and requested > 0:
        return int(requested)
    return os.cpu_count() or 1
