from .base import *

DEBUG = True

# Для development подробный вывод решателя
LOGGING['loggers']['apps']['level'] = config('STOPLINE_LOG_LEVEL', default='DEBUG')
