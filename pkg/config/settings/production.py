from .base import *

DEBUG = False

SECRET_KEY = config('DJANGO_SECRET_KEY')

# В production журнал пишется ещё и в файл
LOG_DIR = Path(config('STOPLINE_LOG_DIR', default=str(BASE_DIR / 'logs')))
os.makedirs(LOG_DIR, exist_ok=True)

LOGGING['handlers']['file'] = {
    'level': 'INFO',
    'class': 'logging.FileHandler',
    'filename': LOG_DIR / 'stopline.log',
    'formatter': 'verbose',
}
LOGGING['loggers']['apps']['handlers'] = ['console', 'file']
LOGGING['root']['handlers'] = ['console', 'file']
