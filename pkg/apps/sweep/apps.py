from django.apps import AppConfig


class SweepConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.sweep'
    verbose_name = 'Прогоны по gamma'
