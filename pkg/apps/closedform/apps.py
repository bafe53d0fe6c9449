from django.apps import AppConfig


class ClosedformConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.closedform'
    verbose_name = 'Пример с замкнутой формой'
