from django.apps import AppConfig


class OdesolveConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.odesolve'
    verbose_name = 'Краевые задачи'
