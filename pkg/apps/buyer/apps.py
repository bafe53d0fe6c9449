from django.apps import AppConfig


class BuyerConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.buyer'
    verbose_name = 'Задача покупателя'
