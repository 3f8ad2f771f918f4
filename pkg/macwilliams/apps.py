from django.apps import AppConfig


class MacwilliamsConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'macwilliams'
