from django.apps import AppConfig


class LengthsConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'lengths'
