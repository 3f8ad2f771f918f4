from django.apps import AppConfig


class ExclusionConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'exclusion'
