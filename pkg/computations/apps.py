from django.apps import AppConfig


class ComputationsConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'computations'
    verbose_name = 'GGP computations'
