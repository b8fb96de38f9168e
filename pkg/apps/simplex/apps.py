from django.apps import AppConfig


class SimplexConfig(AppConfig):
    name = 'apps.simplex'
    verbose_name = 'Regular simplex'
