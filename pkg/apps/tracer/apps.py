from django.apps import AppConfig


class TracerConfig(AppConfig):
    name = 'apps.tracer'
    verbose_name = 'Billiard tracer'
