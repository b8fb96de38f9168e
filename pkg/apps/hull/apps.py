from django.apps import AppConfig


class HullConfig(AppConfig):
    name = 'apps.hull'
    verbose_name = 'Boundary point polytopes'
