from django.apps import AppConfig


class FinderConfig(AppConfig):
    name = 'apps.finder'
    verbose_name = 'Periodic word finder'
