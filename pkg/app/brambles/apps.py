from django.apps import AppConfig


class BramblesConfig(AppConfig):
    name = 'brambles'
