from django.apps import AppConfig


class EntangleConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "entangle"
    verbose_name = "几何纠缠度量"
