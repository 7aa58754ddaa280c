from django.apps import AppConfig
from django.utils.translation import gettext_lazy as _


class ColoringsConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "rainbow.colorings"
    verbose_name = _("Colorings")
