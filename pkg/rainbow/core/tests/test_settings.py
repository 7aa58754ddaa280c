from config.settings import base
from config.settings import local


def test_database_runs_without_request_transactions():
    assert "ATOMIC_REQUESTS" not in base.DATABASES["default"]


def test_local_settings_keep_the_default_cache():
    assert "CACHES" not in vars(local)


def test_rainbow_defaults(settings):
    assert settings.RAINBOW_THREADS == 1
    assert base.RAINBOW_VERTEX_CAP == 13**3
