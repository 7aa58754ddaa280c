import pytest

from rainbow.verification.tests.factories import VerificationRunFactory

pytestmark = pytest.mark.django_db


def test_verification_run_str():
    run = VerificationRunFactory(certificate__name="k13")
    assert str(run) == "k13 (K_13, 6 colors) q=4 [Pending]"


def test_runs_are_reachable_from_the_certificate():
    run = VerificationRunFactory()
    assert list(run.certificate.verification_runs.all()) == [run]
