from io import StringIO

import pytest
from django.core.management import call_command
from django.core.management.base import CommandError

from rainbow.colorings.coloring import recolor
from rainbow.colorings.formats import CertificateFile
from rainbow.colorings.formats import read_certificate
from rainbow.colorings.formats import write_certificate
from rainbow.search.models import SearchRun
from rainbow.verification.services import verify_certificate


def run(*args, **options):
    out, err = StringIO(), StringIO()
    call_command(*args, stdout=out, stderr=err, **options)
    return out.getvalue(), err.getvalue()


def run_failing(*args, **options):
    out, err = StringIO(), StringIO()
    with pytest.raises(CommandError) as excinfo:
        call_command(*args, stdout=out, stderr=err, **options)
    return excinfo.value.returncode, out.getvalue()


@pytest.fixture
def perturbed_file(tmp_path, k13):
    path = tmp_path / "perturbed.json"
    write_certificate(path, CertificateFile(coloring=recolor(k13, 2, 7, 6), q=4))
    return str(path)


def test_search_repairs_a_perturbed_certificate(tmp_path, k13, perturbed_file):
    path = tmp_path / "found.json"
    out, err = run(
        "search",
        "13",
        "6",
        q=4,
        seed=0,
        repair=perturbed_file,
        out=str(path),
    )
    assert "status: found" in out
    assert "repair: yes" in out
    assert "winning restart: 0" in out
    assert "wall time" in err
    found = read_certificate(path)
    assert found.coloring == k13
    assert found.meta["strategy"] == "local_search"
    assert verify_certificate(found.coloring, 4).accepted


def test_search_writes_matrix_to_stdout_without_out(perturbed_file):
    out, _ = run("search", "13", "6", q=4, seed=0, repair=perturbed_file)
    assert "\n13 6\n0 2 5 4 1 3 3 6 4 2 6 5 1\n" in out


def test_exhausted_search_exits_one():
    code, out = run_failing(
        "search",
        "7",
        "6",
        q=4,
        strategy="backtracking",
        max_steps=10**6,
    )
    assert code == 1
    assert "status: exhausted" in out
    assert "strategy: backtracking (seed 0)" in out


def test_trivial_instance_exits_two():
    code, out = run_failing("search", "13", "6", q=5, seed=1)
    assert code == 2
    assert "status: trivial_instance" in out


def test_local_search_needs_a_seed():
    code, _ = run_failing("search", "13", "6", q=4)
    assert code == 2


def test_divisibility_is_a_usage_error():
    code, _ = run_failing("search", "12", "5", q=4, seed=1)
    assert code == 2


@pytest.mark.django_db
def test_search_record_stores_the_run():
    code, out = run_failing(
        "search",
        "4",
        "3",
        q=3,
        strategy="backtracking",
        record=True,
    )
    stored = SearchRun.objects.get()
    assert code == 1
    assert f"run: {stored.pk}" in out
    assert stored.status == "exhausted"


@pytest.mark.django_db
def test_search_enqueue_archives_the_repair_input(settings, perturbed_file):
    settings.CELERY_TASK_ALWAYS_EAGER = True
    out, _ = run("search", "13", "6", q=4, seed=0, repair=perturbed_file, enqueue=True)
    stored = SearchRun.objects.get()
    assert out == f"queued search run {stored.pk}\n"
    assert stored.initial.source == "file"
    assert stored.status == "found"
    assert stored.result is not None
