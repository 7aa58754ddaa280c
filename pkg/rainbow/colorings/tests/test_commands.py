from io import StringIO

import pytest
from django.core.management import call_command
from django.core.management.base import CommandError

from rainbow.colorings.formats import loads_matrix
from rainbow.colorings.formats import read_certificate
from rainbow.colorings.models import Certificate


def run(*args, **options):
    out, err = StringIO(), StringIO()
    call_command(*args, stdout=out, stderr=err, **options)
    return out.getvalue(), err.getvalue()


def test_cert_writes_the_matrix_to_stdout(k13):
    out, _ = run("cert", "k13")
    assert loads_matrix(out) == k13


def test_cert_picks_json_from_the_extension(tmp_path, k13):
    path = tmp_path / "k13.json"
    out, _ = run("cert", "k13", out=str(path))
    assert out == ""
    certificate = read_certificate(path)
    assert certificate.coloring == k13
    assert certificate.q == 4
    assert certificate.meta == {"source": "embedded certificate k13"}


def test_cert_unknown_name_is_a_usage_error():
    with pytest.raises(CommandError) as excinfo:
        run("cert", "k17")
    assert excinfo.value.returncode == 2


@pytest.mark.django_db
def test_cert_record_archives_the_certificate(k13):
    _, err = run("cert", "k13", record=True)
    stored = Certificate.objects.get()
    assert stored.source == "embedded"
    assert stored.to_coloring() == k13
    assert f"archived certificate {stored.pk}" in err


def test_power_writes_the_blow_up(k13_file):
    out, _ = run("power", k13_file, k=2)
    power = loads_matrix(out)
    assert power.n == 169
    assert power.ell == 6


def test_power_json_keeps_q_and_records_the_construction(tmp_path, k13_file):
    path = tmp_path / "k13-2.json"
    run("power", k13_file, k=2, out=str(path))
    certificate = read_certificate(path)
    assert certificate.q == 4
    assert certificate.meta["construction"] == "lexicographic power k=2"


def test_power_then_verify_accepts_the_square(tmp_path, k13_file):
    path = tmp_path / "k13-2.json"
    run("power", k13_file, k=2, out=str(path))
    out, _ = run("verify", str(path))
    assert "coloring: K_169, 6 colors" in out
    assert "balanced: yes (t = 28)" in out
    assert "subsets examined: 32795126" in out
    assert out.endswith("verdict: ACCEPTED\n")


def test_power_top_left_block_is_the_base(k13, k13_file):
    out, _ = run("power", k13_file, k=2)
    assert (loads_matrix(out).matrix[:13, :13] == k13.matrix).all()


def test_power_over_the_cap_is_a_usage_error(k13_file):
    with pytest.raises(CommandError) as excinfo:
        run("power", k13_file, k=2, cap=100)
    assert excinfo.value.returncode == 2


def test_power_of_a_missing_file_is_a_usage_error(tmp_path):
    with pytest.raises(CommandError) as excinfo:
        run("power", str(tmp_path / "missing.txt"), k=2)
    assert excinfo.value.returncode == 2


def test_export_dot_and_tikz(k13_file):
    dot, _ = run("export", k13_file)
    tikz, _ = run("export", k13_file, format="tikz")
    assert dot.startswith("graph coloring {")
    assert tikz.startswith(r"\documentclass")


def test_export_to_a_file(tmp_path, k13_file):
    path = tmp_path / "k13.dot"
    run("export", k13_file, out=str(path))
    assert path.read_text().count(" -- ") == 78
