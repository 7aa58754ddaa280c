import json

import pytest

from rainbow.colorings.exceptions import ParseError
from rainbow.colorings.formats import JSON
from rainbow.colorings.formats import MATRIX
from rainbow.colorings.formats import CertificateFile
from rainbow.colorings.formats import dumps
from rainbow.colorings.formats import dumps_json
from rainbow.colorings.formats import dumps_matrix
from rainbow.colorings.formats import format_for_path
from rainbow.colorings.formats import loads
from rainbow.colorings.formats import loads_json
from rainbow.colorings.formats import loads_matrix
from rainbow.colorings.formats import read_certificate
from rainbow.colorings.formats import write_certificate


def test_matrix_text_layout(k13):
    text = dumps_matrix(k13)
    lines = text.split("\n")
    assert lines[0] == "13 6"
    assert lines[1] == "0 2 5 4 1 3 3 6 4 2 6 5 1"
    assert text.endswith("\n")
    assert "\r" not in text
    assert len(lines) == 15


def test_matrix_and_json_are_lossless(k13):
    certificate = CertificateFile(coloring=k13, q=4, meta={"source": "test"})
    assert loads_matrix(dumps_matrix(k13)) == k13
    assert loads_json(dumps_json(certificate)) == certificate


def test_json_document_keys(k13):
    document = json.loads(dumps(CertificateFile(coloring=k13), JSON))
    assert document["n"] == 13
    assert document["ell"] == 6
    assert document["q"] is None
    assert document["meta"] == {}
    assert len(document["matrix"]) == 13


def test_matrix_loader_tolerates_trailing_blank_lines(k13):
    assert loads_matrix(dumps_matrix(k13) + "\n\n") == k13


@pytest.mark.parametrize(
    "text",
    [
        "",
        "3\n0 1 1\n1 0 1\n1 1 0\n",
        "3 1\n0 1 1\n1 0 1\n",
        "3 1\n0 1 1\n1 0\n1 1 0\n",
        "3 1\n0 1 x\n1 0 1\n1 1 0\n",
        "3 1\n0 1 1\n1 0 1\n1 2 0\n",
    ],
)
def test_matrix_loader_rejects_malformed_text(text):
    with pytest.raises(ParseError):
        loads_matrix(text)


@pytest.mark.parametrize(
    "text",
    [
        "not json",
        "[1, 2]",
        '{"n": 2, "ell": 1}',
        '{"n": "2", "ell": 1, "matrix": [[0, 1], [1, 0]]}',
        '{"n": 2, "ell": 1, "q": 1, "matrix": [[0, 1], [1, 0]]}',
        '{"n": 2, "ell": 1, "meta": ["x"], "matrix": [[0, 1], [1, 0]]}',
        '{"n": 2, "ell": 1, "matrix": [[0, 2], [2, 0]]}',
        '{"n": true, "ell": 1, "matrix": [[0]]}',
        '{"n": 2, "ell": true, "matrix": [[0, 1], [1, 0]]}',
        '{"n": 2, "ell": 1, "q": true, "matrix": [[0, 1], [1, 0]]}',
        '{"n": 2, "ell": 1, "matrix": [[false, true], [true, false]]}',
    ],
)
def test_json_loader_rejects_malformed_documents(text):
    with pytest.raises(ParseError):
        loads_json(text)


def test_json_loader_stringifies_meta():
    certificate = loads_json(
        '{"n": 2, "ell": 1, "q": 2, "meta": {"seed": 7}, "matrix": [[0, 1], [1, 0]]}',
    )
    assert certificate.q == 2
    assert certificate.meta == {"seed": "7"}


def test_format_follows_the_extension():
    assert format_for_path("out/k13.json") == JSON
    assert format_for_path("out/K13.JSON") == JSON
    assert format_for_path("out/k13.txt") == MATRIX
    assert format_for_path("k13") == MATRIX


def test_matrix_format_drops_q_and_meta(k13):
    certificate = CertificateFile(coloring=k13, q=4, meta={"source": "test"})
    restored = loads(dumps(certificate, MATRIX), MATRIX)
    assert restored.coloring == k13
    assert restored.q is None
    assert restored.meta == {}


def test_write_and_read_certificate(tmp_path, k13):
    path = tmp_path / "k13.json"
    certificate = CertificateFile(coloring=k13, q=4)
    write_certificate(path, certificate)
    assert b"\r\n" not in path.read_bytes()
    assert read_certificate(path) == certificate


def test_read_certificate_names_the_file(tmp_path):
    path = tmp_path / "broken.txt"
    path.write_text("2 1\n0 1\n")
    with pytest.raises(ParseError, match="broken.txt"):
        read_certificate(path)


def test_read_certificate_missing_file(tmp_path):
    with pytest.raises(ParseError, match="cannot read"):
        read_certificate(tmp_path / "missing.txt")
