"""Matrix and JSON certificate formats.

Matrix format: a ``<n> <ell>`` header line followed by n rows of n
space-separated integers, diagonal 0, LF line endings. JSON format: an object
with keys ``n``, ``ell``, ``q``, ``meta`` and ``matrix``. Both are lossless;
the format of a path is chosen by its extension only (``.json`` or matrix).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from dataclasses import field
from pathlib import Path

from rainbow.colorings.coloring import EdgeColoring
from rainbow.colorings.coloring import new_coloring
from rainbow.colorings.coloring import to_matrix
from rainbow.colorings.exceptions import ColoringError
from rainbow.colorings.exceptions import ParseError

MATRIX = "matrix"
JSON = "json"
FORMATS = (MATRIX, JSON)


@dataclass(frozen=True)
class CertificateFile:
    coloring: EdgeColoring
    q: int | None = None
    meta: dict[str, str] = field(default_factory=dict)


def format_for_path(path: Path | str) -> str:
    return JSON if Path(path).suffix.lower() == ".json" else MATRIX


def dumps_matrix(coloring: EdgeColoring) -> str:
    rows = to_matrix(coloring).tolist()
    lines = [f"{coloring.n} {coloring.ell}"]
    lines.extend(" ".join(str(x) for x in row) for row in rows)
    return "\n".join(lines) + "\n"


def _int_tokens(line: str, lineno: int) -> list[int]:
    try:
        return [int(token) for token in line.split()]
    except ValueError:
        msg = f"line {lineno}: expected integers, got {line.strip()!r}"
        raise ParseError(msg) from None


def loads_matrix(text: str) -> EdgeColoring:
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        msg = "empty matrix file"
        raise ParseError(msg)

    header = _int_tokens(lines[0], 1)
    if len(header) != 2:  # noqa: PLR2004
        msg = f"line 1: expected '<n> <ell>', got {lines[0].strip()!r}"
        raise ParseError(msg)
    n, ell = header
    body = lines[1:]
    if len(body) != n:
        msg = f"expected {n} matrix rows, found {len(body)}"
        raise ParseError(msg)

    rows = []
    for lineno, line in enumerate(body, start=2):
        row = _int_tokens(line, lineno)
        if len(row) != n:
            msg = f"line {lineno}: expected {n} entries, found {len(row)}"
            raise ParseError(msg)
        rows.append(row)

    try:
        return new_coloring(n, ell, rows)
    except ColoringError as exc:
        raise ParseError(str(exc)) from exc


def dumps_json(certificate: CertificateFile) -> str:
    coloring = certificate.coloring
    rows = ",\n".join(
        "    " + json.dumps(row, separators=(",", ":"))
        for row in to_matrix(coloring).tolist()
    )
    meta = json.dumps(certificate.meta, sort_keys=True, ensure_ascii=False)
    return (
        "{\n"
        f'  "n": {coloring.n},\n'
        f'  "ell": {coloring.ell},\n'
        f'  "q": {json.dumps(certificate.q)},\n'
        f'  "meta": {meta},\n'
        '  "matrix": [\n'
        f"{rows}\n"
        "  ]\n"
        "}\n"
    )


def _is_int(value: object) -> bool:
    # JSON true/false decode to bool, a subclass of int.
    return isinstance(value, int) and not isinstance(value, bool)


def loads_json(text: str) -> CertificateFile:
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        msg = f"invalid JSON: {exc}"
        raise ParseError(msg) from exc
    if not isinstance(document, dict):
        msg = "certificate must be a JSON object"
        raise ParseError(msg)

    missing = [key for key in ("n", "ell", "matrix") if key not in document]
    if missing:
        msg = f"certificate is missing keys: {', '.join(missing)}"
        raise ParseError(msg)
    n, ell, q = document["n"], document["ell"], document.get("q")
    if not _is_int(n) or not _is_int(ell):
        msg = "n and ell must be integers"
        raise ParseError(msg)
    if q is not None and (not _is_int(q) or q < 2):  # noqa: PLR2004
        msg = f"q must be an integer >= 2 when present, got {q!r}"
        raise ParseError(msg)
    meta = document.get("meta") or {}
    if not isinstance(meta, dict):
        msg = "meta must be an object of strings"
        raise ParseError(msg)

    try:
        coloring = new_coloring(n, ell, document["matrix"])
    except ColoringError as exc:
        raise ParseError(str(exc)) from exc
    return CertificateFile(
        coloring=coloring,
        q=q,
        meta={str(k): str(v) for k, v in meta.items()},
    )


def dumps(certificate: CertificateFile, fmt: str) -> str:
    if fmt == JSON:
        return dumps_json(certificate)
    return dumps_matrix(certificate.coloring)


def loads(text: str, fmt: str) -> CertificateFile:
    if fmt == JSON:
        return loads_json(text)
    return CertificateFile(coloring=loads_matrix(text))


def read_certificate(path: Path | str) -> CertificateFile:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        msg = f"cannot read {path}: {exc}"
        raise ParseError(msg) from exc
    try:
        return loads(text, format_for_path(path))
    except ParseError as exc:
        msg = f"{path}: {exc}"
        raise ParseError(msg) from exc


def write_certificate(
    path: Path | str,
    certificate: CertificateFile,
    fmt: str | None = None,
) -> None:
    path = Path(path)
    text = dumps(certificate, fmt or format_for_path(path))
    path.write_text(text, encoding="utf-8", newline="\n")
