"""On-disk structure-constant tables with integrity checks."""

from __future__ import annotations

import hashlib
import json
import os
from pathlib import Path

from .algebra import AlgebraKind, enumerate_basis
from .element import StructureTable, structure_constants
from .errors import CorruptTable
from .scalar import Scalar
from .tangle import parse_tangle

FORMAT_VERSION = 1
CACHE_ENV = "TANGLEKIT_CACHE"
DEFAULT_CACHE = ".tanglekit-cache"


def _canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def params_hash(kind: AlgebraKind) -> str:
    payload = {"kind": kind.variant.value, "rank": kind.rank, "params": kind.params()}
    return hashlib.sha256(_canonical(payload).encode()).hexdigest()


def cache_dir(explicit: str | os.PathLike | None = None) -> Path:
    if explicit:
        return Path(explicit)
    return Path(os.environ.get(CACHE_ENV) or DEFAULT_CACHE)


def table_filename(kind: AlgebraKind) -> str:
    return f"{kind.variant.value}-{kind.rank}-{params_hash(kind)[:16]}.json"


def table_document(table: StructureTable) -> dict:
    doc = table.to_json()
    doc["format_version"] = FORMAT_VERSION
    doc["params_hash"] = params_hash(table.kind)
    body = {k: doc[k] for k in ("basis", "entries")}
    doc["content_digest"] = hashlib.sha256(_canonical(body).encode()).hexdigest()
    return doc


def dumps_table(table: StructureTable) -> str:
    return json.dumps(table_document(table), sort_keys=True, indent=1, ensure_ascii=False) + "\n"


def persist_table(kind: AlgebraKind, path: str | os.PathLike | None = None, table: StructureTable | None = None) -> Path:
    """Write the table of ``kind``; ``path`` may be a file or a directory."""
    target = Path(path) if path is not None else cache_dir()
    if target.suffix != ".json":
        target = target / table_filename(kind)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(dumps_table(table or structure_constants(kind)), encoding="utf-8")
    return target


def load_table(path: str | os.PathLike, kind: AlgebraKind) -> StructureTable:
    """Read a table written by :func:`persist_table` for ``kind``.

    Raises ``CorruptTable`` when the version, the parameter hash or the
    content digest does not match.
    """
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise CorruptTable(f"cannot read table {path}: {exc}") from exc
    if doc.get("format_version") != FORMAT_VERSION:
        raise CorruptTable(f"format version {doc.get('format_version')!r}, expected {FORMAT_VERSION}")
    if doc.get("params_hash") != params_hash(kind):
        raise CorruptTable("parameter hash does not match the requested algebra")
    body = {k: doc.get(k) for k in ("basis", "entries")}
    if doc.get("content_digest") != hashlib.sha256(_canonical(body).encode()).hexdigest():
        raise CorruptTable("content digest mismatch")
    try:
        basis = tuple(parse_tangle(s) for s in doc["basis"])
        entries = tuple(
            (e["i"], e["j"], e["k"], Scalar.from_json(e["coeff"])) for e in doc["entries"]
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise CorruptTable(f"malformed table: {exc}") from exc
    if basis != enumerate_basis(kind):
        raise CorruptTable("stored basis differs from the enumerated basis")
    return StructureTable(kind, basis, entries)


def cached_table(kind: AlgebraKind, directory: str | os.PathLike | None = None) -> StructureTable:
    """Load the cached table of ``kind``, computing and storing it if absent."""
    path = cache_dir(directory) / table_filename(kind)
    if path.exists():
        return load_table(path, kind)
    table = structure_constants(kind)
    persist_table(kind, path, table)
    return table
