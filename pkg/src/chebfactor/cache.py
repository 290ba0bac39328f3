"""File-backed psi cache.

Format (UTF-8 JSON)::

    {"version": 1, "entries": {"<d>": ["c0", "c1", ...]}}

Coefficients are decimal strings in ascending degree order. Entries are
checked on load and a bad one makes the whole file unusable.
"""

from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path

from .poly import IntPoly
from .psi import PsiPoly, cached_psi, check_psi_entry, seed_psi

VERSION = 1


class CacheCorrupt(ValueError):
    def __init__(self, path, entry: str | None, reason: str):
        self.entry = entry
        where = f"entry {entry!r}" if entry is not None else "document"
        super().__init__(f"{path}: {where}: {reason}")


def _parse_entry(path, key: str, value) -> tuple[int, IntPoly]:
    if not key.isdigit() or key != str(int(key)) or int(key) < 1:
        raise CacheCorrupt(path, key, "key is not a positive decimal integer")
    if not isinstance(value, list) or not all(isinstance(c, str) for c in value):
        raise CacheCorrupt(path, key, "coefficients must be a list of decimal strings")
    try:
        coeffs = [int(c, 10) for c in value]
    except ValueError:
        raise CacheCorrupt(path, key, "coefficient is not a decimal integer") from None
    if coeffs and coeffs[-1] == 0:
        raise CacheCorrupt(path, key, "trailing zero coefficient")
    d = int(key)
    poly = IntPoly(coeffs)
    reason = check_psi_entry(d, poly)
    if reason:
        raise CacheCorrupt(path, key, reason)
    return d, poly


def load(path: str | os.PathLike) -> dict[int, IntPoly]:
    """Read and validate a cache file; a missing file is an empty cache."""
    path = Path(path)
    if not path.exists():
        return {}
    try:
        doc = json.loads(path.read_text(encoding="utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise CacheCorrupt(path, None, f"not valid JSON ({exc})") from None
    if not isinstance(doc, dict) or doc.get("version") != VERSION:
        raise CacheCorrupt(path, None, f"expected version {VERSION}")
    entries = doc.get("entries")
    if not isinstance(entries, dict):
        raise CacheCorrupt(path, None, "missing 'entries' object")
    return dict(_parse_entry(path, k, v) for k, v in entries.items())


def dumps(entries: dict[int, IntPoly]) -> str:
    body = {str(d): [str(c) for c in p.coeffs] for d, p in sorted(entries.items())}
    return json.dumps({"version": VERSION, "entries": body}, separators=(",", ":")) + "\n"


def save(path: str | os.PathLike, entries: dict[int, IntPoly]) -> None:
    """Atomically replace ``path`` with ``entries``."""
    path = Path(path)
    text = dumps(entries)
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        os.unlink(tmp)
        raise


def seed_from(path) -> dict[int, IntPoly]:
    entries = load(path)
    for d, poly in entries.items():
        seed_psi(d, poly)
    return entries


def write_back(path, loaded: dict[int, IntPoly]) -> None:
    """Persist the union of the loaded entries and everything computed since."""
    current: dict[int, PsiPoly] = cached_psi()
    merged = dict(loaded)
    merged.update({d: p.poly for d, p in current.items()})
    if merged != loaded or not Path(path).exists():
        save(path, merged)
