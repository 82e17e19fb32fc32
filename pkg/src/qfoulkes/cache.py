"""Disk persistence for the character and Kostka-Foulkes memo tables.

File layout, one JSON document per line::

    {"format": "qfoulkes-memo", "version": 1}
    {"t": "chi", "lam": [3, 1], "mu": [2, 2], "v": -1}
    {"t": "table", "n": 4, "v": [...row-major entries...]}
    {"t": "kf", "lam": [3, 1], "mu": [2, 1, 1], "nums": [0, 1, 1], "den": 1}
    {"t": "end", "records": 3, "sha256": "..."}

The digest covers every line between the header and the trailer.  A file with
another version, a bad digest or an unreadable line is discarded with a
warning and the tables stay empty, so the values get recomputed.  A missing
file is a cold start.
"""
from __future__ import annotations

import hashlib
import json
import os
import tempfile
import warnings
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import characters
from .hall_littlewood import KOSTKA
from .partition import Partition, partitions_of
from .qpoly import QPoly

FORMAT = "qfoulkes-memo"
VERSION = 1
ENV_VAR = "QFOULKES_CACHE"


class CacheWarning(UserWarning):
    pass


@dataclass
class CacheStatus:
    path: str
    state: str  # "loaded", "missing", "discarded", "stored"
    characters: int = 0
    tables: int = 0
    kostka: int = 0
    reason: str | None = None


def default_path() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or Path.home() / ".cache"
    return Path(base) / "qfoulkes" / "memo.jsonl"


def _records():
    memo = characters.CHARACTERS
    for (lam, mu), v in sorted(memo.values.items()):
        yield {"t": "chi", "lam": list(lam), "mu": list(mu), "v": int(v)}
    for n, table in sorted(memo.tables.items()):
        yield {"t": "table", "n": n, "v": [int(x) for x in table.ravel()]}
    for (lam, mu), v in sorted(KOSTKA.values.items()):
        yield {"t": "kf", "lam": list(lam), "mu": list(mu), "nums": list(v.nums), "den": v.den}


def cache_store(path: str | os.PathLike | None = None) -> CacheStatus:
    """Write the current memo tables; the file is replaced atomically."""
    path = Path(path) if path is not None else default_path()
    path.parent.mkdir(parents=True, exist_ok=True)
    digest = hashlib.sha256()
    status = CacheStatus(str(path), "stored")
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(json.dumps({"format": FORMAT, "version": VERSION}) + "\n")
            count = 0
            for rec in _records():
                line = json.dumps(rec, separators=(",", ":"))
                digest.update(line.encode())
                fh.write(line + "\n")
                count += 1
                key = {"chi": "characters", "table": "tables", "kf": "kostka"}[rec["t"]]
                setattr(status, key, getattr(status, key) + 1)
            fh.write(json.dumps({"t": "end", "records": count, "sha256": digest.hexdigest()}) + "\n")
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return status


def _discard(status: CacheStatus, reason: str) -> CacheStatus:
    warnings.warn(f"discarding memo cache {status.path}: {reason}", CacheWarning, stacklevel=3)
    status.state, status.reason = "discarded", reason
    status.characters = status.tables = status.kostka = 0
    return status


def cache_load(path: str | os.PathLike | None = None) -> CacheStatus:
    """Merge a cache file into the in-memory tables.

    Nothing is merged unless the whole file validates.  I/O errors other than
    a missing file propagate.
    """
    path = Path(path) if path is not None else default_path()
    status = CacheStatus(str(path), "missing")
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError:
        return status
    lines = text.splitlines()
    try:
        header = json.loads(lines[0])
    except (IndexError, json.JSONDecodeError):
        return _discard(status, "unreadable header")
    if header.get("format") != FORMAT or header.get("version") != VERSION:
        return _discard(status, f"version mismatch ({header.get('version')!r} != {VERSION})")
    try:
        trailer = json.loads(lines[-1])
        body = lines[1:-1]
        if trailer.get("t") != "end" or trailer.get("records") != len(body):
            return _discard(status, "truncated file")
        digest = hashlib.sha256()
        for line in body:
            digest.update(line.encode())
        if digest.hexdigest() != trailer.get("sha256"):
            return _discard(status, "checksum mismatch")
        chi, tables, kf = [], [], []
        for line in body:
            rec = json.loads(line)
            kind = rec["t"]
            if kind == "chi":
                chi.append((Partition(rec["lam"]), Partition(rec["mu"]), int(rec["v"])))
            elif kind == "table":
                n = int(rec["n"])
                size = len(partitions_of(n))
                arr = np.array(rec["v"], dtype=np.int64)
                if arr.size != size * size:
                    raise ValueError(f"table for n={n} has the wrong size")
                tables.append((n, arr.reshape(size, size)))
            elif kind == "kf":
                kf.append((Partition(rec["lam"]), Partition(rec["mu"]),
                           QPoly._raw(tuple(int(x) for x in rec["nums"]), int(rec["den"]))))
            else:
                raise ValueError(f"unknown record type {kind!r}")
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        return _discard(status, f"bad record ({exc})")
    for lam, mu, v in chi:
        characters.CHARACTERS.insert(lam, mu, v)
    for n, arr in tables:
        characters.CHARACTERS.insert_table(n, arr)
    for lam, mu, v in kf:
        KOSTKA.insert(lam, mu, v)
    status.state = "loaded"
    status.characters, status.tables, status.kostka = len(chi), len(tables), len(kf)
    return status


def clear_memory() -> None:
    """Empty the in-memory tables (the file is untouched)."""
    characters.clear()
    KOSTKA.clear()
