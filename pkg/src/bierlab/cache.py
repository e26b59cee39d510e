"""Flat-file result cache, content-addressed by canonical keys.

Records are JSON dicts stored one per file under sha256 of the key; writes
go through a temporary file and an atomic rename.  A corrupt file is
treated as a miss (the caller recomputes and overwrites) with a logged
warning.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
import tempfile

log = logging.getLogger("bierlab.cache")

ENV_VAR = "BIERLAB_CACHE"


def default_cache_dir() -> str | None:
    return os.environ.get(ENV_VAR) or None


def _path(cache_dir: str, key: str) -> str:
    digest = hashlib.sha256(key.encode("utf-8")).hexdigest()
    return os.path.join(cache_dir, f"{digest}.json")


def cache_get(cache_dir: str | None, key: str) -> dict | None:
    if not cache_dir:
        return None
    path = _path(cache_dir, key)
    try:
        with open(path, "r", encoding="utf-8") as fh:
            record = json.load(fh)
    except FileNotFoundError:
        return None
    except (json.JSONDecodeError, OSError, UnicodeDecodeError) as exc:
        log.warning("corrupt cache file %s (%s); recomputing", path, exc)
        return None
    if not isinstance(record, dict) or record.get("key") != key:
        log.warning("cache collision or stale record at %s; recomputing", path)
        return None
    return record


def cache_put(cache_dir: str | None, key: str, record: dict) -> None:
    if not cache_dir:
        return
    os.makedirs(cache_dir, exist_ok=True)
    record = dict(record)
    record["key"] = key
    path = _path(cache_dir, key)
    fd, tmp = tempfile.mkstemp(dir=cache_dir, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            json.dump(record, fh, sort_keys=True)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
