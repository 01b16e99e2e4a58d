"""Content-addressed on-disk store for expensive group orders."""

from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path
from typing import Optional

CACHE_ENV = "CPTWEYL_CACHE_DIR"


def default_cache_dir() -> Path:
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return Path(base) / "cptweyl"


class OrderCache:
    """One JSON file per generator-set hash."""

    def __init__(self, root: os.PathLike | str):
        self.root = Path(root)

    def _path(self, key: str) -> Path:
        return self.root / key[:2] / f"{key}.json"

    def get(self, key: str) -> Optional[dict]:
        try:
            with open(self._path(key), encoding="utf-8") as fh:
                return json.load(fh)
        except (OSError, ValueError):
            return None

    def put(self, key: str, value: dict) -> None:
        path = self._path(key)
        path.parent.mkdir(parents=True, exist_ok=True)
        # write-then-rename so concurrent workers never see a partial file
        fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            json.dump(value, fh, sort_keys=True)
        os.replace(tmp, path)


_active: Optional[OrderCache] = None


def set_cache(root: os.PathLike | str | None) -> None:
    """Select the cache directory for this process; ``None`` disables caching."""
    global _active
    _active = OrderCache(root) if root is not None else None


def get_cache() -> Optional[OrderCache]:
    return _active
