"""
On-disk cache for populated Verma windows.

One JSON file per (type, lambda, depth, ordering tag, code version). Files are
written to a temporary name in the cache directory and moved into place with
os.replace, so readers never see a half-written entry.
"""

import hashlib
import json
import logging
import os
import tempfile
from dataclasses import dataclass
from typing import Dict, Optional

from category_o_settings import get_cache_dir, get_toolkit_config

from .errors import CacheError
from .roots import RootSystem, Weight
from .verma import ORDERING_TAG, VermaWindow, build_window

logger = logging.getLogger(__name__)

# bump whenever the layout of VermaWindow.to_json changes
CACHE_VERSION = 1


def _canonical(document) -> str:
    return json.dumps(document, sort_keys=True, separators=(",", ":"))


@dataclass
class CacheEntry:
    key: Dict
    payload: Dict
    checksum: str

    @classmethod
    def for_window(cls, window: VermaWindow) -> "CacheEntry":
        payload = window.to_json()
        return cls(cache_key(window.rs, window.weight, window.depth), payload, _checksum(payload))

    def to_json(self) -> Dict:
        return {"key": self.key, "payload": self.payload, "checksum": self.checksum}


def _checksum(payload: Dict) -> str:
    return hashlib.sha256(_canonical(payload).encode("utf-8")).hexdigest()


def cache_key(rs: RootSystem, weight: Weight, depth: int) -> Dict:
    return {
        "type": rs.cartan_type.name,
        "lambda": weight.to_json(),
        "basis": weight.basis,
        "depth": depth,
        "ordering": ORDERING_TAG,
        "version": CACHE_VERSION,
    }


def cache_path(cache_dir: str, key: Dict) -> str:
    digest = hashlib.sha256(_canonical({k: v for k, v in key.items() if k != "version"}).encode("utf-8"))
    return os.path.join(cache_dir, f"window-{key['type']}-{digest.hexdigest()[:24]}.json")


def store_window(window: VermaWindow, cache_dir: Optional[str] = None) -> str:
    """
    Write a populated window to the cache.

    Returns:
        str: Path of the cache file

    Raises:
        CacheError: If the directory cannot be created or written
    """
    directory = get_cache_dir(cache_dir)
    entry = CacheEntry.for_window(window)
    path = cache_path(directory, entry.key)
    temp_path = None
    try:
        os.makedirs(directory, exist_ok=True)
        handle, temp_path = tempfile.mkstemp(prefix=".window-", suffix=".tmp", dir=directory)
        with os.fdopen(handle, "w", encoding="utf-8") as f:
            f.write(_canonical(entry.to_json()))
        os.replace(temp_path, path)
    except OSError as e:
        if temp_path is not None and os.path.exists(temp_path):
            os.unlink(temp_path)
        raise CacheError(f"Cannot write cache entry {path}: {e}", {"path": path}) from e
    logger.debug(f"Stored window {entry.key['type']} {window.weight} depth {window.depth} at {path}")
    return path


def load_window(rs: RootSystem, weight: Weight, depth: int, cache_dir: Optional[str] = None) -> Optional[VermaWindow]:
    """
    Read a window back from the cache.

    Returns:
        VermaWindow or None when no entry exists

    Raises:
        CacheError: On unreadable files, checksum failures, key or version mismatches
    """
    key = cache_key(rs, weight, depth)
    path = cache_path(get_cache_dir(cache_dir), key)
    if not os.path.exists(path):
        return None
    try:
        with open(path, "r", encoding="utf-8") as f:
            document = json.load(f)
        stored_key, payload, checksum = document["key"], document["payload"], document["checksum"]
    except (OSError, ValueError, KeyError, TypeError) as e:
        raise CacheError(f"Unreadable cache entry {path}: {e}", {"path": path}) from e
    if stored_key.get("version") != CACHE_VERSION:
        raise CacheError(
            f"Cache entry {path} has version {stored_key.get('version')}, expected {CACHE_VERSION}", {"path": path}
        )
    if stored_key != key:
        raise CacheError(f"Cache entry {path} belongs to a different window", {"path": path})
    if _checksum(payload) != checksum:
        raise CacheError(f"Checksum mismatch in cache entry {path}", {"path": path})
    window = VermaWindow(rs, weight, depth)
    try:
        window.load_tables(payload)
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as e:
        raise CacheError(f"Malformed payload in cache entry {path}: {e}", {"path": path}) from e
    return window


def cache_roundtrip(window: VermaWindow, cache_dir: Optional[str] = None) -> VermaWindow:
    """Store a window and load it back."""
    store_window(window, cache_dir)
    loaded = load_window(window.rs, window.weight, window.depth, cache_dir)
    if loaded is None:
        raise CacheError("Cache entry vanished between store and load")
    return loaded


def load_or_build_window(rs: RootSystem, weight: Weight, depth: int, cache_dir: Optional[str] = None) -> VermaWindow:
    """
    Return a populated window, from the cache when a valid entry exists.

    Corrupted or stale entries are logged and rebuilt; a cache that cannot
    be written never fails the computation.
    """
    if not get_toolkit_config()["cache_enabled"]:
        return build_window(rs, weight, depth)
    try:
        cached = load_window(rs, weight, depth, cache_dir)
    except CacheError as e:
        logger.warning(f"Ignoring cache entry: {e.message}; recomputing")
        cached = None
    if cached is not None:
        logger.info(f"Loaded Verma window for {weight} ({rs.cartan_type.name}) depth {depth} from cache")
        return cached
    window = build_window(rs, weight, depth)
    try:
        store_window(window, cache_dir)
    except CacheError as e:
        logger.warning(f"Could not cache window: {e.message}")
    return window
