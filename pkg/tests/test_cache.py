import json
import os

import pytest

from category_o import cache
from category_o.cache import cache_key, cache_path, cache_roundtrip, load_or_build_window, load_window, store_window
from category_o.errors import CacheError
from category_o.roots import root_system
from category_o.verma import build_window


@pytest.fixture
def a2():
    return root_system("A2")


def _entry_path(rs, weight, depth, directory):
    return cache_path(str(directory), cache_key(rs, weight, depth))


def test_roundtrip_preserves_window(a2, tmp_path):
    window = build_window(a2, a2.weight([1, 0]), 6)
    assert cache_roundtrip(window, str(tmp_path)) == window


def test_missing_entry_is_none(a2, tmp_path):
    assert load_window(a2, a2.weight([0, 0]), 3, str(tmp_path)) is None


def test_stale_version_is_rejected_and_rebuilt(a2, tmp_path, monkeypatch):
    weight = a2.weight([1, 1])
    window = build_window(a2, weight, 4)
    store_window(window, str(tmp_path))
    monkeypatch.setattr(cache, "CACHE_VERSION", 2)
    with pytest.raises(CacheError):
        load_window(a2, weight, 4, str(tmp_path))
    assert load_or_build_window(a2, weight, 4, str(tmp_path)) == window


def test_garbage_entry_triggers_recompute(a2, tmp_path):
    weight = a2.weight([0, 1])
    path = _entry_path(a2, weight, 3, tmp_path)
    with open(path, "w", encoding="utf-8") as f:
        f.write("not json")
    with pytest.raises(CacheError):
        load_window(a2, weight, 3, str(tmp_path))
    rebuilt = load_or_build_window(a2, weight, 3, str(tmp_path))
    assert rebuilt == build_window(a2, weight, 3)
    assert load_window(a2, weight, 3, str(tmp_path)) == rebuilt


def test_tampered_payload_fails_checksum(a2, tmp_path):
    weight = a2.weight([1, 0])
    path = store_window(build_window(a2, weight, 3), str(tmp_path))
    with open(path, "r", encoding="utf-8") as f:
        document = json.load(f)
    document["payload"]["grams"][1][1][0][0] = "99"
    with open(path, "w", encoding="utf-8") as f:
        json.dump(document, f)
    with pytest.raises(CacheError) as excinfo:
        load_window(a2, weight, 3, str(tmp_path))
    assert "Checksum" in excinfo.value.message


def test_disabled_cache_writes_nothing(a2, tmp_path, monkeypatch):
    monkeypatch.setenv("CATEGORY_O_CACHE_ENABLED", "false")
    load_or_build_window(a2, a2.weight([0, 0]), 2, str(tmp_path))
    assert os.listdir(tmp_path) == []


def test_unwritable_cache_does_not_fail(a2, tmp_path):
    blocker = tmp_path / "occupied"
    blocker.write_text("")
    window = load_or_build_window(a2, a2.weight([0, 0]), 2, str(blocker))
    assert window == build_window(a2, a2.weight([0, 0]), 2)


def test_entries_do_not_collide(a2, tmp_path):
    first = store_window(build_window(a2, a2.weight([1, 0]), 2), str(tmp_path))
    second = store_window(build_window(a2, a2.weight([0, 1]), 2), str(tmp_path))
    third = store_window(build_window(a2, a2.weight([1, 0]), 3), str(tmp_path))
    assert len({first, second, third}) == 3


def test_failed_replace_leaves_no_temp_file(a2, tmp_path, monkeypatch):
    def refuse(src, dst):
        raise OSError("read-only target")

    monkeypatch.setattr(cache.os, "replace", refuse)
    with pytest.raises(CacheError):
        store_window(build_window(a2, a2.weight([1, 0]), 2), str(tmp_path))
    assert os.listdir(tmp_path) == []
