import os

from category_o_settings import (
    TOOLKIT_DEFAULTS,
    get_cache_dir,
    get_default_depth,
    get_default_prime,
    get_toolkit_config,
    get_weyl_bound,
)


def test_defaults(monkeypatch):
    for name in ("CATEGORY_O_MAX_DEPTH", "CATEGORY_O_CACHE_ENABLED", "CATEGORY_O_DEFAULT_PRIME"):
        monkeypatch.delenv(name, raising=False)
    config = get_toolkit_config()
    assert config["max_depth"] == TOOLKIT_DEFAULTS["max_depth"]
    assert config["default_prime"] == 5
    assert config["cache_enabled"] is True


def test_integer_override(monkeypatch):
    monkeypatch.setenv("CATEGORY_O_MAX_DEPTH", "20")
    assert get_toolkit_config()["max_depth"] == 20


def test_invalid_integer_is_ignored(monkeypatch):
    monkeypatch.setenv("CATEGORY_O_WEYL_BOUND", "lots")
    assert get_toolkit_config()["weyl_bound"] == TOOLKIT_DEFAULTS["weyl_bound"]


def test_boolean_override(monkeypatch):
    monkeypatch.setenv("CATEGORY_O_ALLOW_LARGE_WEYL", "yes")
    monkeypatch.setenv("CATEGORY_O_CACHE_ENABLED", "0")
    config = get_toolkit_config()
    assert config["allow_large_weyl"] is True
    assert config["cache_enabled"] is False


def test_cache_dir_precedence(monkeypatch, tmp_path):
    monkeypatch.setenv("CATEGORY_O_CACHE_DIR", str(tmp_path / "env"))
    assert get_cache_dir() == str(tmp_path / "env")
    assert get_cache_dir(str(tmp_path / "flag")) == str(tmp_path / "flag")


def test_default_depth_by_rank():
    assert get_default_depth(2) == 8
    assert get_default_depth(3) == 6
    assert get_default_depth(5) == 4


def test_defaults_are_not_mutated():
    config = get_toolkit_config()
    config["default_depth"][2] = 1
    assert TOOLKIT_DEFAULTS["default_depth"][2] == 8
    assert os.path.basename(TOOLKIT_DEFAULTS["cache_dir"]) == "category_o"


def test_convenience_getters(monkeypatch):
    monkeypatch.setenv("CATEGORY_O_WEYL_BOUND", "1000")
    monkeypatch.setenv("CATEGORY_O_DEFAULT_PRIME", "7")
    assert get_weyl_bound() == 1000
    assert get_default_prime() == 7
