"""
Category O Toolkit Configuration Settings

This module provides default settings for the toolkit with environment variable
override support for power users to customize without code changes.
"""

import os
import logging

logger = logging.getLogger(__name__)


# Default configuration values
TOOLKIT_DEFAULTS = {
    "weyl_bound": 100000,
    "allow_large_weyl": False,
    "default_depth": {2: 8, 3: 6},
    "fallback_depth": 4,
    "max_depth": 14,
    "jh_max_rank": 2,
    "default_prime": 5,
    "cache_dir": os.path.join("~", ".cache", "category_o"),
    "cache_enabled": True,
    "schema_version": 1,
    "free_algebra_max_k": 4,
    "free_algebra_max_n": 4,
    "decomposition_max_n": 6,
}

_INT_OVERRIDES = {
    "CATEGORY_O_WEYL_BOUND": "weyl_bound",
    "CATEGORY_O_MAX_DEPTH": "max_depth",
    "CATEGORY_O_JH_MAX_RANK": "jh_max_rank",
    "CATEGORY_O_DEFAULT_PRIME": "default_prime",
    "CATEGORY_O_FREE_ALGEBRA_MAX_K": "free_algebra_max_k",
    "CATEGORY_O_FREE_ALGEBRA_MAX_N": "free_algebra_max_n",
    "CATEGORY_O_DECOMPOSITION_MAX_N": "decomposition_max_n",
}

_BOOL_OVERRIDES = {
    "CATEGORY_O_ALLOW_LARGE_WEYL": "allow_large_weyl",
    "CATEGORY_O_CACHE_ENABLED": "cache_enabled",
}


def get_toolkit_config():
    """
    Get toolkit configuration with environment variable overrides.

    Environment variables:
    - CATEGORY_O_WEYL_BOUND: Maximal Weyl group order to enumerate (int)
    - CATEGORY_O_ALLOW_LARGE_WEYL: Permit E7/E8 enumeration (true/false)
    - CATEGORY_O_MAX_DEPTH: Largest accepted Verma window depth (int)
    - CATEGORY_O_JH_MAX_RANK: Largest rank for the brute-force JH oracle (int)
    - CATEGORY_O_DEFAULT_PRIME: Residue characteristic used by audits (int)
    - CATEGORY_O_CACHE_DIR: Directory for cached windows
    - CATEGORY_O_CACHE_ENABLED: Turn the window cache on or off (true/false)

    Returns:
        dict: Configuration dictionary with defaults and overrides applied
    """
    config = dict(TOOLKIT_DEFAULTS)
    config["default_depth"] = dict(TOOLKIT_DEFAULTS["default_depth"])

    for env_name, key in _INT_OVERRIDES.items():
        raw = os.getenv(env_name)
        if raw:
            try:
                config[key] = int(raw)
            except ValueError:
                logger.warning(f"Ignoring invalid value {raw!r} for {env_name}")

    for env_name, key in _BOOL_OVERRIDES.items():
        raw = os.getenv(env_name)
        if raw:
            config[key] = raw.strip().lower() in ("1", "true", "yes")

    if os.getenv("CATEGORY_O_CACHE_DIR"):
        config["cache_dir"] = os.getenv("CATEGORY_O_CACHE_DIR")

    return config


# Convenience functions to get individual settings
def get_cache_dir(override=None):
    """Get the cache directory; an explicit override beats the environment."""
    if override:
        return os.path.expanduser(override)
    return os.path.expanduser(get_toolkit_config()["cache_dir"])


def get_default_prime():
    """Get the default residue characteristic with environment override support."""
    return get_toolkit_config()["default_prime"]


def get_weyl_bound():
    """Get the Weyl enumeration bound with environment override support."""
    return get_toolkit_config()["weyl_bound"]


def get_default_depth(rank):
    """Get the default Verma window depth for a given rank."""
    config = get_toolkit_config()
    return config["default_depth"].get(rank, config["fallback_depth"])
