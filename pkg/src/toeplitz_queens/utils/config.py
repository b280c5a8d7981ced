# SPDX-License-Identifier: Apache-2.0

"""Layered configuration: bundled defaults, user config.yml, environment, flags"""

import json
import logging
import os

import yaml

from toeplitz_queens.core.errors import ConfigError
from toeplitz_queens.utils.paths import DEFAULTS_FILE, get_bundled_path, get_user_config_path

logger = logging.getLogger(__name__)

CAPS_ENV_VAR = "TOEPLITZ_QUEENS_CAPS"
CAP_KEYS = ('enumerate', 'count', 'dominate')


def _positive_int(value, what):
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise ConfigError(f"{what} must be a positive integer, got {value!r}")
    return value


def read_config_file(path) -> dict:
    """Parse a YAML configuration file; an empty file is an empty mapping"""
    with open(path, 'r', encoding='utf-8') as f:
        try:
            data = yaml.safe_load(f) or {}
        except yaml.YAMLError as e:
            raise ConfigError(f"Invalid YAML in {path}: {e}")
    if not isinstance(data, dict):
        raise ConfigError(f"{path} must contain a mapping, got {type(data).__name__}")
    return data


def write_config_file(path, data: dict):
    with open(path, 'w', encoding='utf-8') as f:
        yaml.safe_dump(data, f, default_flow_style=False, sort_keys=False, allow_unicode=True)


def parse_caps(caps_arg: str) -> dict:
    """Parse a caps value - single integer or JSON.

    Args:
        caps_arg: Either a single value (e.g., '12') applied to every cap,
                  or a JSON object with any of the keys enumerate, count, dominate

    Returns:
        dict: The caps named in the argument

    Raises:
        ConfigError: If format is invalid or a key is unknown
    """
    caps_arg = caps_arg.strip()
    if caps_arg.startswith('{'):
        try:
            parsed = json.loads(caps_arg)
        except json.JSONDecodeError as e:
            raise ConfigError(f"Invalid JSON format: {e}")

        unknown = [k for k in parsed if k not in CAP_KEYS]
        if unknown:
            raise ConfigError(
                f"Unknown cap(s): {', '.join(unknown)}\n"
                f"Valid keys: {', '.join(CAP_KEYS)}\n"
                f"Example: {CAPS_ENV_VAR}='{{\"enumerate\": 15, \"dominate\": 9}}'"
            )
        return {k: _positive_int(v, f"cap '{k}'") for k, v in parsed.items()}

    try:
        value = int(caps_arg)
    except ValueError:
        raise ConfigError(f"Invalid caps '{caps_arg}'. Use a single integer or a JSON object")
    _positive_int(value, "cap")
    return {k: value for k in CAP_KEYS}


def load_config() -> dict:
    """Bundled defaults overlaid with the user's config.yml, if any"""
    config = read_config_file(get_bundled_path(DEFAULTS_FILE))
    user_path = get_user_config_path()
    if user_path is not None:
        logger.debug(f"Loading user configuration: {user_path}")
        user = read_config_file(str(user_path))
        for key, value in user.items():
            if isinstance(value, dict) and isinstance(config.get(key), dict):
                config[key] = {**config[key], **value}
            else:
                config[key] = value
    return config


def load_caps(**overrides) -> dict:
    """Effective caps; keyword overrides (e.g. from flags) win when not None"""
    configured = load_config().get('caps')
    if not isinstance(configured, dict) or set(configured) - set(CAP_KEYS):
        raise ConfigError(f"'caps' must map {', '.join(CAP_KEYS)} to positive integers, got {configured!r}")
    caps = {k: _positive_int(configured[k], f"cap '{k}'") for k in CAP_KEYS}

    if env_value := os.environ.get(CAPS_ENV_VAR):
        caps.update(parse_caps(env_value))

    for key, value in overrides.items():
        if key not in CAP_KEYS:
            raise ConfigError(f"Unknown cap '{key}'")
        if value is not None:
            caps[key] = _positive_int(value, f"cap '{key}'")
    return caps


def load_workers():
    """Configured worker count, or None for one per CPU"""
    workers = load_config().get('workers')
    if workers is None:
        return None
    return _positive_int(workers, "workers")


def load_render_defaults() -> dict:
    return dict(load_config().get('render', {}))
