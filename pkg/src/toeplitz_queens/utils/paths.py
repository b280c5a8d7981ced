# SPDX-License-Identifier: Apache-2.0

"""Path resolution for configuration and result files using platformdirs."""

import os
from pathlib import Path

try:
    from importlib.resources import files, as_file
except ImportError:
    from importlib_resources import files, as_file

from platformdirs import user_data_dir

APP_NAME = "toeplitz-queens"
ENV_VAR = "TOEPLITZ_QUEENS_DATA_DIR"
CONFIG_FILE = "config.yml"
DEFAULTS_FILE = "defaults.yml"


def get_user_data_dir() -> Path:
    """Get writable user data directory (env var or platformdirs)."""
    if custom := os.environ.get(ENV_VAR):
        return Path(custom).expanduser()
    return Path(user_data_dir(APP_NAME))


def get_bundled_data_dir() -> Path:
    """Get bundled metadata directory (read-only)."""
    return files("toeplitz_queens.metadata")


def get_bundled_path(filename: str) -> str:
    """Get path of a file shipped in the metadata package."""
    with as_file(get_bundled_data_dir() / filename) as path:
        return str(path)


def get_user_config_path() -> Path | None:
    """User override file, or None when the user has not created one."""
    user_file = get_user_data_dir() / CONFIG_FILE
    if user_file.exists():
        return user_file
    return None


def get_writable_path(filename: str) -> Path:
    """Get path for writing a file in the user data dir.

    Creates directory if needed.
    """
    user_dir = get_user_data_dir()
    user_dir.mkdir(parents=True, exist_ok=True)
    return user_dir / filename


def get_default_results_dir() -> Path:
    """Get default results directory (user data dir / results)."""
    return get_user_data_dir() / "results"


def get_config_location_message() -> str:
    """Get user-friendly message about which configuration is in effect."""
    user_dir = get_user_data_dir()
    env_set = os.environ.get(ENV_VAR)

    if get_user_config_path() is not None:
        if env_set:
            return f"Using configuration from: {user_dir / CONFIG_FILE} ({ENV_VAR})"
        return f"Using configuration from: {user_dir / CONFIG_FILE}"

    msg = "Using default configuration (bundled with package)"
    if env_set:
        msg += f"\n  Note: {ENV_VAR} is set but has no {CONFIG_FILE}"
    else:
        msg += "\n  Tip: Run 'tq config --init' to customize"
    return msg
