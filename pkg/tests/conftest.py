# SPDX-License-Identifier: Apache-2.0

import pytest
from hypothesis import HealthCheck, settings

# isolated_data_dir is autouse and function-scoped
settings.register_profile("toeplitz", deadline=None, suppress_health_check=[HealthCheck.function_scoped_fixture])
settings.load_profile("toeplitz")


@pytest.fixture(autouse=True)
def isolated_data_dir(tmp_path, monkeypatch):
    """Point the user data directory at a scratch folder and clear cap overrides"""
    data_dir = tmp_path / "data"
    monkeypatch.setenv("TOEPLITZ_QUEENS_DATA_DIR", str(data_dir))
    monkeypatch.delenv("TOEPLITZ_QUEENS_CAPS", raising=False)
    return data_dir
