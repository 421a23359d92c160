"""
Pytest Configuration and Fixtures for Shared Utilities

This module provides:
- Temporary config directories
- Environment isolation for CINFTY_* variables
- ConfigLoader reset between tests
"""

import json
import os
import sys

import pytest

# Add project root to Python path
project_root = os.path.abspath(os.path.join(os.path.dirname(__file__), '..', '..'))
sys.path.insert(0, project_root)

from shared.app_utils import ConfigLoader
from shared.config_validator import defaults


# ============================================================================
# Environment Isolation
# ============================================================================

@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    """Remove CINFTY_* variables and reset the config loader"""
    for key in list(os.environ):
        if key.startswith('CINFTY_'):
            monkeypatch.delenv(key, raising=False)
    ConfigLoader.reset()
    yield
    ConfigLoader.reset()


# ============================================================================
# Config Files
# ============================================================================

@pytest.fixture
def config_file(tmp_path):
    """
    Write a config file and return its path

    Usage:
        path = config_file({'transfer': {'sample_size': 5}})
    """
    def _write(data=None, name='custom.json'):
        payload = {'environment': 'test'}
        payload.update(defaults() if data is None else data)
        path = tmp_path / name
        path.write_text(json.dumps(payload))
        return str(path)
    return _write


@pytest.fixture
def config_dir(tmp_path, monkeypatch):
    """Point CINFTY_CONFIG_DIR at an empty temporary directory"""
    directory = tmp_path / 'config'
    directory.mkdir()
    monkeypatch.setenv('CINFTY_CONFIG_DIR', str(directory))
    return directory
