"""
Pytest Configuration and Fixtures for CLI Testing

This module provides:
- A runner that invokes the entry point and captures both streams
- Golden report loading
- Environment isolation
"""

import json
import os
import sys

import pytest

# Add project root to Python path
project_root = os.path.abspath(os.path.join(os.path.dirname(__file__), '..', '..'))
sys.path.insert(0, project_root)

from cli import main
from shared.app_utils import ConfigLoader

GOLDEN_DIR = os.path.join(os.path.dirname(__file__), 'golden')


# ============================================================================
# Environment Isolation
# ============================================================================

@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    """Drop CINFTY_* variables so the repo's test config applies"""
    for key in list(os.environ):
        if key.startswith('CINFTY_'):
            monkeypatch.delenv(key, raising=False)
    ConfigLoader.reset()
    yield
    ConfigLoader.reset()


# ============================================================================
# Runner
# ============================================================================

@pytest.fixture
def run(capsys):
    """
    Run the CLI under the test environment

    Usage:
        code, out, err = run('homology', '--dim-v', '2')
    """
    def _run(*argv, json_output=False):
        prefix = ['--env', 'test'] + (['--json'] if json_output else [])
        code = main(prefix + list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err
    return _run


@pytest.fixture
def run_json(run):
    """Run with --json and decode stdout"""
    def _run(*argv):
        code, out, err = run(*argv, json_output=True)
        return code, (json.loads(out) if out.strip() else None), err
    return _run


# ============================================================================
# Golden Reports
# ============================================================================

@pytest.fixture
def golden():
    """Load a golden report by file name"""
    def _load(name):
        with open(os.path.join(GOLDEN_DIR, name)) as f:
            return json.load(f)
    return _load


@pytest.fixture
def envelope():
    """Decode the JSON error envelope from stderr, skipping log lines"""
    def _decode(err):
        start = err.index("{\n")
        return json.loads(err[start:])
    return _decode


def pytest_configure(config):
    """Configure pytest"""
    config.addinivalue_line(
        "markers", "slow: marks tests as slow (deselect with '-m \"not slow\"')"
    )
