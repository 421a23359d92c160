"""
Pytest Configuration and Fixtures for Algebra Testing

This module provides:
- Generator and element fixtures for small dim V
- Cache cleanup between tests
- Custom markers
"""

import os
import sys

import pytest

# Add project root to Python path
project_root = os.path.abspath(os.path.join(os.path.dirname(__file__), '..', '..'))
sys.path.insert(0, project_root)

from algebra.cecomplex import clear_block_cache
from algebra.exterior import clear_basis_cache
from algebra.exterior import Element
from algebra.transfer import HClass, TransferConfig


# ============================================================================
# Element Fixtures
# ============================================================================

@pytest.fixture
def gen():
    """
    Element for a generator given by its indices

    Usage:
        gen(1) -> e1, gen(1, 2) -> e{1,2}
    """
    def _gen(*indices):
        return Element.generator(tuple(indices))
    return _gen


@pytest.fixture
def hclass():
    """Harmonic class of a degree-one generator at a given dim V"""
    def _hclass(index, n):
        return HClass.generator(index, n)
    return _hclass


@pytest.fixture(params=[2, 3])
def small_dim(request):
    """dim V values where exhaustive checks are cheap"""
    return request.param


@pytest.fixture
def calibrated():
    """Transfer configuration with the calibrated tree sign"""
    def _config(n, max_arity=5):
        return TransferConfig(n, 'a', max_arity)
    return _config


# ============================================================================
# Cache Management
# ============================================================================

@pytest.fixture
def fresh_blocks():
    """Start and finish a test with empty block and basis caches"""
    clear_block_cache()
    clear_basis_cache()
    yield
    clear_block_cache()
    clear_basis_cache()


# ============================================================================
# Pytest Configuration
# ============================================================================

def pytest_configure(config):
    """Configure pytest"""
    config.addinivalue_line(
        "markers", "slow: marks tests as slow (deselect with '-m \"not slow\"')"
    )
    config.addinivalue_line(
        "markers", "oracle: marks tests that compare against sympy"
    )
