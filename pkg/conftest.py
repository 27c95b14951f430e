"""
Shared pytest fixtures
"""

import os
import sys

import numpy as np
import pytest

# Add src to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), 'src'))

from core.params import default_policy, make_base_pair, make_omega_triple  # noqa: E402


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture
def policy():
    return default_policy()


@pytest.fixture
def base():
    return make_base_pair(0.1, 0.2)


@pytest.fixture
def omega():
    return make_omega_triple(1.0, 1.0 - 0.6j, 3.1j)
