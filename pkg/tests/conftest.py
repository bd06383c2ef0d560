"""pytest configuration and fixtures"""
import os
import sys
import tempfile
from pathlib import Path

import numpy as np
import pytest

# Add project root to Python path
project_root = Path(__file__).parent.parent
if str(project_root) not in sys.path:
    sys.path.insert(0, str(project_root))

# Keep the log file out of the user's home directory
os.environ.setdefault('CIRCLE_UNCERTAINTY_HOME', tempfile.mkdtemp(prefix='circle_uncertainty_tests_'))


@pytest.fixture
def two_level_state():
    """(|0> + |1>)/sqrt(2)"""
    from circle_uncertainty.states import CircleState
    return CircleState.from_coefficients(0, [1 / np.sqrt(2), 1 / np.sqrt(2)])


@pytest.fixture
def random_corpus():
    """Twenty seeded random states on l in [-16, 16]"""
    from circle_uncertainty.states import random_state
    rng = np.random.default_rng(1234)
    return [random_state(rng) for _ in range(20)]


@pytest.fixture
def von_mises_unit():
    """Von Mises state with kappa = 1, lam = 0, alpha = 0"""
    from circle_uncertainty.states import VonMisesParams, von_mises
    return von_mises(VonMisesParams(1.0))


@pytest.fixture
def temp_state_dir(tmp_path):
    """Create a temporary directory for state files"""
    state_dir = tmp_path / "test_states"
    state_dir.mkdir()
    return state_dir
