"""Shared fixtures for the inducedym test suite."""

import sys
from pathlib import Path

import numpy as np
import pytest

# Add project root to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent))

from inducedym.cellcomplex import build_hypercubic, build_polygon
from inducedym.config import Config


@pytest.fixture
def plaquette():
    """A single open square plaquette."""
    return build_hypercubic((1, 1), False, name="plaquette")


@pytest.fixture
def torus2x2():
    return build_hypercubic((2, 2), True, name="torus2x2")


@pytest.fixture
def monogon():
    """One link looping on one site, bounding one plaquette; its holonomy is the link itself."""
    return build_polygon(1)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def bundled_complex_dir():
    return Config.COMPLEX_DIR
