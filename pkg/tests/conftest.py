import pytest
import sys
import os
from unittest.mock import patch

# Add the parent directory to the Python path so we can import our modules
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from affperm import from_word
from cores import NSet
from levelt import LevelTContext


@pytest.fixture
def mock_config():
    """Mock configuration for tests"""
    with patch('shi_atlas.Config') as mock:
        mock.LOG_LEVEL = 'INFO'
        mock.MAX_N = 5
        mock.MAX_M = 3
        mock.MAX_ENTRY = 10000
        mock.USE_REGION_CACHE = False
        mock.REGION_CACHE_PATH = 'region_cache.json'
        mock.RANDOM_TRIALS = 200
        mock.RANDOM_SEED = 1
        mock.MAX_SUGGESTIONS = 3
        yield mock


@pytest.fixture
def minimal_ctx():
    """t = 4: 1-minimal alcoves for n = 3"""
    return LevelTContext(3, 1, 1)


@pytest.fixture
def maximal_ctx():
    """t = 2: 1-maximal alcoves for n = 3"""
    return LevelTContext(3, 1, -1)


@pytest.fixture
def worked_alcoves():
    """The n = 3 orbit of s_0 s_1 A_0 and its neighbours"""
    return {
        's0': from_word([0], 3),
        's0s1': from_word([0, 1], 3),
        's1s0s1': from_word([1, 0, 1], 3),
        's2s1s0s1': from_word([2, 1, 0, 1], 3),
    }


@pytest.fixture
def worked_cores():
    """n-sets of the three cores in the orbit of (2) at t = 4"""
    return {
        's0s1': NSet([0, 4, -1]),
        's1s0s1': NSet([3, 4, -4]),
        's2s1s0s1': NSet([0, 7, -4]),
    }
