import pytest
import json
import os
import tempfile
import sys
import shutil

# Add the parent directory to the Python path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from region_cache import RegionCache


class TestRegionCache:

    def setup_method(self):
        """Setup test environment with temporary cache file."""
        self.temp_dir = tempfile.mkdtemp()
        self.cache_file = os.path.join(self.temp_dir, 'test_regions.json')
        self.cache = RegionCache(self.cache_file)
        self.entries = [
            {'signature': [0, 0, 0], 'minimal': [0, 1, 2], 'maximal': [0, 1, 2],
             'count': 1, 'bounded': True},
            {'signature': [1, 1, 1], 'minimal': [1, -1, 3], 'maximal': None,
             'count': 40, 'bounded': False},
        ]

    def teardown_method(self):
        """Clean up temporary files."""
        if os.path.exists(self.temp_dir):
            shutil.rmtree(self.temp_dir)

    def test_store_writes_file(self):
        self.cache.store_regions(3, 1, self.entries, 9)

        assert os.path.exists(self.cache_file)
        with open(self.cache_file, 'r') as f:
            data = json.load(f)
        assert data['3,1'] == {'radius': 9, 'regions': self.entries}

    def test_retrieval(self):
        self.cache.store_regions(3, 1, self.entries, 9)

        assert self.cache.has_regions(3, 1)
        assert self.cache.get_regions(3, 1)['regions'] == self.entries

    def test_retrieval_of_unknown_context(self):
        assert self.cache.get_regions(4, 2) is None
        assert not self.cache.has_regions(4, 2)

    def test_remove_regions(self):
        self.cache.store_regions(3, 1, self.entries, 9)
        self.cache.store_regions(3, 2, self.entries, 12)

        assert self.cache.remove_regions(3, 1) is True
        assert self.cache.remove_regions(3, 1) is False

        assert not self.cache.has_regions(3, 1)
        assert self.cache.get_cached_keys() == ['3,2']
        assert self.cache.has_regions(3, 2)
        with open(self.cache_file, 'r') as f:
            assert '3,1' not in json.load(f)

    def test_persistence_across_instances(self):
        self.cache.store_regions(3, 1, self.entries, 9)

        reloaded = RegionCache(self.cache_file)

        assert reloaded.get_cached_keys() == ['3,1']
        assert reloaded.get_regions(3, 1)['radius'] == 9

    def test_corrupted_file_starts_empty(self):
        with open(self.cache_file, 'w') as f:
            f.write('{ not json')

        cache = RegionCache(self.cache_file)

        assert cache.get_cache_size() == 0

    def test_removing_last_table_leaves_empty_file(self):
        self.cache.store_regions(3, 1, self.entries, 9)
        self.cache.remove_regions(3, 1)

        assert self.cache.get_cache_size() == 0
        with open(self.cache_file, 'r') as f:
            assert json.load(f) == {}

    def test_creates_missing_directory(self):
        nested = os.path.join(self.temp_dir, 'nested', 'regions.json')
        cache = RegionCache(nested)

        cache.store_regions(3, 1, self.entries, 9)

        assert os.path.exists(nested)
