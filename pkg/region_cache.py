import json
import os
import logging
from typing import Dict, List, Optional

logger = logging.getLogger(__name__)


class RegionCache:
    """Persists oracle region tables as JSON, keyed by "n,m".

    Each entry holds the search radius the table was built with and one row per
    region signature, so a later run can skip the breadth-first search.
    """

    def __init__(self, cache_file_path: str = "region_cache.json"):
        self.cache_file_path = cache_file_path
        self._tables: Dict[str, Dict] = {}
        self._read_file()

    @staticmethod
    def key(n: int, m: int) -> str:
        """Context key; JSON objects only take string keys."""
        return f"{n},{m}"

    def _read_file(self) -> None:
        """Populate the in-memory tables, treating an unreadable file as empty."""
        if not os.path.exists(self.cache_file_path):
            logger.info(f"No region cache at {self.cache_file_path}, starting empty")
            return
        try:
            with open(self.cache_file_path, 'r') as f:
                self._tables = json.load(f)
        except (json.JSONDecodeError, IOError) as e:
            logger.warning(f"Ignoring unreadable region cache {self.cache_file_path}: {e}")
            self._tables = {}
            return
        logger.info(f"Loaded region tables for {len(self._tables)} contexts from {self.cache_file_path}")

    def _write_file(self) -> None:
        """Write every table back, creating the parent directory on first use."""
        try:
            cache_dir = os.path.dirname(self.cache_file_path)
            if cache_dir:
                os.makedirs(cache_dir, exist_ok=True)
            with open(self.cache_file_path, 'w') as f:
                json.dump(self._tables, f, indent=2, sort_keys=True)
        except IOError as e:
            logger.error(f"Could not write region cache {self.cache_file_path}: {e}")
            return
        logger.debug(f"Wrote region tables for {len(self._tables)} contexts to {self.cache_file_path}")

    def store_regions(self, n: int, m: int, entries: List[Dict], radius: int) -> None:
        """Record the region rows found for (n, m) within the given radius."""
        self._tables[self.key(n, m)] = {'radius': radius, 'regions': entries}
        self._write_file()
        logger.debug(f"Cached {len(entries)} regions for n={n}, m={m}")

    def get_regions(self, n: int, m: int) -> Optional[Dict]:
        """The stored {'radius', 'regions'} entry, or None when (n, m) was never searched."""
        entry = self._tables.get(self.key(n, m))
        if entry is None:
            logger.debug(f"No cached regions for n={n}, m={m}")
        return entry

    def has_regions(self, n: int, m: int) -> bool:
        return self.key(n, m) in self._tables

    def remove_regions(self, n: int, m: int) -> bool:
        """Drop the table for (n, m) so the next oracle run searches again.

        Returns whether anything was removed.
        """
        if self._tables.pop(self.key(n, m), None) is None:
            return False
        self._write_file()
        logger.info(f"Removed cached regions for n={n}, m={m}")
        return True

    def get_cached_keys(self) -> List[str]:
        """Contexts with a stored table, as "n,m" strings in insertion order."""
        return list(self._tables.keys())

    def get_cache_size(self) -> int:
        """Number of contexts with a stored table."""
        return len(self._tables)
