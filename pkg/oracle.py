"""Brute-force ground truth: Cayley-graph BFS, signature-grouped regions, full S_n sweeps."""

import logging
from dataclasses import dataclass
from math import comb
from typing import Dict, FrozenSet, Iterator, List, Optional, Set, Tuple

from affperm import AffinePerm, generator
from config import Config
from cores import NSet
from errors import InvalidInputError, VerificationError
from finperm import FinitePerm, all_perms
from geometry import RegionSignature, region_signature
from levelt import LevelTContext, act_on_nset, canonical_rep
from region_cache import RegionCache

logger = logging.getLogger(__name__)


@dataclass
class RegionInfo:
    signature: RegionSignature
    minimal: AffinePerm
    maximal: Optional[AffinePerm]
    count: int
    bounded: bool
    min_length: int = 0
    max_length: int = 0
    minimal_ties: int = 1
    maximal_ties: int = 0

    def to_dict(self) -> Dict:
        return {
            'signature': self.signature.to_list(),
            'minimal': self.minimal.to_list(),
            'maximal': self.maximal.to_list() if self.maximal is not None else None,
            'count': self.count,
            'bounded': self.bounded,
        }


def cayley_layers(n: int) -> Iterator[List[AffinePerm]]:
    """Successive spheres of the Cayley graph, each sorted by window; layer k holds length k."""
    gens = [generator(i, n) for i in range(n)]
    previous: Set[AffinePerm] = set()
    current = {AffinePerm.identity(n)}
    while True:
        yield sorted(current)
        following = set()
        for w in current:
            for s in gens:
                v = w * s
                if v not in previous and v not in current:
                    following.add(v)
        previous, current = current, following


def cayley_ball(n: int, L: int) -> Dict[AffinePerm, int]:
    if L < 0:
        raise InvalidInputError(f"radius must be non-negative, got {L}")
    distances = {}
    for k, layer in enumerate(cayley_layers(n)):
        if k > L:
            break
        for w in layer:
            distances[w] = k
    return distances


def bfs_alcoves(n: int, L: int) -> List[AffinePerm]:
    """All elements of length at most L, sorted by (length, window)."""
    ball = cayley_ball(n, L)
    return sorted(ball, key=lambda w: (ball[w], w.window))


def default_radius(n: int, m: int) -> int:
    return m * comb(n, 2) + n + Config.ORACLE_RADIUS_SLACK


def extremal_length_bound(n: int, m: int) -> int:
    """Every m-minimal or m-maximal alcove has length at most m * C(n+1, 3) + C(n, 2)."""
    return m * comb(n + 1, 3) + comb(n, 2)


class RegionTable(dict):
    """signature -> RegionInfo, remembering the radius the table was saturated at."""

    def __init__(self, n: int, m: int, radius: int):
        super().__init__()
        self.n = n
        self.m = m
        self.radius = radius

    def bounded(self) -> List[RegionInfo]:
        return [info for info in self.values() if info.bounded]

    def minimal_alcoves(self) -> Set[AffinePerm]:
        return {info.minimal for info in self.values()}

    def maximal_alcoves(self) -> Set[AffinePerm]:
        return {info.maximal for info in self.values() if info.bounded}

    def to_entries(self) -> List[Dict]:
        return [self[sig].to_dict() for sig in sorted(self, key=lambda s: s.values)]


def _table_from_cache(n: int, m: int, cached: Dict) -> RegionTable:
    table = RegionTable(n, m, cached['radius'])
    for entry in cached['regions']:
        signature = RegionSignature(n, m, tuple(entry['signature']))
        maximal = AffinePerm(entry['maximal']) if entry['maximal'] is not None else None
        table[signature] = RegionInfo(signature, AffinePerm(entry['minimal']), maximal,
                                      entry['count'], entry['bounded'])
    return table


def regions_by_signature(n: int, m: int, L: Optional[int] = None,
                         cache: Optional[RegionCache] = None) -> RegionTable:
    """Group the Cayley ball by Shi region and keep the length-extremal alcove of each.

    The radius grows from L (or the default) until two consecutive layers add no
    new signature and it covers the extremal length bound, so every region's
    minimal alcove and every bounded region is seen in full.
    """
    if m < 1:
        raise InvalidInputError(f"m must be at least 1, got {m}")
    if L is None and cache is not None and cache.has_regions(n, m):
        logger.info(f"Using cached region table for n={n}, m={m}")
        return _table_from_cache(n, m, cache.get_regions(n, m))

    radius = default_radius(n, m) if L is None else L
    required = extremal_length_bound(n, m) if L is None else L
    quiet_layers = 0
    table = None
    infos: Dict[RegionSignature, RegionInfo] = {}
    bounded_cache: Dict[RegionSignature, bool] = {}

    for k, layer in enumerate(cayley_layers(n)):
        new_signatures = 0
        for w in layer:
            sig = region_signature(w, m)
            info = infos.get(sig)
            if info is None:
                bounded = bounded_cache.setdefault(sig, sig.is_bounded())
                infos[sig] = RegionInfo(sig, w, w if bounded else None, 1, bounded, k, k, 1, 1 if bounded else 0)
                new_signatures += 1
                continue
            info.count += 1
            if k == info.min_length:
                info.minimal_ties += 1
            if info.bounded:
                if k > info.max_length:
                    info.maximal, info.max_length, info.maximal_ties = w, k, 1
                elif k == info.max_length:
                    info.maximal_ties += 1
        quiet_layers = quiet_layers + 1 if new_signatures == 0 else 0

        if k >= radius and k >= required and quiet_layers >= 2:
            table = RegionTable(n, m, k)
            break
        if k >= max(radius, required) and k >= Config.ORACLE_MAX_RADIUS:
            raise VerificationError(f"region signatures for n={n}, m={m} did not saturate by radius {k}")
        if k >= radius:
            logger.debug(f"Raising oracle radius past {k} for n={n}, m={m}")

    for sig, info in infos.items():
        if info.minimal_ties != 1 or (info.bounded and info.maximal_ties != 1):
            raise VerificationError(f"region {sig.to_list()} has no unique extremal alcove")
        table[sig] = info
    logger.info(f"Oracle found {len(table)} regions ({len(table.bounded())} bounded) "
                f"for n={n}, m={m} at radius {table.radius}")

    if cache is not None and L is None:
        cache.store_regions(n, m, table.to_entries(), table.radius)
    return table


def oracle_extremal_alcoves(n: int, m: int, kind: str, table: Optional[RegionTable] = None) -> Set[AffinePerm]:
    table = table if table is not None else regions_by_signature(n, m)
    return table.minimal_alcoves() if kind == 'minimal' else table.maximal_alcoves()


def brute_orbit(nset: NSet, ctx: LevelTContext) -> Tuple[List[NSet], FrozenSet[FinitePerm]]:
    """Orbit and stabiliser of the class of nset, sweeping all of S_n."""
    images = {}
    for g in all_perms(ctx.n):
        images[g] = canonical_rep(act_on_nset(g, nset, ctx), ctx)
    stabilizer = frozenset(g for g, image in images.items() if image == nset)
    return sorted(set(images.values())), stabilizer
