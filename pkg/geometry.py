import logging
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Tuple, Union

from affperm import (AffinePerm, AffineRoot, RationalPoint, act_on_affine_root, act_on_point, f_n, inverse,
                     simple_root)
from errors import InvalidInputError, VerificationError
from finperm import TranspositionSet

logger = logging.getLogger(__name__)

FLOOR = 'floor'
CEILING = 'ceiling'
THROUGH_ORIGIN = 'through-origin'


@dataclass(frozen=True, order=True)
class Hyperplane:
    """H_{alpha,level} = {x : <x | e_i - e_j> = level}, normalised so that i < j."""
    n: int
    i: int
    j: int
    level: int

    def __post_init__(self):
        if not (1 <= self.i < self.j <= self.n):
            raise InvalidInputError(f"hyperplane root ({self.i}, {self.j}) must satisfy 1 <= i < j <= {self.n}")

    def evaluate(self, point: RationalPoint) -> Fraction:
        return point.pair(self.i, self.j) - self.level

    def is_shi(self, m: int) -> bool:
        return -m < self.level <= m

    def transposition(self) -> Tuple[int, int]:
        return self.i, self.j

    def __str__(self) -> str:
        return f"H(e{self.i}-e{self.j}, {self.level})"

    def to_dict(self) -> Dict:
        return {'root': [self.i, self.j], 'level': self.level}


@dataclass(frozen=True)
class Wall:
    hyperplane: Hyperplane
    label: int
    kind: str
    side: int

    def to_dict(self) -> Dict:
        return {**self.hyperplane.to_dict(), 'label': self.label, 'kind': self.kind, 'side': self.side}


@dataclass(frozen=True)
class Alcove:
    """The alcove wA_0."""
    w: AffinePerm

    def centroid(self) -> RationalPoint:
        return centroid(self.w)

    def walls(self) -> List[Wall]:
        return walls(self.w)


AlcoveLike = Union[Alcove, AffinePerm]


def _perm(alcove: AlcoveLike) -> AffinePerm:
    return alcove.w if isinstance(alcove, Alcove) else alcove


@lru_cache(maxsize=None)
def fundamental_alcove_data(n: int) -> Tuple[Tuple[RationalPoint, ...], RationalPoint]:
    """Vertices 0, omega_1, ..., omega_{n-1} of A_0 and their centroid."""
    if n < 3:
        raise InvalidInputError(f"n must be at least 3, got {n}")
    vertices = [RationalPoint(tuple(Fraction(0) for _ in range(n)))]
    for i in range(1, n):
        vertices.append(RationalPoint(tuple(
            Fraction(n - i, n) if r < i else Fraction(-i, n) for r in range(n))))
    c = tuple(sum(v[r] for v in vertices) / n for r in range(n))
    return tuple(vertices), RationalPoint(c)


def centroid(alcove: AlcoveLike) -> RationalPoint:
    w = _perm(alcove)
    point = act_on_point(w, fundamental_alcove_data(w.n)[1])
    for a in range(w.n):
        for b in range(a + 1, w.n):
            if (point[a] - point[b]).denominator == 1:
                raise VerificationError(f"centroid of {w} lies on a hyperplane e{a + 1}-e{b + 1}")
    return point


def vertices(alcove: AlcoveLike) -> List[RationalPoint]:
    w = _perm(alcove)
    return [act_on_point(w, v) for v in fundamental_alcove_data(w.n)[0]]


def pair_values(alcove: AlcoveLike) -> Dict[Tuple[int, int], Fraction]:
    """<c | e_i - e_j> for i < j at the centroid c, which equals (u(j-1) - u(i-1)) / n, u = w^-1."""
    w = _perm(alcove)
    u = inverse(w).window
    n = w.n
    return {(i, j): Fraction(u[j - 1] - u[i - 1], n)
            for i in range(1, n + 1) for j in range(i + 1, n + 1)}


def wall_from_root(image: AffineRoot, label: int) -> Wall:
    """Zero set of the root image, with the alcove on its positive side before normalising."""
    n = image.n
    if image.i < image.j:
        plane, side = Hyperplane(n, image.i, image.j, -image.k), 1
    else:
        plane, side = Hyperplane(n, image.j, image.i, image.k), -1
    if plane.level == 0:
        kind = THROUGH_ORIGIN
    elif (plane.level > 0) == (side > 0):
        kind = FLOOR
    else:
        kind = CEILING
    return Wall(plane, label, kind, side)


def walls(alcove: AlcoveLike) -> List[Wall]:
    w = _perm(alcove)
    return [wall_from_root(act_on_affine_root(w, simple_root(i, w.n)), i) for i in range(w.n)]


def floors(alcove: AlcoveLike) -> List[Wall]:
    return [wall for wall in walls(alcove) if wall.kind == FLOOR]


def ceilings(alcove: AlcoveLike) -> List[Wall]:
    return [wall for wall in walls(alcove) if wall.kind == CEILING]


@dataclass(frozen=True)
class WindowWallTest:
    k: int
    wall_at_k: bool
    wall_at_k_plus_1: bool


def window_wall_test(window: Tuple[int, ...], i: int, j: int, n: int) -> WindowWallTest:
    """Walls of a dominant alcove read from the ascending window X of y^-1.

    nk < X_j - X_i < n(k+1); H_{e_i-e_j,k} is a wall iff X_j - X_i = nk + 1 and
    H_{e_i-e_j,k+1} is a wall iff X_j - X_i = n(k+1) - 1.
    """
    if not (1 <= i < j <= n):
        raise InvalidInputError(f"window positions must satisfy 1 <= i < j <= {n}, got ({i}, {j})")
    diff = window[j - 1] - window[i - 1]
    k = diff // n
    return WindowWallTest(k, diff == n * k + 1, diff == n * (k + 1) - 1)


def is_dominant(alcove: AlcoveLike) -> bool:
    u = inverse(_perm(alcove)).window
    return all(u[r] < u[r + 1] for r in range(len(u) - 1))


def separating_hyperplanes(alcove: AlcoveLike) -> int:
    return sum(abs(v.numerator // v.denominator) for v in pair_values(alcove).values())


@dataclass(frozen=True)
class RegionSignature:
    """Per positive root e_i - e_j (i < j, lexicographic), the floor of <x | e_i - e_j>
    clamped to [-m, m].

    The region lies on the positive side of the Shi hyperplane H_{alpha,k} exactly
    when the stored value is at least k.
    """
    n: int
    m: int
    values: Tuple[int, ...]

    def pairs(self) -> List[Tuple[int, int]]:
        return [(i, j) for i in range(1, self.n + 1) for j in range(i + 1, self.n + 1)]

    def value(self, i: int, j: int) -> int:
        return self.values[self.pairs().index((i, j))]

    def signs(self) -> Dict[Hyperplane, int]:
        result = {}
        for (i, j), v in zip(self.pairs(), self.values):
            for k in range(-self.m + 1, self.m + 1):
                result[Hyperplane(self.n, i, j, k)] = 1 if v >= k else -1
        return result

    def bounds(self) -> Dict[Tuple[int, int], Tuple[Union[int, None], Union[int, None]]]:
        """(lower, upper) bound on <x | e_i - e_j> over the region, None where unbounded."""
        return {pair: (v if v > -self.m else None, v + 1 if v < self.m else None)
                for pair, v in zip(self.pairs(), self.values)}

    def is_bounded(self) -> bool:
        """Difference constraints bound every x_a - x_b iff their graph is strongly connected."""
        edges: Dict[int, List[int]] = {a: [] for a in range(1, self.n + 1)}
        for (i, j), (lower, upper) in self.bounds().items():
            if upper is not None:
                edges[i].append(j)
            if lower is not None:
                edges[j].append(i)
        reverse: Dict[int, List[int]] = {a: [] for a in edges}
        for a, targets in edges.items():
            for b in targets:
                reverse[b].append(a)
        return _reaches_all(edges, 1) and _reaches_all(reverse, 1)

    def to_list(self) -> List[int]:
        return list(self.values)


def _reaches_all(edges: Dict[int, List[int]], start: int) -> bool:
    seen = {start}
    queue = deque([start])
    while queue:
        a = queue.popleft()
        for b in edges[a]:
            if b not in seen:
                seen.add(b)
                queue.append(b)
    return len(seen) == len(edges)


def region_signature(alcove: AlcoveLike, m: int) -> RegionSignature:
    if m < 1:
        raise InvalidInputError(f"m must be at least 1, got {m}")
    w = _perm(alcove)
    n, u = w.n, inverse(w).window
    clamped = tuple(max(-m, min(m, (u[j] - u[i]) // n)) for i in range(n) for j in range(i + 1, n))
    return RegionSignature(n, m, clamped)


def same_region(first: AlcoveLike, second: AlcoveLike, m: int) -> bool:
    return region_signature(first, m) == region_signature(second, m)


def is_bounded_region(alcove: AlcoveLike, m: int) -> bool:
    return region_signature(alcove, m).is_bounded()


def is_m_minimal(alcove: AlcoveLike, m: int) -> bool:
    return all(wall.hyperplane.is_shi(m) for wall in floors(alcove))


def is_m_maximal(alcove: AlcoveLike, m: int) -> bool:
    return is_bounded_region(alcove, m) and all(wall.hyperplane.is_shi(m) for wall in ceilings(alcove))


def is_extremal(alcove: AlcoveLike, m: int, kind: str) -> bool:
    return is_m_minimal(alcove, m) if kind == 'minimal' else is_m_maximal(alcove, m)


def level_m_walls(alcove: AlcoveLike, m: int, kind: str) -> List[Wall]:
    """Floors (for minimal) or ceilings (for maximal) lying at level m."""
    wanted = FLOOR if kind == 'minimal' else CEILING
    return [wall for wall in walls(alcove) if wall.kind == wanted and wall.hyperplane.level == m]


def wall_transposition_set(alcove: AlcoveLike, m: int, kind: str) -> TranspositionSet:
    w = _perm(alcove)
    return TranspositionSet(w.n, (wall.hyperplane.transposition() for wall in level_m_walls(w, m, kind)))


def link_labels_hold(alcove: AlcoveLike) -> bool:
    """The wall labelled i is the reflection sigma s_i sigma^-1 (w_0 = s_theta), sigma = f_n(w)."""
    w = _perm(alcove)
    sigma = f_n(w)
    for wall in walls(w):
        a, b = (1, w.n) if wall.label == 0 else (wall.label, wall.label + 1)
        if tuple(sorted((sigma(a), sigma(b)))) != wall.hyperplane.transposition():
            return False
    return True
