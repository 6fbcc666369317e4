import itertools
import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Tuple

from errors import InvalidInputError, VerificationError
from finperm import FinitePerm, all_perms
from geometry import AlcoveLike, centroid

logger = logging.getLogger(__name__)

Symbol = Tuple[int, int]
Arc = Tuple[int, int]


def is_m_parking(values: Iterable[int], m: int) -> bool:
    """Sorted values b_1 <= ... <= b_n satisfy b_i <= m(i-1) + 1."""
    return all(b <= m * (i - 1) + 1 for i, b in enumerate(sorted(values), start=1))


class ParkingFunction:
    __slots__ = ('values', 'm')

    def __init__(self, values: Iterable[int], m: int = 1):
        vals = tuple(int(v) for v in values)
        if any(v < 1 for v in vals):
            raise InvalidInputError(f"parking function values must be positive, got {list(vals)}")
        if not is_m_parking(vals, m):
            raise InvalidInputError(f"{list(vals)} is not a {m}-parking function")
        self.values = vals
        self.m = m

    @property
    def n(self) -> int:
        return len(self.values)

    def __call__(self, i: int) -> int:
        return self.values[i - 1]

    def __eq__(self, other) -> bool:
        return isinstance(other, ParkingFunction) and self.values == other.values and self.m == other.m

    def __hash__(self) -> int:
        return hash((self.values, self.m))

    def __repr__(self) -> str:
        return f"ParkingFunction({list(self.values)}, m={self.m})"

    def to_list(self) -> List[int]:
        return list(self.values)


def parking_functions(n: int, m: int = 1) -> List[ParkingFunction]:
    return [ParkingFunction(v, m) for v in itertools.product(range(1, m * n + 1), repeat=n)
            if is_m_parking(v, m)]


@dataclass(frozen=True)
class ArcDiagram:
    """Symbols (i, k) standing for x_i + k, listed by decreasing value at the centroid.

    Arcs are pairs of 1-based positions; `arcs` is the pruned set, `raw_arcs` the
    set before pruning.
    """
    n: int
    m: int
    symbols: Tuple[Symbol, ...]
    arcs: FrozenSet[Arc]
    raw_arcs: FrozenSet[Arc]

    def position(self, symbol: Symbol) -> int:
        return self.symbols.index(symbol) + 1

    def chains(self) -> List[List[int]]:
        parent = {p: p for p in range(1, len(self.symbols) + 1)}

        def find(p: int) -> int:
            while parent[p] != p:
                parent[p] = parent[parent[p]]
                p = parent[p]
            return p

        for a, b in self.arcs:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
        groups: Dict[int, List[int]] = {}
        for p in parent:
            groups.setdefault(find(p), []).append(p)
        return sorted(sorted(g) for g in groups.values())

    def render(self) -> str:
        labels = [f"x{i}" if k == 0 else f"x{i}+{k}" for i, k in self.symbols]
        arcs = ' '.join(f"{a}-{b}" for a, b in sorted(self.arcs))
        return f"{' > '.join(labels)}\narcs: {arcs or '(none)'}"


def _strictly_contains(outer: Arc, inner: Arc) -> bool:
    return outer != inner and outer[0] <= inner[0] and inner[1] <= outer[1]


def arc_diagram(alcove: AlcoveLike, m: int) -> ArcDiagram:
    if m < 1:
        raise InvalidInputError(f"m must be at least 1, got {m}")
    point = centroid(alcove)
    n = point.n
    value = {(i, k): point[i - 1] + k for i in range(1, n + 1) for k in range(m)}
    symbols = tuple(sorted(value, key=lambda s: value[s], reverse=True))
    if len(set(value.values())) != len(value):
        raise VerificationError(f"symbol values tie at the centroid {point.to_list()}")
    pos = {s: p for p, s in enumerate(symbols, start=1)}

    raw = set()
    for i in range(1, n + 1):
        for k in range(1, m):
            raw.add(tuple(sorted((pos[(i, k)], pos[(i, k - 1)]))))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if point[i - 1] - point[j - 1] > m:
                raw.add(tuple(sorted((pos[(i, 0)], pos[(j, m - 1)]))))

    pruned = {arc for arc in raw if not any(_strictly_contains(arc, other) for other in raw)}
    return ArcDiagram(n, m, symbols, frozenset(pruned), frozenset(raw))


def parking_function(alcove: AlcoveLike, m: int) -> ParkingFunction:
    """f(i) = position of the leftmost term in the chain containing x_i."""
    diagram = arc_diagram(alcove, m)
    head = {}
    for chain in diagram.chains():
        for p in chain:
            head[p] = chain[0]
    return ParkingFunction((head[diagram.position((i, 0))] for i in range(1, diagram.n + 1)), m)


def sn_act(pi: FinitePerm, f: ParkingFunction) -> ParkingFunction:
    """(pi . f)(i) = f(pi^-1(i))."""
    if pi.n != f.n:
        raise InvalidInputError(f"permutation on {pi.n} letters applied to parking function of length {f.n}")
    inv = pi.inverse()
    return ParkingFunction((f(inv(i)) for i in range(1, f.n + 1)), f.m)


def stabilizer_of(f: ParkingFunction) -> FrozenSet[FinitePerm]:
    return frozenset(pi for pi in all_perms(f.n) if sn_act(pi, f) == f)
