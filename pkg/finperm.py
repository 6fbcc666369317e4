import itertools
import logging
from math import factorial
from typing import Dict, FrozenSet, Iterable, Iterator, List, Sequence, Tuple

from errors import InvalidInputError

logger = logging.getLogger(__name__)


class FinitePerm:
    """A permutation of {1,...,n} in one-line notation.

    Composition follows (u*v)(i) = u(v(i)).
    """

    __slots__ = ('n', 'oneline')

    def __init__(self, oneline: Sequence[int]):
        values = tuple(int(v) for v in oneline)
        n = len(values)
        if n < 3:
            raise InvalidInputError(f"permutation must act on n >= 3 letters, got n={n}")
        if sorted(values) != list(range(1, n + 1)):
            raise InvalidInputError(f"one-line word {list(values)} is not a permutation of 1..{n}")
        self.n = n
        self.oneline = values

    @classmethod
    def identity(cls, n: int) -> 'FinitePerm':
        return cls(range(1, n + 1))

    def __call__(self, i: int) -> int:
        return self.oneline[i - 1]

    def __mul__(self, other: 'FinitePerm') -> 'FinitePerm':
        return compose(self, other)

    def __eq__(self, other) -> bool:
        return isinstance(other, FinitePerm) and self.oneline == other.oneline

    def __lt__(self, other: 'FinitePerm') -> bool:
        return self.oneline < other.oneline

    def __hash__(self) -> int:
        return hash(self.oneline)

    def __repr__(self) -> str:
        return f"FinitePerm({list(self.oneline)})"

    def inverse(self) -> 'FinitePerm':
        inv = [0] * self.n
        for i, v in enumerate(self.oneline, start=1):
            inv[v - 1] = i
        return FinitePerm(inv)

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.oneline, start=1))

    def length(self) -> int:
        return length(self)

    def right_descents(self) -> List[int]:
        return [i for i in range(1, self.n) if self(i) > self(i + 1)]

    def reduced_word(self) -> List[int]:
        """Indices i_1..i_k with self = s_{i_1} * ... * s_{i_k}, k = length."""
        w = self
        peeled = []
        while not w.is_identity():
            i = w.right_descents()[0]
            peeled.append(i)
            w = w * simple_reflection(i, self.n)
        return peeled[::-1]

    def to_list(self) -> List[int]:
        return list(self.oneline)


def _check_same_n(u: FinitePerm, v: FinitePerm) -> None:
    if u.n != v.n:
        raise InvalidInputError(f"cannot combine permutations of {u.n} and {v.n} letters")


def compose(u: FinitePerm, v: FinitePerm) -> FinitePerm:
    _check_same_n(u, v)
    return FinitePerm(u(v(i)) for i in range(1, u.n + 1))


def length(w: FinitePerm) -> int:
    values = w.oneline
    return sum(1 for a, b in itertools.combinations(range(w.n), 2) if values[a] > values[b])


def reflection_of_root(i: int, j: int, n: int) -> FinitePerm:
    """The transposition (i j), i.e. the reflection s_alpha for alpha = e_i - e_j."""
    if not (1 <= i < j <= n):
        raise InvalidInputError(f"root indices must satisfy 1 <= i < j <= {n}, got ({i}, {j})")
    oneline = list(range(1, n + 1))
    oneline[i - 1], oneline[j - 1] = j, i
    return FinitePerm(oneline)


def simple_reflection(i: int, n: int) -> FinitePerm:
    """w_i = s_i for 1 <= i <= n-1 and w_0 = s_theta = (1 n)."""
    if not (0 <= i <= n - 1):
        raise InvalidInputError(f"generator index must be in 0..{n - 1}, got {i}")
    if i == 0:
        return reflection_of_root(1, n, n)
    return reflection_of_root(i, i + 1, n)


def from_word(word: Iterable[int], n: int) -> FinitePerm:
    """Product w_{i_1} * ... * w_{i_k}; index 0 stands for w_0 = s_theta."""
    w = FinitePerm.identity(n)
    for i in word:
        w = w * simple_reflection(i, n)
    return w


def all_perms(n: int) -> Iterator[FinitePerm]:
    for oneline in itertools.permutations(range(1, n + 1)):
        yield FinitePerm(oneline)


def conjugate(sigma: FinitePerm, g: FinitePerm) -> FinitePerm:
    return sigma * g * sigma.inverse()


class TranspositionSet:
    """A set X of transpositions (i, j), 1 <= i < j <= n."""

    __slots__ = ('n', 'transpositions')

    def __init__(self, n: int, transpositions: Iterable[Tuple[int, int]] = ()):
        pairs = set()
        for pair in transpositions:
            i, j = (int(v) for v in pair)
            if i == j:
                raise InvalidInputError(f"transposition ({i}, {j}) has equal endpoints")
            i, j = min(i, j), max(i, j)
            if i < 1 or j > n:
                raise InvalidInputError(f"transposition ({i}, {j}) lies outside 1..{n}")
            pairs.add((i, j))
        self.n = n
        self.transpositions: FrozenSet[Tuple[int, int]] = frozenset(pairs)

    def __iter__(self):
        return iter(sorted(self.transpositions))

    def __len__(self) -> int:
        return len(self.transpositions)

    def __contains__(self, pair) -> bool:
        i, j = pair
        return (min(i, j), max(i, j)) in self.transpositions

    def __eq__(self, other) -> bool:
        return (isinstance(other, TranspositionSet) and self.n == other.n
                and self.transpositions == other.transpositions)

    def __hash__(self) -> int:
        return hash((self.n, self.transpositions))

    def __repr__(self) -> str:
        return f"TranspositionSet(n={self.n}, {sorted(self.transpositions)})"

    def as_perms(self) -> List[FinitePerm]:
        return [reflection_of_root(i, j, self.n) for i, j in self]

    def to_list(self) -> List[List[int]]:
        return [[i, j] for i, j in self]


class SetPartition:
    """A set partition of {1,...,n}; blocks are kept sorted by their least element."""

    __slots__ = ('n', 'blocks')

    def __init__(self, n: int, blocks: Iterable[Iterable[int]]):
        frozen = [frozenset(b) for b in blocks if b]
        covered = [x for b in frozen for x in b]
        if sorted(covered) != list(range(1, n + 1)):
            raise InvalidInputError(f"blocks {[sorted(b) for b in frozen]} do not partition 1..{n}")
        self.n = n
        self.blocks: Tuple[FrozenSet[int], ...] = tuple(sorted(frozen, key=min))

    def __eq__(self, other) -> bool:
        return isinstance(other, SetPartition) and self.blocks == other.blocks

    def __hash__(self) -> int:
        return hash(self.blocks)

    def __repr__(self) -> str:
        return f"SetPartition({[sorted(b) for b in self.blocks]})"

    def block_of(self, i: int) -> FrozenSet[int]:
        for block in self.blocks:
            if i in block:
                return block
        raise InvalidInputError(f"{i} is not in 1..{self.n}")

    def to_list(self) -> List[List[int]]:
        return [sorted(b) for b in self.blocks]


def closure_partition(X: TranspositionSet) -> SetPartition:
    parent = {i: i for i in range(1, X.n + 1)}

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, j in X:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)

    blocks: Dict[int, List[int]] = {}
    for i in range(1, X.n + 1):
        blocks.setdefault(find(i), []).append(i)
    return SetPartition(X.n, blocks.values())


def subgroup_order(X: TranspositionSet) -> int:
    order = 1
    for block in closure_partition(X).blocks:
        order *= factorial(len(block))
    return order


def subgroup_elements(X: TranspositionSet) -> List[FinitePerm]:
    """G_X: the permutations that map every block of the closure partition to itself."""
    blocks = [sorted(b) for b in closure_partition(X).blocks]
    elements = []
    for images in itertools.product(*(itertools.permutations(b) for b in blocks)):
        oneline = [0] * X.n
        for block, image in zip(blocks, images):
            for position, value in zip(block, image):
                oneline[position - 1] = value
        elements.append(FinitePerm(oneline))
    return sorted(elements)


def sort_blocks(w: FinitePerm, partition: SetPartition) -> FinitePerm:
    """The element of w G_X whose values on each block appear in increasing order."""
    oneline = list(w.oneline)
    for block in partition.blocks:
        positions = sorted(block)
        for position, value in zip(positions, sorted(oneline[p - 1] for p in positions)):
            oneline[position - 1] = value
    return FinitePerm(oneline)


def min_coset_reps(X: TranspositionSet) -> List[FinitePerm]:
    """Minimal length representatives of the left cosets w G_X.

    Built by handing each block a set of values and writing them in increasing order.
    """
    n = X.n
    blocks = [sorted(b) for b in closure_partition(X).blocks]
    reps: List[FinitePerm] = []

    def place(index: int, remaining: FrozenSet[int], oneline: List[int]) -> None:
        if index == len(blocks):
            reps.append(FinitePerm(oneline))
            return
        block = blocks[index]
        for values in itertools.combinations(sorted(remaining), len(block)):
            for position, value in zip(block, values):
                oneline[position - 1] = value
            place(index + 1, remaining - set(values), oneline)

    place(0, frozenset(range(1, n + 1)), [0] * n)
    logger.debug(f"{len(reps)} minimal coset representatives for {X}")
    return sorted(reps)


def brute_force_min_coset_reps(X: TranspositionSet) -> List[FinitePerm]:
    """Minimal length element of every coset, found by scanning all of S_n."""
    group = subgroup_elements(X)
    reps = set()
    for w in all_perms(X.n):
        reps.add(min((w * h for h in group), key=lambda u: (u.length(), u.oneline)))
    return sorted(reps)


def in_GX_descent_free(w: FinitePerm, X: TranspositionSet) -> bool:
    if w.n != X.n:
        raise InvalidInputError(f"permutation on {w.n} letters tested against X on {X.n}")
    base = w.length()
    return all((w * x).length() > base for x in X.as_perms())


def descent_free_elements(X: TranspositionSet) -> List[FinitePerm]:
    """Every w with l(wx) > l(w) for all x in X.

    Agrees with min_coset_reps when X is a union of chains (i_1, i_2), (i_2, i_3), ...
    (the shape of level-m floor sets), but not for every ordered X: {(1,2), (1,3)}
    also admits 132.
    """
    return sorted(w for w in all_perms(X.n) if in_GX_descent_free(w, X))


def ordered_condition(X: TranspositionSet) -> bool:
    """No right endpoint j is shared by two transpositions (i, j), (k, j)."""
    right_ends = [j for _, j in X]
    return len(right_ends) == len(set(right_ends))
