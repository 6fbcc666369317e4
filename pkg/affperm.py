import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple, Union

from errors import InvalidInputError
from finperm import FinitePerm

logger = logging.getLogger(__name__)

Number = Union[int, Fraction]


class AffinePerm:
    """An element of the affine symmetric group, stored by its n-window.

    The window (w(0), ..., w(n-1)) determines w on all of Z through
    w(j + n) = w(j) + n.  Composition follows (u*v)(j) = u(v(j)).
    """

    __slots__ = ('n', 'window')

    def __init__(self, window: Sequence[int]):
        values = tuple(int(v) for v in window)
        n = len(values)
        if n < 3:
            raise InvalidInputError(f"affine permutations need n >= 3, got window of size {n}")
        if sorted(v % n for v in values) != list(range(n)):
            raise InvalidInputError(f"window {list(values)} is not a transversal of Z mod {n}")
        if sum(values) != n * (n - 1) // 2:
            raise InvalidInputError(
                f"window {list(values)} sums to {sum(values)}, expected {n * (n - 1) // 2}")
        self.n = n
        self.window = values

    @classmethod
    def identity(cls, n: int) -> 'AffinePerm':
        return cls(range(n))

    def __call__(self, j: int) -> int:
        q, r = divmod(j, self.n)
        return self.window[r] + q * self.n

    def __mul__(self, other: 'AffinePerm') -> 'AffinePerm':
        return compose(self, other)

    def __eq__(self, other) -> bool:
        return isinstance(other, AffinePerm) and self.window == other.window

    def __lt__(self, other: 'AffinePerm') -> bool:
        return self.window < other.window

    def __hash__(self) -> int:
        return hash(self.window)

    def __repr__(self) -> str:
        return f"AffinePerm({list(self.window)})"

    def inverse(self) -> 'AffinePerm':
        return inverse(self)

    def length(self) -> int:
        return length(self)

    def is_identity(self) -> bool:
        return self.window == tuple(range(self.n))

    def right_descents(self) -> List[int]:
        n = self.n
        descents = [0] if self(-1) > self(0) else []
        return descents + [i for i in range(1, n) if self(i - 1) > self(i)]

    def reduced_word(self) -> List[int]:
        """Indices i_1..i_k with self = s_{i_1} * ... * s_{i_k} and k = length."""
        w = self
        peeled = []
        while not w.is_identity():
            i = w.right_descents()[0]
            peeled.append(i)
            w = w * generator(i, self.n)
        return peeled[::-1]

    def to_list(self) -> List[int]:
        return list(self.window)


@dataclass(frozen=True)
class RationalPoint:
    """A point of V = {x in Q^n : sum(x) = 0}."""
    coords: Tuple[Fraction, ...]

    def __post_init__(self):
        coords = tuple(Fraction(c) for c in self.coords)
        if sum(coords) != 0:
            raise InvalidInputError(f"point {[str(c) for c in coords]} does not have coordinate sum 0")
        object.__setattr__(self, 'coords', coords)

    @property
    def n(self) -> int:
        return len(self.coords)

    def __getitem__(self, index: int) -> Fraction:
        return self.coords[index]

    def pair(self, i: int, j: int) -> Fraction:
        """<x | e_i - e_j> with 1-based indices."""
        return self.coords[i - 1] - self.coords[j - 1]

    def to_list(self) -> List[str]:
        return [str(c) for c in self.coords]


@dataclass(frozen=True)
class AffineRoot:
    """The affine root e_i - e_j + k*delta, read as the function x -> <x | e_i - e_j> + k."""
    n: int
    i: int
    j: int
    k: int = 0

    def __post_init__(self):
        if self.i == self.j:
            raise InvalidInputError(f"affine root needs i != j, got i = j = {self.i}")
        if not (1 <= self.i <= self.n and 1 <= self.j <= self.n):
            raise InvalidInputError(f"root indices ({self.i}, {self.j}) outside 1..{self.n}")

    def negate(self) -> 'AffineRoot':
        return AffineRoot(self.n, self.j, self.i, -self.k)

    def is_positive(self) -> bool:
        return self.k > 0 or (self.k == 0 and self.i < self.j)

    def evaluate(self, point: RationalPoint) -> Fraction:
        return point.pair(self.i, self.j) + self.k

    def __str__(self) -> str:
        delta = '' if self.k == 0 else f" {'+' if self.k > 0 else '-'} {abs(self.k)}d"
        return f"e{self.i}-e{self.j}{delta}"


def simple_root(i: int, n: int) -> AffineRoot:
    """alpha_i = e_i - e_{i+1} for i >= 1 and alpha_0 = delta - theta = e_n - e_1 + delta."""
    if not (0 <= i <= n - 1):
        raise InvalidInputError(f"simple root index must be in 0..{n - 1}, got {i}")
    if i == 0:
        return AffineRoot(n, n, 1, 1)
    return AffineRoot(n, i, i + 1, 0)


def generator(i: int, n: int) -> AffinePerm:
    if n < 3:
        raise InvalidInputError(f"affine permutations need n >= 3, got {n}")
    if not (0 <= i <= n - 1):
        raise InvalidInputError(f"generator index must be in 0..{n - 1}, got {i}")
    window = list(range(n))
    if i == 0:
        window[0], window[n - 1] = -1, n
    else:
        window[i - 1], window[i] = i, i - 1
    return AffinePerm(window)


def from_word(word: Iterable[int], n: int) -> AffinePerm:
    w = AffinePerm.identity(n)
    for i in word:
        w = w * generator(i, n)
    return w


def parse_word(text: str) -> List[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(tok) for tok in text.replace(',', ' ').split()]
    except ValueError as e:
        raise InvalidInputError(f"word '{text}' must be a list of generator indices: {e}")


def _check_same_n(u, v) -> None:
    if u.n != v.n:
        raise InvalidInputError(f"rank mismatch: n={u.n} against n={v.n}")


def compose(u: AffinePerm, v: AffinePerm) -> AffinePerm:
    _check_same_n(u, v)
    return AffinePerm(u(x) for x in v.window)


def inverse(w: AffinePerm) -> AffinePerm:
    n = w.n
    inv = [0] * n
    for j, v in enumerate(w.window):
        q, r = divmod(v, n)
        inv[r] = j - q * n
    return AffinePerm(inv)


def act_on_int(w: AffinePerm, j: int) -> int:
    return w(j)


def length(w: AffinePerm) -> int:
    """Number of hyperplanes separating wA_0 from A_0, by the window inversion formula."""
    n, values = w.n, w.window
    total = 0
    for a in range(n):
        for b in range(a + 1, n):
            total += abs((values[b] - values[a]) // n)
    return total


def act_on_point(w: AffinePerm, p: RationalPoint) -> RationalPoint:
    if w.n != p.n:
        raise InvalidInputError(f"rank mismatch: n={w.n} against point of dimension {p.n}")
    n = w.n
    image: List[Fraction] = [Fraction(0)] * n
    for j, v in enumerate(w.window):
        q, r = divmod(v, n)
        image[r] = p[j] + q
    return RationalPoint(tuple(image))


def lift(g: FinitePerm) -> AffinePerm:
    """G as the stabiliser of the origin: window (g(1)-1, ..., g(n)-1)."""
    return AffinePerm(v - 1 for v in g.oneline)


def f_n(w: AffinePerm) -> FinitePerm:
    """The permutation of residues mod n induced by w; residue r is letter r+1."""
    return FinitePerm((v % w.n) + 1 for v in w.window)


def coset_decompose(w: AffinePerm) -> Tuple[FinitePerm, AffinePerm]:
    """w = g * y with g in G and y the minimal element of Gw (window of y^-1 ascending)."""
    y_inv = AffinePerm(sorted(inverse(w).window))
    y = inverse(y_inv)
    finite_part = compose(w, y_inv)
    g = FinitePerm(v + 1 for v in finite_part.window)
    logger.debug(f"coset_decompose {w}: g={g}, y={y}")
    return g, y


def act_on_affine_root(w: AffinePerm, root: AffineRoot) -> AffineRoot:
    """Image of k*delta + alpha; the real part transforms through f_n(w)."""
    if w.n != root.n:
        raise InvalidInputError(f"rank mismatch: n={w.n} against root of rank {root.n}")
    n = w.n
    qa, ra = divmod(w(root.i - 1), n)
    qb, rb = divmod(w(root.j - 1), n)
    return AffineRoot(n, ra + 1, rb + 1, root.k - qa + qb)
