import itertools
import logging
from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Sequence, Union

from affperm import AffinePerm, lift
from cores import NSet, nset_is_t_core
from errors import InvalidInputError, PreconditionError
from finperm import FinitePerm, all_perms, from_word, simple_reflection

logger = logging.getLogger(__name__)

MINIMAL = 'minimal'
MAXIMAL = 'maximal'
KINDS = (MINIMAL, MAXIMAL)


@dataclass(frozen=True)
class LevelTContext:
    """t = m*n + sign; sign +1 pairs with m-minimal alcoves, sign -1 with m-maximal ones."""
    n: int
    m: int
    sign: int = 1

    def __post_init__(self):
        if self.n < 3:
            raise InvalidInputError(f"n must be at least 3, got {self.n}")
        if self.m < 1:
            raise InvalidInputError(f"m must be at least 1, got {self.m}")
        if self.sign not in (1, -1):
            raise InvalidInputError(f"sign must be +1 or -1, got {self.sign}")

    @classmethod
    def for_kind(cls, n: int, m: int, kind: str) -> 'LevelTContext':
        if kind not in KINDS:
            raise InvalidInputError(f"kind must be one of {KINDS}, got '{kind}'")
        return cls(n, m, 1 if kind == MINIMAL else -1)

    @property
    def t(self) -> int:
        return self.m * self.n + self.sign

    @property
    def modulus(self) -> int:
        return self.n * self.t

    @property
    def kind(self) -> str:
        return MINIMAL if self.sign == 1 else MAXIMAL

    def __str__(self) -> str:
        return f"(n={self.n}, m={self.m}, t={self.t})"


GroupElement = Union[FinitePerm, AffinePerm, Sequence[int]]


def fayers_act(i: int, j: int, n: int, t: int) -> int:
    """The original level-t action for any t coprime to n."""
    if not (0 <= i <= n - 1):
        raise InvalidInputError(f"generator index must be in 0..{n - 1}, got {i}")
    shift = (n - 1) * (t - 1) // 2
    if (j - ((i - 1) * t - shift)) % n == 0:
        return j + t
    if (j - (i * t - shift)) % n == 0:
        return j - t
    return j


def affine_levelt_act_int(w: AffinePerm, j: int, ctx: LevelTContext) -> int:
    """Level-t action of any affine permutation on an integer.

    j = c + sign*t*x with c = j mod t is identified with the integer x + c;
    w moves that integer and the result is carried back into the class of c.
    """
    t, sign = ctx.t, ctx.sign
    c = j % t
    x = (j - c) // (sign * t)
    return c + sign * t * (w(x + c) - c)


def levelt_act_int(i: int, j: int, ctx: LevelTContext) -> int:
    """w_i acting at level t; i = 0 means w_0 = s_theta."""
    if not (0 <= i <= ctx.n - 1):
        raise InvalidInputError(f"generator index must be in 0..{ctx.n - 1}, got {i}")
    return affine_levelt_act_int(lift(simple_reflection(i, ctx.n)), j, ctx)


def as_affine(w: GroupElement, n: int) -> AffinePerm:
    if isinstance(w, AffinePerm):
        return w
    if isinstance(w, FinitePerm):
        return lift(w)
    return lift(from_word(w, n))


def act_on_nset(w: GroupElement, nset: NSet, ctx: LevelTContext) -> NSet:
    """Level-t action on an n-set.  Words are read in G, with 0 standing for w_0 = s_theta."""
    if nset.n != ctx.n:
        raise InvalidInputError(f"n-set of size {nset.n} used in context {ctx}")
    affine = as_affine(w, ctx.n)
    return NSet(affine_levelt_act_int(affine, x, ctx) for x in nset.entries)


def in_C(nset: NSet, ctx: LevelTContext) -> bool:
    return nset.spread() < ctx.modulus


def equivalent(first: NSet, second: NSet, ctx: LevelTContext) -> bool:
    modulus = ctx.modulus
    return sorted(x % modulus for x in first) == sorted(x % modulus for x in second)


def canonical_rep(nset: NSet, ctx: LevelTContext) -> NSet:
    """The unique member of C_n^(t) in the class of nset."""
    modulus = ctx.modulus
    values = list(nset.entries)
    while max(values) - min(values) >= modulus:
        hi = values.index(max(values))
        lo = values.index(min(values))
        values[hi] -= modulus
        values[lo] += modulus
    return NSet(values)


def enumerate_C(ctx: LevelTContext) -> List[NSet]:
    """All of C_n^(t), sorted by window."""
    n, t = ctx.n, ctx.t
    members = []
    for head in itertools.product(range(-t, t + 1), repeat=n - 1):
        last = -sum(head)
        if abs(last) > t:
            continue
        nset = NSet(n * a + r for r, a in enumerate(head + (last,)))
        if in_C(nset, ctx):
            members.append(nset)
    members.sort()
    logger.debug(f"|C| = {len(members)} in context {ctx}")
    return members


def simultaneous_cores(ctx: LevelTContext) -> List[NSet]:
    """n-sets of the (n,t)-cores."""
    return [s for s in enumerate_C(ctx) if nset_is_t_core(s, ctx.t)]


@dataclass(frozen=True)
class Stabilizer:
    elements: FrozenSet[FinitePerm]
    generators: tuple

    @property
    def order(self) -> int:
        return len(self.elements)


def _require_in_C(nset: NSet, ctx: LevelTContext) -> None:
    if not in_C(nset, ctx):
        raise PreconditionError(f"n-set {nset.to_list()} is not in C_{ctx.n}^({ctx.t})")


def stabilizer(nset: NSet, ctx: LevelTContext) -> Stabilizer:
    """Full stabiliser of the class of nset in S_n, by sweeping the group."""
    _require_in_C(nset, ctx)
    elements = frozenset(g for g in all_perms(ctx.n) if canonical_rep(act_on_nset(g, nset, ctx), ctx) == nset)
    generators = tuple(i for i in range(ctx.n) if simple_reflection(i, ctx.n) in elements)
    return Stabilizer(elements, generators)


def stabilizer_lemma_generators(nset: NSet, ctx: LevelTContext) -> Dict[str, List[int]]:
    """Generator indices predicted from consecutive n-set differences, under several readings.

    'literal' uses S_i - S_{i-1} = -sign*t and 'proof' uses +sign*t, both for
    1 <= i <= n-1; the '_mod' variants compare modulo n*t; 'wraparound' adds
    i = 0 when S_0 - S_{n-1} = sign*t.
    """
    t, modulus = ctx.t, ctx.modulus
    diffs = {i: nset[i] - nset[i - 1] for i in range(1, ctx.n)}
    readings = {
        'literal': [i for i, d in diffs.items() if d == -ctx.sign * t],
        'proof': [i for i, d in diffs.items() if d == ctx.sign * t],
        'literal_mod': [i for i, d in diffs.items() if (d + ctx.sign * t) % modulus == 0],
        'proof_mod': [i for i, d in diffs.items() if (d - ctx.sign * t) % modulus == 0],
    }
    wrap = nset[0] - nset[ctx.n - 1] == ctx.sign * t
    readings['wraparound'] = ([0] if wrap else []) + readings['proof']
    return readings


def generated_subgroup(generators: Iterable[int], n: int) -> FrozenSet[FinitePerm]:
    gens = [simple_reflection(i, n) for i in generators]
    identity = FinitePerm.identity(n)
    seen = {identity}
    queue = deque([identity])
    while queue:
        g = queue.popleft()
        for s in gens:
            h = g * s
            if h not in seen:
                seen.add(h)
                queue.append(h)
    return frozenset(seen)


def orbit(nset: NSet, ctx: LevelTContext) -> List[NSet]:
    """BFS closure of nset under w_1, ..., w_{n-1}, canonicalised; sorted by window."""
    _require_in_C(nset, ctx)
    seen = {nset}
    queue = deque([nset])
    while queue:
        current = queue.popleft()
        for i in range(1, ctx.n):
            image = canonical_rep(act_on_nset([i], current, ctx), ctx)
            if image not in seen:
                seen.add(image)
                queue.append(image)
    return sorted(seen)


def orbits(ctx: LevelTContext) -> List[List[NSet]]:
    """The orbits of G on C_n^(t), each sorted, in order of their least member."""
    remaining = set(enumerate_C(ctx))
    result = []
    while remaining:
        seed = min(remaining)
        found = orbit(seed, ctx)
        remaining.difference_update(found)
        result.append(found)
    return result
