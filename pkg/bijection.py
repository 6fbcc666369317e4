import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from affperm import AffinePerm, coset_decompose, f_n, inverse, lift
from cores import NSet, nset_is_t_core, partition_from_nset
from errors import InvalidInputError, PreconditionError, VerificationError
from finperm import FinitePerm, TranspositionSet, conjugate, min_coset_reps, ordered_condition, simple_reflection
from geometry import is_dominant, is_extremal, wall_transposition_set
from levelt import (MINIMAL, LevelTContext, act_on_nset, canonical_rep, in_C, orbit,
                    simultaneous_cores)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ShiRegionRecord:
    """An extremal alcove w = g y together with its core in C_n^(t)."""
    w: AffinePerm
    g: FinitePerm
    y: AffinePerm
    sigma: FinitePerm
    core: NSet
    kind: str
    m: int

    @property
    def n(self) -> int:
        return self.w.n

    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        return self.w.length(), self.w.window

    def to_dict(self) -> Dict:
        return {
            'kind': self.kind,
            'n': self.n,
            'm': self.m,
            'word': self.w.reduced_word(),
            'window': self.w.to_list(),
            'length': self.w.length(),
            'g': self.g.to_list(),
            'y': self.y.to_list(),
            'sigma': self.sigma.to_list(),
            'core': self.core.to_list(),
            'partition': partition_from_nset(self.core).to_list(),
        }


def _require_extremal(w: AffinePerm, ctx: LevelTContext) -> None:
    if w.n != ctx.n:
        raise InvalidInputError(f"alcove of rank {w.n} used in context {ctx}")
    if not is_extremal(w, ctx.m, ctx.kind):
        raise PreconditionError(f"alcove {w.to_list()} is not {ctx.m}-{ctx.kind}")


def twist(y: AffinePerm) -> FinitePerm:
    """sigma = f_n(y^-1); sigma(i) - 1 is the residue of X_i, X the window of y^-1."""
    return f_n(inverse(y))


def _core_from_parts(g: FinitePerm, y: AffinePerm, ctx: LevelTContext) -> NSet:
    sigma = twist(y)
    base = NSet(inverse(y).window)
    return canonical_rep(act_on_nset(conjugate(sigma, g), base, ctx), ctx)


def alcove_to_core(w: AffinePerm, ctx: LevelTContext) -> NSet:
    _require_extremal(w, ctx)
    g, y = coset_decompose(w)
    return _core_from_parts(g, y, ctx)


def make_record(w: AffinePerm, ctx: LevelTContext) -> ShiRegionRecord:
    _require_extremal(w, ctx)
    g, y = coset_decompose(w)
    return ShiRegionRecord(w, g, y, twist(y), _core_from_parts(g, y, ctx), ctx.kind, ctx.m)


def level_m_floor_set(y: AffinePerm, m: int, kind: str = MINIMAL) -> TranspositionSet:
    """Transpositions of the level-m floors (minimal) or ceilings (maximal) of a dominant alcove."""
    if not is_dominant(y):
        raise PreconditionError(f"alcove {y.to_list()} is not dominant")
    return wall_transposition_set(y, m, kind)


def dominant_alcove_of_core(core: NSet) -> AffinePerm:
    """The dominant y with y^-1 . emptyset = core at level 1, i.e. y^-1 has window sorted(core)."""
    return inverse(AffinePerm(core.window()))


def orbit_alcoves(y: AffinePerm, ctx: LevelTContext) -> List[AffinePerm]:
    X = level_m_floor_set(y, ctx.m, ctx.kind)
    return [lift(rho) * y for rho in min_coset_reps(X)]


def enumerate_extremal(n: int, m: int, kind: str = MINIMAL) -> List[ShiRegionRecord]:
    """One record per region (minimal) or bounded region (maximal), sorted by (length, window)."""
    ctx = LevelTContext.for_kind(n, m, kind)
    records = []
    for core in simultaneous_cores(ctx):
        y = dominant_alcove_of_core(core)
        sigma = twist(y)
        X = level_m_floor_set(y, m, kind)
        for rho in min_coset_reps(X):
            w = lift(rho) * y
            records.append(ShiRegionRecord(w, rho, y, sigma, _core_from_parts(rho, y, ctx), kind, m))
    records.sort(key=ShiRegionRecord.sort_key)
    logger.info(f"Enumerated {len(records)} {m}-{kind} alcoves for n={n}")
    return records


def orbit_core(nset: NSet, ctx: LevelTContext) -> NSet:
    """The unique (n,t)-core in the orbit of nset."""
    candidates = [s for s in orbit(nset, ctx) if nset_is_t_core(s, ctx.t)]
    if len(candidates) != 1:
        raise VerificationError(
            f"orbit of {nset.to_list()} holds {len(candidates)} simultaneous cores, expected exactly one")
    return candidates[0]


def core_to_alcove(nset: NSet, ctx: LevelTContext) -> AffinePerm:
    if nset.n != ctx.n:
        raise InvalidInputError(f"n-set of size {nset.n} used in context {ctx}")
    if not in_C(nset, ctx):
        raise PreconditionError(f"n-set {nset.to_list()} is not in C_{ctx.n}^({ctx.t})")
    y = dominant_alcove_of_core(orbit_core(nset, ctx))
    for rho in min_coset_reps(level_m_floor_set(y, ctx.m, ctx.kind)):
        if _core_from_parts(rho, y, ctx) == nset:
            return lift(rho) * y
    raise VerificationError(f"no coset representative maps onto {nset.to_list()} in context {ctx}")


def twisted_position_act(p: int, window: Sequence[int], ctx: LevelTContext,
                         sigma: Optional[FinitePerm] = None) -> Tuple[int, ...]:
    """sigma w_p sigma^-1 acting on the window at level t, canonicalised and re-sorted.

    sigma defaults to the twist of the window itself; pass the twist of the
    starting window to follow a word.
    """
    if not (1 <= p <= ctx.n - 1):
        raise InvalidInputError(f"position must be in 1..{ctx.n - 1}, got {p}")
    if sigma is None:
        sigma = f_n(AffinePerm(window))
    moved = act_on_nset(conjugate(sigma, simple_reflection(p, ctx.n)), NSet(window), ctx)
    return canonical_rep(moved, ctx).window()


def twisted_word_act(word: Sequence[int], window: Sequence[int], ctx: LevelTContext) -> Tuple[int, ...]:
    """Apply twisted_position_act along a word of g, rightmost letter first."""
    sigma = f_n(AffinePerm(window))
    current = tuple(window)
    for p in reversed(list(word)):
        current = twisted_position_act(p, current, ctx, sigma)
    return current


def floor_set_is_ordered(y: AffinePerm, m: int, kind: str) -> bool:
    """The level-m floor set satisfies the ordered condition, and theta excludes the others."""
    X = level_m_floor_set(y, m, kind)
    theta = (1, y.n)
    return ordered_condition(X) and (theta not in X or len(X) == 1)

