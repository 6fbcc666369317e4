import itertools
import logging
import random
from math import factorial
from typing import Any, Callable, Dict, List, Optional, Tuple

from affperm import AffinePerm, coset_decompose, f_n, generator, inverse, lift
from bijection import (ShiRegionRecord, alcove_to_core, core_to_alcove, enumerate_extremal, floor_set_is_ordered,
                       level_m_floor_set, twist, twisted_word_act)
from config import Config
from cores import (NSet, Partition, abacus_act, bead_counts, is_n_core, level1_act, level1_act_word, n_set, n_vector,
                   n_window, nset_is_t_core, nvector_from_nset, partition_from_bead_counts, partition_from_nset,
                   partition_from_nvector)
from errors import ShiAtlasError, VerificationError
from finperm import (TranspositionSet, all_perms, conjugate, descent_free_elements, min_coset_reps, ordered_condition,
                     subgroup_elements)
from geometry import Hyperplane, is_dominant, is_extremal, is_m_minimal, link_labels_hold, walls, window_wall_test
from levelt import (MAXIMAL, MINIMAL, KINDS, LevelTContext, act_on_nset, canonical_rep, enumerate_C, equivalent,
                    generated_subgroup, orbits, simultaneous_cores, stabilizer, stabilizer_lemma_generators)
from oracle import brute_orbit, cayley_ball, regions_by_signature
from parking import parking_function, parking_functions, stabilizer_of
from region_cache import RegionCache

logger = logging.getLogger(__name__)

PASS = 'pass'
FAIL = 'fail'
INFO = 'info'

Outcome = Tuple[str, Any]


def _passed(witness: Any = None) -> Outcome:
    return PASS, witness


def _failed(witness: Any) -> Outcome:
    return FAIL, witness


class Verifier:
    """Runs every named consistency check for one (n, m) and collects a report."""

    def __init__(self, n: int, m: int, use_oracle: bool = True, cache: Optional[RegionCache] = None):
        self.n = n
        self.m = m
        self.use_oracle = use_oracle
        self.cache = cache
        self.contexts = {kind: LevelTContext.for_kind(n, m, kind) for kind in KINDS}
        self._records: Dict[str, List[ShiRegionRecord]] = {}
        self._balls: Dict[int, Dict[AffinePerm, int]] = {}
        self.results: List[Dict] = []
        self.stats = {PASS: 0, FAIL: 0, INFO: 0}

    # shared data

    def records(self, kind: str) -> List[ShiRegionRecord]:
        if kind not in self._records:
            self._records[kind] = enumerate_extremal(self.n, self.m, kind)
        return self._records[kind]

    def dominant_records(self, kind: str) -> List[ShiRegionRecord]:
        return [r for r in self.records(kind) if r.g.is_identity()]

    def ball(self, radius: int) -> Dict[AffinePerm, int]:
        if radius not in self._balls:
            self._balls[radius] = cayley_ball(self.n, radius)
        return self._balls[radius]

    def dominant_ball(self) -> List[AffinePerm]:
        radius = 12 if self.n <= 4 else 8
        return sorted(w for w in self.ball(radius) if is_dominant(w))

    # driver

    def checks(self) -> List[Tuple[str, str, Callable[[], Outcome]]]:
        checks = [
            ('affperm.relations', 'generators are involutions satisfying the braid and commutation relations',
             self.check_relations),
            ('affperm.f_n_homomorphism', 'f_n(uv) = f_n(u) f_n(v)', self.check_f_n_homomorphism),
            ('affperm.coset_decompose', 'w = g y with y minimal in its coset and lengths adding',
             self.check_coset_decompose),
            ('finperm.descent_free_floor_sets', 'G^X read by descents equals the minimal coset representatives '
             'for level-m floor (ceiling) sets', self.check_descent_free_floor_sets),
            ('finperm.descent_free_ordered', 'G^X read by descents against minimal coset representatives '
             'for every ordered X', self.check_descent_free_ordered),
            ('cores.round_trip', 'partition, n-vector and n-set encodings are mutually inverse on n-cores',
             self.check_core_round_trip),
            ('cores.level1_equivariance', 'the level-1 action on partitions matches the action on n-sets and abaci',
             self.check_level1_equivariance),
            ('cores.fv_window', 'the n-window of y^-1 . emptyset is the window of y^-1 for dominant y',
             self.check_fv_window),
            ('levelt.count', '|C_n^(t)| = t^(n-1) for t = mn + 1 and t = mn - 1', self.check_C_count),
            ('levelt.canonical_unique', 'each class mod nt meets C_n^(t) exactly once',
             self.check_canonical_unique),
            ('levelt.equivalence_preserved', 'the level-t action preserves equivalence mod nt',
             self.check_equivalence_preserved),
            ('levelt.s0_equals_w0', 's_0 and s_theta act identically on classes', self.check_s0_equals_w0),
            ('levelt.orbits_partition', 'orbits partition C_n^(t), one per simultaneous core, by orbit-stabiliser',
             self.check_orbits_partition),
            ('levelt.stabilizer_lemma', 'stabilisers generated by the w_i with S_i - S_(i-1) = t (two sign readings)',
             self.check_stabilizer_lemma),
            ('levelt.stabilizer_wraparound', 'stabiliser generator lists restricted to i in 1..n-1',
             self.check_stabilizer_wraparound),
            ('geometry.window_walls', 'walls of a dominant alcove read from the window of y^-1',
             self.check_window_walls),
            ('geometry.link_labels', 'the wall labelled i is the reflection sigma s_i sigma^-1',
             self.check_link_labels),
            ('geometry.window_link', 'X_sigma(i) = S_(i-1) with sigma = f_n(y)', self.check_window_link),
            ('geometry.level_m_ordered', 'level-m floors (ceilings) of dominant extremal alcoves are ordered',
             self.check_level_m_ordered),
            ('geometry.dominance_lemmas', 'the dominant translate of an extremal alcove is extremal',
             self.check_dominance_lemmas),
            ('bijection.counts', '(mn+1)^(n-1) minimal and (mn-1)^(n-1) maximal alcoves', self.check_counts),
            ('bijection.round_trip', 'alcove_to_core and core_to_alcove are mutually inverse',
             self.check_round_trip),
            ('bijection.orbit_theorem', 'rho y is extremal iff rho lies in G^X', self.check_orbit_theorem),
            ('bijection.orbit_theorem_wording', 'orbit theorem for maximal alcoves read with "m-minimal"',
             self.check_orbit_theorem_wording),
            ('bijection.stabilizer_conjugacy', 'the stabiliser of the core is sigma G_X sigma^-1',
             self.check_stabilizer_conjugacy),
            ('bijection.twisted_action', 'twisted position action along a word of g reproduces the core',
             self.check_twisted_action),
            ('bijection.fv_restriction', 'dominant records carry exactly the (n,t)-cores',
             self.check_fv_restriction),
            ('bijection.unique_core_per_orbit', 'every orbit holds exactly one (n,t)-core',
             self.check_unique_core_per_orbit),
        ]
        if self.use_oracle:
            checks.append(('oracle.extremal_sets', 'extremal alcoves agree with the brute-force region table',
                           self.check_oracle_sets))
        checks += [
            ('parking.bijection', 'regions map bijectively onto m-parking functions', self.check_parking_bijection),
            ('parking.stabilizer', 'the stabiliser of the parking function of a dominant minimal alcove is G_X',
             self.check_parking_stabilizer),
        ]
        if self.m == 1:
            checks.append(('cores.bead_count_indexing', 'bead counts (0, a_1, ..., a_(n-1)), a_i <= n, index C_n^(n+1)',
                           self.check_bead_count_indexing))
        return checks

    def run(self) -> List[Dict]:
        logger.info(f"Verifying n={self.n}, m={self.m}")
        self.results = []
        self.stats = {PASS: 0, FAIL: 0, INFO: 0}
        for check_id, statement, check in self.checks():
            try:
                status, witness = check()
            except ShiAtlasError as e:
                logger.error(f"Check {check_id} raised: {e}")
                status, witness = FAIL, str(e)
            self.stats[status] += 1
            if status == FAIL:
                logger.warning(f"Check {check_id} failed: {witness}")
            else:
                logger.debug(f"Check {check_id}: {status}")
            self.results.append({'check_id': check_id, 'statement_ref': statement,
                                 'status': status, 'witness': witness})
        return self.results

    @property
    def exit_code(self) -> int:
        return VerificationError.exit_code if self.stats[FAIL] else 0

    def counts(self) -> Dict[str, int]:
        return {kind: len(self.records(kind)) for kind in KINDS}

    # affperm

    def check_relations(self) -> Outcome:
        n = self.n
        gens = [generator(i, n) for i in range(n)]
        identity = AffinePerm.identity(n)
        for i in range(n):
            if gens[i] * gens[i] != identity:
                return _failed({'generator': i})
            for j in range(i + 1, n):
                a, b = gens[i], gens[j]
                if (j - i) % n in (1, n - 1):
                    holds = a * b * a == b * a * b
                else:
                    holds = a * b == b * a
                if not holds:
                    return _failed({'generators': [i, j]})
        return _passed()

    def check_f_n_homomorphism(self) -> Outcome:
        elements = list(self.ball(3))
        for u in elements:
            for v in elements:
                if f_n(u * v) != f_n(u) * f_n(v):
                    return _failed({'u': u.to_list(), 'v': v.to_list()})
        return _passed({'elements': len(elements)})

    def check_coset_decompose(self) -> Outcome:
        for w in self.ball(4):
            g, y = coset_decompose(w)
            y_inv = inverse(y).window
            if (lift(g) * y != w or list(y_inv) != sorted(y_inv)
                    or w.length() != g.length() + y.length()):
                return _failed({'w': w.to_list(), 'g': g.to_list(), 'y': y.to_list()})
        return _passed()

    # finperm

    def check_descent_free_floor_sets(self) -> Outcome:
        for kind in KINDS:
            for record in self.dominant_records(kind):
                X = level_m_floor_set(record.y, self.m, kind)
                if descent_free_elements(X) != min_coset_reps(X):
                    return _failed({'kind': kind, 'y': record.y.to_list(), 'X': X.to_list()})
        return _passed()

    def check_descent_free_ordered(self) -> Outcome:
        n = min(self.n, 4)
        pairs = list(itertools.combinations(range(1, n + 1), 2))
        ordered = 0
        mismatches = []
        for size in range(len(pairs) + 1):
            for chosen in itertools.combinations(pairs, size):
                X = TranspositionSet(n, chosen)
                if not ordered_condition(X):
                    continue
                ordered += 1
                extra = sorted(set(descent_free_elements(X)) - set(min_coset_reps(X)))
                if extra:
                    mismatches.append({'X': X.to_list(), 'descent_free_only': [w.to_list() for w in extra]})
        return INFO, {'n': n, 'ordered_sets': ordered, 'mismatched': len(mismatches), 'examples': mismatches[:3]}

    # cores

    def check_core_round_trip(self) -> Outcome:
        for s in enumerate_C(self.contexts[MINIMAL]):
            lam = partition_from_nset(s)
            if not is_n_core(lam, self.n):
                return _failed({'nset': s.to_list(), 'partition': lam.to_list()})
            vector = nvector_from_nset(s)
            if n_set(lam, self.n) != s or n_vector(lam, self.n) != vector or partition_from_nvector(vector) != lam:
                return _failed({'nset': s.to_list(), 'partition': lam.to_list()})
        return _passed()

    def check_level1_equivariance(self) -> Outcome:
        n = self.n
        for s in enumerate_C(self.contexts[MINIMAL]):
            lam = partition_from_nset(s)
            for i in range(n):
                moved = level1_act(i, lam, n)
                s_i = generator(i, n)
                if n_set(moved, n) != NSet(s_i(x) for x in s):
                    return _failed({'nset': s.to_list(), 'generator': i})
                if abacus_act(i, n_vector(lam, n)) != n_vector(moved, n):
                    return _failed({'nset': s.to_list(), 'generator': i, 'via': 'abacus'})
        return _passed()

    def check_fv_window(self) -> Outcome:
        empty = Partition()
        for y in self.dominant_ball():
            y_inv = inverse(y)
            lam = level1_act_word(y_inv.reduced_word(), empty, self.n)
            if n_window(lam, self.n) != y_inv.window:
                return _failed({'y': y.to_list(), 'partition': lam.to_list()})
        return _passed()

    def check_bead_count_indexing(self) -> Outcome:
        n = self.n
        ctx = LevelTContext(n, 1, 1)
        indexed = {}
        for tail in itertools.product(range(n + 1), repeat=n - 1):
            counts = [0, *tail]
            lam = partition_from_bead_counts(counts)
            if bead_counts(lam, n) != counts:
                return _failed({'bead_counts': counts, 'partition': lam.to_list()})
            indexed[n_set(lam, n)] = counts
        members = set(enumerate_C(ctx))
        if set(indexed) != members or len(indexed) != (n + 1) ** (n - 1):
            return _failed({'indexed': len(indexed), 'members': len(members)})
        return _passed()

    # levelt

    def check_C_count(self) -> Outcome:
        found = {ctx.t: len(enumerate_C(ctx)) for ctx in self.contexts.values()}
        for t, size in found.items():
            if size != t ** (self.n - 1):
                return _failed({'t': t, 'size': size})
        return _passed(found)

    def check_canonical_unique(self) -> Outcome:
        rng = random.Random(Config.RANDOM_SEED)
        for ctx in self.contexts.values():
            members = enumerate_C(ctx)
            keys = {tuple(sorted(x % ctx.modulus for x in s)) for s in members}
            if len(keys) != len(members):
                return _failed({'t': ctx.t, 'reason': 'two members of C_n^(t) are equivalent'})
            member_set = set(members)
            spread = 3 * ctx.t
            for _ in range(Config.RANDOM_TRIALS):
                head = [rng.randint(-spread, spread) for _ in range(self.n - 1)]
                s = NSet(self.n * a + r for r, a in enumerate(head + [-sum(head)]))
                rep = canonical_rep(s, ctx)
                if rep not in member_set or not equivalent(s, rep, ctx) or canonical_rep(rep, ctx) != rep:
                    return _failed({'t': ctx.t, 'nset': s.to_list(), 'rep': rep.to_list()})
        return _passed({'trials': Config.RANDOM_TRIALS})

    def check_equivalence_preserved(self) -> Outcome:
        for ctx in self.contexts.values():
            for s in enumerate_C(ctx):
                shifted = list(s.entries)
                shifted[0] += ctx.modulus
                shifted[-1] -= ctx.modulus
                other = NSet(shifted)
                for i in range(self.n):
                    if canonical_rep(act_on_nset([i], s, ctx), ctx) != canonical_rep(act_on_nset([i], other, ctx), ctx):
                        return _failed({'t': ctx.t, 'nset': s.to_list(), 'generator': i})
        return _passed()

    def check_s0_equals_w0(self) -> Outcome:
        s0 = generator(0, self.n)
        for ctx in self.contexts.values():
            for s in enumerate_C(ctx):
                if canonical_rep(act_on_nset(s0, s, ctx), ctx) != canonical_rep(act_on_nset([0], s, ctx), ctx):
                    return _failed({'t': ctx.t, 'nset': s.to_list()})
        return _passed()

    def check_orbits_partition(self) -> Outcome:
        sizes = {}
        for kind, ctx in self.contexts.items():
            found = orbits(ctx)
            flat = [s for orb in found for s in orb]
            if len(flat) != len(set(flat)) or len(flat) != ctx.t ** (self.n - 1):
                return _failed({'t': ctx.t, 'members': len(flat)})
            if len(found) != len(simultaneous_cores(ctx)):
                return _failed({'t': ctx.t, 'orbits': len(found)})
            for orb in found:
                if len(orb) * stabilizer(orb[0], ctx).order != factorial(self.n):
                    return _failed({'t': ctx.t, 'orbit': [s.to_list() for s in orb]})
            sizes[kind] = sorted((len(orb) for orb in found), reverse=True)
        return _passed(sizes)

    def _stabilizer_readings(self, ctx: LevelTContext) -> Dict[str, int]:
        agree = {}
        for s in enumerate_C(ctx):
            brute = stabilizer(s, ctx).elements
            for reading, gens in stabilizer_lemma_generators(s, ctx).items():
                hit = generated_subgroup(gens, self.n) == brute
                agree[reading] = agree.get(reading, 0) + int(hit)
        return agree

    def check_stabilizer_lemma(self) -> Outcome:
        witness = {}
        for kind, ctx in self.contexts.items():
            witness[kind] = {'members': ctx.t ** (self.n - 1), 'agreeing': self._stabilizer_readings(ctx)}
        return INFO, witness

    def check_stabilizer_wraparound(self) -> Outcome:
        """n-sets whose stabiliser needs the cyclic generator w_0 = s_theta."""
        witnesses = []
        for ctx in self.contexts.values():
            for s in enumerate_C(ctx):
                brute = stabilizer(s, ctx).elements
                readings = stabilizer_lemma_generators(s, ctx)
                if (generated_subgroup(readings['proof'], self.n) != brute
                        and generated_subgroup(readings['wraparound'], self.n) == brute):
                    witnesses.append({'nset': s.to_list(), 't': ctx.t,
                                      'stabilizer': [g.to_list() for g in sorted(brute)]})
        return INFO, witnesses

    # geometry

    def check_window_walls(self) -> Outcome:
        n = self.n
        checked = 0
        for y in self.dominant_ball():
            X = inverse(y).window
            planes = {wall.hyperplane for wall in walls(y)}
            for i in range(1, n + 1):
                for j in range(i + 1, n + 1):
                    test = window_wall_test(X, i, j, n)
                    if (X[j - 1] - X[i - 1]) % n == 0:
                        return _failed({'y': y.to_list(), 'pair': [i, j], 'part': 'strict interval'})
                    if ((Hyperplane(n, i, j, test.k) in planes) != test.wall_at_k
                            or (Hyperplane(n, i, j, test.k + 1) in planes) != test.wall_at_k_plus_1):
                        return _failed({'y': y.to_list(), 'pair': [i, j]})
            checked += 1
        return _passed({'dominant_alcoves': checked})

    def check_link_labels(self) -> Outcome:
        for y in self.dominant_ball():
            if not link_labels_hold(y):
                return _failed({'y': y.to_list()})
        return _passed()

    def check_window_link(self) -> Outcome:
        for y in self.dominant_ball():
            X = inverse(y).window
            S = NSet(X)
            sigma = f_n(y)
            if any(X[sigma(i) - 1] != S[i - 1] for i in range(1, self.n + 1)):
                return _failed({'y': y.to_list()})
        return _passed()

    def check_level_m_ordered(self) -> Outcome:
        for kind in KINDS:
            for record in self.dominant_records(kind):
                if not floor_set_is_ordered(record.y, self.m, kind):
                    return _failed({'kind': kind, 'y': record.y.to_list()})
        return _passed()

    def check_dominance_lemmas(self) -> Outcome:
        for kind in KINDS:
            for record in self.records(kind):
                _, y = coset_decompose(record.w)
                if not is_extremal(y, self.m, kind):
                    return _failed({'kind': kind, 'w': record.w.to_list()})
        return _passed()

    # bijection

    def check_counts(self) -> Outcome:
        counts = self.counts()
        for kind, ctx in self.contexts.items():
            if counts[kind] != ctx.t ** (self.n - 1):
                return _failed(counts)
            cores = [r.core for r in self.records(kind)]
            if len(set(cores)) != len(cores) or set(cores) != set(enumerate_C(ctx)):
                return _failed({'kind': kind, 'reason': 'cores do not exhaust C_n^(t)'})
        return _passed(counts)

    def check_round_trip(self) -> Outcome:
        for kind, ctx in self.contexts.items():
            for record in self.records(kind):
                if alcove_to_core(record.w, ctx) != record.core or core_to_alcove(record.core, ctx) != record.w:
                    return _failed({'kind': kind, 'w': record.w.to_list()})
            for s in enumerate_C(ctx):
                if alcove_to_core(core_to_alcove(s, ctx), ctx) != s:
                    return _failed({'kind': kind, 'nset': s.to_list()})
        return _passed()

    def check_orbit_theorem(self) -> Outcome:
        for kind in KINDS:
            for record in self.dominant_records(kind):
                reps = set(min_coset_reps(level_m_floor_set(record.y, self.m, kind)))
                for rho in all_perms(self.n):
                    if is_extremal(lift(rho) * record.y, self.m, kind) != (rho in reps):
                        return _failed({'kind': kind, 'y': record.y.to_list(), 'rho': rho.to_list()})
        return _passed()

    def check_orbit_theorem_wording(self) -> Outcome:
        members = minimal = 0
        example = None
        for record in self.dominant_records(MAXIMAL):
            for rho in min_coset_reps(level_m_floor_set(record.y, self.m, MAXIMAL)):
                w = lift(rho) * record.y
                members += 1
                if is_m_minimal(w, self.m):
                    minimal += 1
                elif example is None:
                    example = w.to_list()
        return INFO, {'maximal_orbit_members': members, 'also_minimal': minimal, 'not_minimal_example': example}

    def check_stabilizer_conjugacy(self) -> Outcome:
        for kind, ctx in self.contexts.items():
            for record in self.dominant_records(kind):
                group = subgroup_elements(level_m_floor_set(record.y, self.m, kind))
                sigma = twist(record.y)
                conjugated = {conjugate(sigma, h) for h in group}
                if conjugated != set(stabilizer(record.core, ctx).elements):
                    return _failed({'kind': kind, 'y': record.y.to_list(), 'core': record.core.to_list()})
        return _passed()

    def check_twisted_action(self) -> Outcome:
        for kind, ctx in self.contexts.items():
            for record in self.records(kind):
                found = twisted_word_act(record.g.reduced_word(), inverse(record.y).window, ctx)
                if found != record.core.window():
                    return _failed({'kind': kind, 'w': record.w.to_list(), 'found': list(found)})
        return _passed()

    def check_fv_restriction(self) -> Outcome:
        witness = {}
        for kind, ctx in self.contexts.items():
            dominant = self.dominant_records(kind)
            if {r.core for r in dominant} != set(simultaneous_cores(ctx)):
                return _failed({'kind': kind, 'reason': 'dominant cores differ from the (n,t)-cores'})
            entries = []
            for record in dominant:
                lam = partition_from_nset(record.core)
                if record.core != NSet(inverse(record.y).window) or not is_n_core(lam, ctx.t):
                    return _failed({'kind': kind, 'y': record.y.to_list()})
                orbit_members, _ = brute_orbit(record.core, ctx)
                entries.append({'partition': lam.to_list(), 'orbit_size': len(orbit_members)})
            if sum(e['orbit_size'] for e in entries) != ctx.t ** (self.n - 1):
                return _failed({'kind': kind, 'orbits': entries})
            witness[kind] = entries
        return _passed(witness)

    def check_unique_core_per_orbit(self) -> Outcome:
        for ctx in self.contexts.values():
            for orb in orbits(ctx):
                if sum(1 for s in orb if nset_is_t_core(s, ctx.t)) != 1:
                    return _failed({'t': ctx.t, 'orbit': [s.to_list() for s in orb]})
        return _passed()

    # oracle

    def check_oracle_sets(self) -> Outcome:
        table = regions_by_signature(self.n, self.m, cache=self.cache)
        minimal = {r.w for r in self.records(MINIMAL)}
        maximal = {r.w for r in self.records(MAXIMAL)}
        if table.minimal_alcoves() != minimal:
            return _failed({'kind': MINIMAL, 'oracle': len(table), 'enumerated': len(minimal)})
        if table.maximal_alcoves() != maximal:
            return _failed({'kind': MAXIMAL, 'oracle': len(table.bounded()), 'enumerated': len(maximal)})
        return _passed({'regions': len(table), 'bounded': len(table.bounded()), 'radius': table.radius})

    # parking

    def check_parking_bijection(self) -> Outcome:
        found = {}
        for record in self.records(MINIMAL):
            f = parking_function(record.w, self.m)
            if f in found:
                return _failed({'parking_function': f.to_list(), 'alcoves': [found[f], record.w.to_list()]})
            found[f] = record.w.to_list()
        if set(found) != set(parking_functions(self.n, self.m)):
            return _failed({'distinct': len(found)})
        return _passed({'parking_functions': len(found)})

    def check_parking_stabilizer(self) -> Outcome:
        for record in self.dominant_records(MINIMAL):
            X = level_m_floor_set(record.y, self.m, MINIMAL)
            f = parking_function(record.y, self.m)
            if set(stabilizer_of(f)) != set(subgroup_elements(X)):
                return _failed({'y': record.y.to_list(), 'parking_function': f.to_list(), 'X': X.to_list()})
        return _passed()


def verify(n: int, m: int, use_oracle: bool = True, cache: Optional[RegionCache] = None) -> Verifier:
    verifier = Verifier(n, m, use_oracle, cache)
    verifier.run()
    return verifier
