import pytest
from hypothesis import given, settings, strategies as st

from cores import NSet
from errors import InvalidInputError, PreconditionError
from finperm import FinitePerm, all_perms
from levelt import (MAXIMAL, MINIMAL, LevelTContext, act_on_nset, canonical_rep, enumerate_C, equivalent,
                    fayers_act, generated_subgroup, in_C, levelt_act_int, orbit, orbits,
                    simultaneous_cores, stabilizer, stabilizer_lemma_generators)


def nsets_of_rank(n):
    return st.lists(st.integers(min_value=-6, max_value=6), min_size=n - 1, max_size=n - 1).map(
        lambda levels: NSet(n * a + r for r, a in enumerate(levels + [-sum(levels)])))


class TestLevelTContext:

    def test_t_and_kind(self):
        assert LevelTContext(3, 1, 1).t == 4
        assert LevelTContext(3, 1, -1).t == 2
        assert LevelTContext(4, 2).modulus == 36
        assert LevelTContext.for_kind(3, 2, MAXIMAL).kind == MAXIMAL
        assert str(LevelTContext(3, 1)) == '(n=3, m=1, t=4)'

    def test_validation(self):
        with pytest.raises(InvalidInputError):
            LevelTContext(2, 1)
        with pytest.raises(InvalidInputError):
            LevelTContext(3, 0)
        with pytest.raises(InvalidInputError):
            LevelTContext(3, 1, 0)
        with pytest.raises(InvalidInputError):
            LevelTContext.for_kind(3, 1, 'smallest')


class TestAction:

    def test_worked_images(self, minimal_ctx):
        assert act_on_nset([2], NSet([-1, 1, 3]), minimal_ctx) == NSet([-5, 5, 3])
        assert act_on_nset([1], NSet([0, 4, -1]), minimal_ctx) == NSet([0, 4, -1])
        moved = act_on_nset([2, 1], NSet([0, 4, -1]), minimal_ctx)
        assert moved == NSet([8, 0, -5])
        assert canonical_rep(moved, minimal_ctx) == NSet([-4, 0, 7])

    def test_theta_at_level_two(self, maximal_ctx):
        image = act_on_nset([0], NSet([0, 1, 2]), maximal_ctx)
        assert image == NSet([-4, 1, 6])
        assert equivalent(image, NSet([0, 1, 2]), maximal_ctx)

    def test_accepts_permutations_and_words(self, minimal_ctx):
        base = NSet([0, 4, -1])
        assert act_on_nset(FinitePerm([3, 1, 2]), base, minimal_ctx) == act_on_nset([2, 1], base, minimal_ctx)

    def test_rank_mismatch(self, minimal_ctx):
        with pytest.raises(InvalidInputError):
            act_on_nset([1], NSet([0, 1, 2, 3]), minimal_ctx)

    @pytest.mark.parametrize('ctx', [LevelTContext(3, 1, 1), LevelTContext(3, 2, -1), LevelTContext(4, 1, 1)])
    def test_generators_are_involutions_on_integers(self, ctx):
        for i in range(ctx.n):
            for j in range(-30, 30):
                assert levelt_act_int(i, levelt_act_int(i, j, ctx), ctx) == j

    def test_fayers_generators_are_involutions(self):
        for i in range(3):
            for j in range(-20, 20):
                assert fayers_act(i, fayers_act(i, j, 3, 4), 3, 4) == j

    def test_fayers_worked_values(self):
        # n o t = 3 for n = 3, t = 4
        assert fayers_act(1, 0, 3, 4) == 4
        assert fayers_act(1, 4, 3, 4) == 0
        assert fayers_act(2, 0, 3, 4) == 0

    def test_orbit_of_zero_matches_fayers(self, minimal_ctx):
        def bounded_orbit(act, bound=40):
            seen = {0}
            frontier = [0]
            while frontier:
                j = frontier.pop()
                for i in range(3):
                    image = act(i, j)
                    if abs(image) <= bound and image not in seen:
                        seen.add(image)
                        frontier.append(image)
            return seen

        fayers = bounded_orbit(lambda i, j: fayers_act(i, j, 3, 4))
        tailored = bounded_orbit(lambda i, j: levelt_act_int(i, j, minimal_ctx))
        assert fayers == tailored
        assert fayers == set(range(-40, 41, 4))

    def test_action_is_a_group_action(self, minimal_ctx):
        base = NSet([3, 1, -1])
        for g in all_perms(3):
            for h in all_perms(3):
                assert act_on_nset(g * h, base, minimal_ctx) == \
                    act_on_nset(g, act_on_nset(h, base, minimal_ctx), minimal_ctx)


class TestCanonicalForm:

    def test_canonical_rep(self, minimal_ctx):
        canonical = canonical_rep(NSet([8, 4, -9]), minimal_ctx)
        assert canonical == NSet([-4, 4, 3])
        assert in_C(canonical, minimal_ctx)

    @given(nsets_of_rank(3), st.sampled_from([1, -1]), st.integers(min_value=1, max_value=3))
    @settings(max_examples=80, deadline=None)
    def test_canonical_rep_is_idempotent(self, nset, sign, m):
        ctx = LevelTContext(3, m, sign)
        canonical = canonical_rep(nset, ctx)
        assert in_C(canonical, ctx)
        assert equivalent(canonical, nset, ctx)
        assert canonical_rep(canonical, ctx) == canonical

    def test_enumerate_C_sizes(self, minimal_ctx, maximal_ctx):
        assert len(enumerate_C(minimal_ctx)) == 16
        assert len(enumerate_C(maximal_ctx)) == 4
        assert len(enumerate_C(LevelTContext(4, 1, -1))) == 27

    def test_members_are_pairwise_inequivalent(self, minimal_ctx):
        members = enumerate_C(minimal_ctx)
        for a in members:
            assert sum(equivalent(a, b, minimal_ctx) for b in members) == 1

    def test_simultaneous_cores(self, minimal_ctx, maximal_ctx):
        assert len(simultaneous_cores(minimal_ctx)) == 5
        assert len(simultaneous_cores(maximal_ctx)) == 2
        assert NSet([0, 4, -1]) in simultaneous_cores(minimal_ctx)


class TestOrbitsAndStabilizers:

    def test_orbit_of_worked_core(self, minimal_ctx, worked_cores):
        assert orbit(NSet([0, 4, -1]), minimal_ctx) == sorted(worked_cores.values())

    def test_orbits_partition_C(self, minimal_ctx):
        found = orbits(minimal_ctx)
        assert len(found) == 5
        flattened = [s for o in found for s in o]
        assert sorted(flattened) == enumerate_C(minimal_ctx)

    def test_orbit_needs_member_of_C(self, minimal_ctx):
        with pytest.raises(PreconditionError):
            orbit(NSet([12, 1, -10]), minimal_ctx)

    def test_orbit_stabilizer(self, minimal_ctx):
        for o in orbits(minimal_ctx):
            assert len(o) * stabilizer(o[0], minimal_ctx).order == 6

    def test_wraparound_stabilizer(self, minimal_ctx):
        nset = NSet([3, 1, -1])
        stab = stabilizer(nset, minimal_ctx)
        assert stab.elements == frozenset([FinitePerm([1, 2, 3]), FinitePerm([3, 2, 1])])
        assert stab.generators == (0,)
        readings = stabilizer_lemma_generators(nset, minimal_ctx)
        assert readings['proof'] == []
        assert readings['wraparound'] == [0]

    def test_generated_subgroup(self):
        assert len(generated_subgroup([1, 2], 3)) == 6
        assert len(generated_subgroup([0], 4)) == 2
        assert generated_subgroup([], 3) == frozenset([FinitePerm([1, 2, 3])])

    def test_kind_constants(self):
        assert LevelTContext.for_kind(3, 1, MINIMAL).sign == 1
