import pytest
from fractions import Fraction

from affperm import AffinePerm, from_word, generator, inverse
from errors import InvalidInputError
from finperm import TranspositionSet
from geometry import (CEILING, FLOOR, THROUGH_ORIGIN, Alcove, Hyperplane, RegionSignature, ceilings, centroid,
                      floors, fundamental_alcove_data, is_bounded_region, is_dominant, is_m_maximal,
                      is_m_minimal, level_m_walls, link_labels_hold, pair_values, region_signature,
                      same_region, separating_hyperplanes, vertices, walls, wall_transposition_set,
                      window_wall_test)
from oracle import cayley_ball


def wall_table(w):
    return {(wall.hyperplane.i, wall.hyperplane.j, wall.hyperplane.level): (wall.kind, wall.label)
            for wall in walls(w)}


class TestAlcoveGeometry:

    def test_fundamental_alcove(self):
        verts, c = fundamental_alcove_data(3)
        assert len(verts) == 3
        assert c.coords == (Fraction(1, 3), Fraction(0), Fraction(-1, 3))

    def test_centroid(self):
        assert centroid(from_word([0, 1], 3)).coords == (Fraction(2, 3), Fraction(1, 3), Fraction(-1))
        assert Alcove(from_word([0, 1], 3)).centroid() == centroid(from_word([0, 1], 3))

    def test_pair_values_match_centroid(self):
        for w in cayley_ball(4, 3):
            point = centroid(w)
            for (i, j), value in pair_values(w).items():
                assert point.pair(i, j) == value

    def test_vertices_of_identity(self):
        assert [v.to_list() for v in vertices(AffinePerm.identity(3))] == [
            ['0', '0', '0'], ['2/3', '-1/3', '-1/3'], ['1/3', '1/3', '-2/3']]


class TestWalls:

    def test_fundamental_alcove_walls(self):
        assert wall_table(AffinePerm.identity(3)) == {
            (1, 2, 0): (THROUGH_ORIGIN, 1),
            (2, 3, 0): (THROUGH_ORIGIN, 2),
            (1, 3, 1): (CEILING, 0),
        }

    def test_s0_walls(self):
        assert wall_table(generator(0, 3)) == {
            (1, 3, 1): (FLOOR, 0),
            (2, 3, 1): (CEILING, 1),
            (1, 2, 1): (CEILING, 2),
        }

    def test_s0s1_walls(self):
        table = wall_table(from_word([0, 1], 3))
        assert table[(2, 3, 1)][0] == FLOOR
        assert table[(1, 3, 2)][0] == CEILING
        assert table[(1, 2, 0)][0] == THROUGH_ORIGIN
        assert [str(wall.hyperplane) for wall in floors(from_word([0, 1], 3))] == ['H(e2-e3, 1)']
        assert len(ceilings(from_word([0, 1], 3))) == 1

    def test_walls_bound_the_centroid(self):
        for w in cayley_ball(3, 5):
            point = centroid(w)
            for wall in walls(w):
                assert wall.side * wall.hyperplane.evaluate(point) > 0

    def test_link_labels(self):
        for w in cayley_ball(4, 3):
            assert link_labels_hold(w)

    def test_hyperplane_validation(self):
        with pytest.raises(InvalidInputError):
            Hyperplane(3, 2, 1, 0)
        assert Hyperplane(3, 1, 2, 1).is_shi(1)
        assert not Hyperplane(3, 1, 2, -1).is_shi(1)


class TestWindowWalls:

    @pytest.mark.parametrize('i,j,k,low,high', [(1, 2, 0, True, False),
                                               (2, 3, 1, True, False),
                                               (1, 3, 1, False, True)])
    def test_window_test_of_s0s1(self, i, j, k, low, high):
        result = window_wall_test((-1, 0, 4), i, j, 3)
        assert (result.k, result.wall_at_k, result.wall_at_k_plus_1) == (k, low, high)

    def test_window_test_agrees_with_walls(self):
        for w in cayley_ball(4, 4):
            if not is_dominant(w):
                continue
            window = inverse(w).window
            planes = {wall.hyperplane for wall in walls(w)}
            for i in range(1, 5):
                for j in range(i + 1, 5):
                    result = window_wall_test(window, i, j, 4)
                    assert result.wall_at_k == (Hyperplane(4, i, j, result.k) in planes)
                    assert result.wall_at_k_plus_1 == (Hyperplane(4, i, j, result.k + 1) in planes)

    def test_bad_positions(self):
        with pytest.raises(InvalidInputError):
            window_wall_test((-1, 0, 4), 3, 1, 3)


class TestRegions:

    def test_signatures(self):
        assert region_signature(AffinePerm.identity(3), 1).values == (0, 0, 0)
        assert region_signature(generator(0, 3), 1).values == (0, 1, 0)
        assert region_signature(generator(0, 3), 1).value(1, 3) == 1

    def test_same_region(self):
        assert not same_region(AffinePerm.identity(3), generator(0, 3), 1)
        # s0 s1 and s0 s1 s2 only differ across H(e1-e3, 2)
        assert same_region(from_word([0, 1], 3), from_word([0, 1, 2], 3), 1)
        assert not same_region(from_word([0, 1], 3), from_word([0, 1, 2], 3), 2)

    def test_boundedness(self):
        assert RegionSignature(3, 1, (0, 0, 0)).is_bounded()
        assert not RegionSignature(3, 1, (1, 1, 1)).is_bounded()
        assert not RegionSignature(3, 1, (-1, -1, -1)).is_bounded()
        assert is_bounded_region(generator(0, 3), 1)

    def test_signs(self):
        signs = RegionSignature(3, 1, (0, 1, 0)).signs()
        assert signs[Hyperplane(3, 1, 3, 1)] == 1
        assert signs[Hyperplane(3, 1, 2, 1)] == -1

    def test_m_must_be_positive(self):
        with pytest.raises(InvalidInputError):
            region_signature(AffinePerm.identity(3), 0)

    def test_extremality(self):
        identity = AffinePerm.identity(3)
        s0s1 = from_word([0, 1], 3)
        assert is_m_minimal(identity, 1) and is_m_maximal(identity, 1)
        assert is_m_minimal(s0s1, 1)
        assert not is_m_maximal(s0s1, 1)
        assert not is_m_minimal(AffinePerm([-4, 1, 6]), 1)

    def test_level_m_walls(self):
        s0s1 = from_word([0, 1], 3)
        assert [wall.hyperplane for wall in level_m_walls(s0s1, 1, 'minimal')] == [Hyperplane(3, 2, 3, 1)]
        assert wall_transposition_set(s0s1, 1, 'minimal') == TranspositionSet(3, [(2, 3)])
        assert wall_transposition_set(s0s1, 1, 'maximal') == TranspositionSet(3)

    def test_dominance(self):
        assert is_dominant(from_word([0, 1], 3))
        assert is_dominant(generator(0, 3))
        assert not is_dominant(generator(1, 3))

    def test_separating_hyperplanes_is_length(self):
        for w in cayley_ball(3, 5):
            assert separating_hyperplanes(w) == w.length()
