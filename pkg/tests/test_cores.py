import pytest
from hypothesis import given, settings, strategies as st

from cores import (Abacus, NSet, NVector, Partition, abacus_act, addable_removable_residues, balanced_abacus,
                   bead_counts, hook_length, hook_lengths, is_n_core, level1_act, level1_act_word, n_core_of,
                   n_set, n_vector, n_window, nset_from_nvector, nset_is_t_core, nvector_from_nset,
                   partition_from_abacus, partition_from_bead_counts, partition_from_nset,
                   partition_from_nvector, positive_abacus, render_diagram, rim_hook_removals)
from errors import InvalidInputError, NotACoreError


partitions = st.lists(st.integers(min_value=1, max_value=8), max_size=7).map(
    lambda parts: Partition(sorted(parts, reverse=True)))


class TestPartition:

    def test_validation(self):
        with pytest.raises(InvalidInputError):
            Partition([2, 3])
        with pytest.raises(InvalidInputError):
            Partition([2, 0])

    def test_str(self):
        assert str(Partition()) == '()'
        assert str(Partition([5, 3, 1, 1])) == '(5,3,1,1)'

    def test_conjugate(self):
        assert Partition([3, 1]).conjugate() == Partition([2, 1, 1])
        assert Partition().conjugate() == Partition()

    def test_boxes(self):
        lam = Partition([2, 1])
        assert list(lam.boxes()) == [(1, 1), (1, 2), (2, 1)]
        assert lam.addable_boxes() == [(1, 3), (2, 2), (3, 1)]
        assert lam.removable_boxes() == [(1, 2), (2, 1)]

    def test_hooks(self):
        lam = Partition([3, 1])
        assert hook_lengths(lam) == [[4, 2, 1], [1]]
        assert hook_length(lam, 1, 1) == 4
        with pytest.raises(InvalidInputError):
            hook_length(lam, 2, 2)

    def test_is_core(self):
        assert is_n_core(Partition([3, 1]), 3)
        assert is_n_core(Partition([2]), 3)
        assert not is_n_core(Partition([3]), 3)

    def test_render_diagram(self):
        assert render_diagram(Partition([2, 1])) == '##\n#'
        assert render_diagram(Partition()) == '(empty)'


class TestRimHooks:

    def test_removals(self):
        assert rim_hook_removals(Partition([3]), 3) == [Partition()]
        assert rim_hook_removals(Partition([2]), 3) == []

    def test_core_of(self):
        assert n_core_of(Partition([4, 1]), 3) == Partition([1, 1])
        assert n_core_of(Partition([3, 3, 3]), 3) == Partition()

    @given(partitions, st.integers(min_value=2, max_value=5))
    @settings(max_examples=60, deadline=None)
    def test_core_is_independent_of_removal_order(self, lam, n):
        core = n_core_of(lam, n)
        assert is_n_core(core, n)
        for smaller in rim_hook_removals(lam, n):
            assert smaller.size == lam.size - n
            assert n_core_of(smaller, n) == core


class TestEncodings:

    def test_small_cores(self):
        assert n_set(Partition(), 3) == NSet([0, 1, 2])
        assert n_vector(Partition([2]), 3) == NVector([0, 1, -1])
        assert n_set(Partition([2]), 3) == NSet([0, 4, -1])
        assert n_window(Partition([2]), 3) == (-1, 0, 4)

    def test_balanced_abacus(self):
        abacus = balanced_abacus(Partition([2]), 3)
        assert abacus == Abacus(3, -1, [1])
        assert abacus.balance_number() == 0
        assert positive_abacus(Partition([2]), 3).balance_number() == 1

    def test_non_core_rejected(self):
        with pytest.raises(NotACoreError):
            n_set(Partition([3]), 3)

    def test_nset_validation(self):
        with pytest.raises(InvalidInputError):
            NSet([0, 1, 3])
        with pytest.raises(InvalidInputError):
            NSet([0, 3, 0])
        with pytest.raises(InvalidInputError):
            NVector([1, 0, 0])

    def test_nset_is_keyed_by_residue(self):
        s = NSet([-1, 0, 4])
        assert s.to_list() == [0, 4, -1]
        assert s[5] == -1
        assert s.window() == (-1, 0, 4)
        assert s.spread() == 5

    def test_nset_nvector_conversion(self):
        assert nset_from_nvector(NVector([0, 1, -1])) == NSet([0, 4, -1])
        assert nvector_from_nset(NSet([3, 1, -1])) == NVector([1, 0, -1])

    def test_decoding(self):
        assert partition_from_nset(NSet([0, 4, -1])) == Partition([2])
        assert partition_from_nset(NSet([3, 1, -1])) == Partition([1])
        assert partition_from_nvector(NVector([0, 1, -1])) == Partition([2])
        assert partition_from_abacus(Abacus(3, -1, [1])) == Partition([2])

    def test_abacus_normalises_floor(self):
        assert Abacus(3, 0, [0, 1, 5]) == Abacus(3, 2, [5])
        assert not Abacus(3, 2, [7]).is_flush()
        with pytest.raises(NotACoreError):
            Abacus(3, 2, [7]).runner_levels()

    def test_bead_counts(self):
        assert bead_counts(Partition([2]), 3) == [0, 0, 1]
        assert partition_from_bead_counts([0, 0, 1]) == Partition([2])

    @pytest.mark.parametrize('n', [3, 4, 5])
    def test_encodings_agree_on_small_cores(self, n):
        for size in range(0, 9):
            for lam in _partitions_of(size):
                if not is_n_core(lam, n):
                    continue
                assert partition_from_nset(n_set(lam, n)) == lam
                assert partition_from_nvector(n_vector(lam, n)) == lam
                assert partition_from_bead_counts(bead_counts(lam, n)) == lam

    def test_abacus_render(self):
        text = Abacus(3, -1, [1]).render((-1, 1))
        assert text.splitlines() == ['  -1 | O O .', '   0 | . O .', '   1 | . . .']


class TestLevelOneAction:

    def test_adds_and_removes_boxes(self):
        assert level1_act(0, Partition(), 3) == Partition([1])
        assert level1_act(1, Partition([1]), 3) == Partition([2])
        assert level1_act(0, Partition([1]), 3) == Partition()
        assert level1_act(2, Partition([1]), 3) == Partition([1, 1])

    def test_word_reads_right_to_left(self):
        assert level1_act_word([1, 0], Partition(), 3) == Partition([2])

    def test_residues(self):
        addable, removable = addable_removable_residues(Partition([2]), 3)
        assert addable == {2}
        assert removable == {1}

    def test_abacus_action(self):
        assert abacus_act(0, NVector([0, 0, 0])) == NVector([1, 0, -1])
        assert abacus_act(2, NVector([0, 1, -1])) == NVector([0, -1, 1])
        with pytest.raises(InvalidInputError):
            abacus_act(3, NVector([0, 0, 0]))

    @pytest.mark.parametrize('n', [3, 4])
    def test_abacus_action_matches_boxes(self, n):
        lam = Partition()
        for i in [0, 1, 0, 2, 1, n - 1, 0]:
            image = level1_act(i, lam, n)
            assert nset_from_nvector(abacus_act(i, n_vector(lam, n))) == n_set(image, n)
            lam = image

    def test_simultaneous_core_test(self):
        assert nset_is_t_core(NSet([0, 1, 2]), 4)
        assert nset_is_t_core(NSet([0, 4, -1]), 4)
        assert not nset_is_t_core(NSet([0, 4, -1]), 2)


def _partitions_of(size, largest=None):
    if largest is None:
        largest = size
    if size == 0:
        yield Partition()
        return
    for first in range(min(size, largest), 0, -1):
        for rest in _partitions_of(size - first, first):
            yield Partition((first,) + rest.parts)
