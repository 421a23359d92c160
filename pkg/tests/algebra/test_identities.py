"""
Tests for the identity checkers on the transferred operations
"""

import pytest

from algebra.identities import (
    Operations,
    check_bigrading,
    check_cinfty,
    check_harmonic_output,
    check_homotopy_coherence,
    check_low_arity,
    check_recursion_base,
    check_stasheff,
    check_unitality,
    degree_one_tuples,
    generation_closure,
    harmonic_classes,
    hook_chain,
    sampled_tuples,
    shuffle_tensor,
    stasheff_value,
)
from algebra.transfer import TransferConfig


class TestShuffles:
    """Signed shuffle sums"""

    def test_suspended_degree_one_signs_are_positive(self):
        assert shuffle_tensor(1, 1, ['a', 'b']) == [(1, ('a', 'b')), (1, ('b', 'a'))]

    def test_unsuspended_is_koszul(self):
        assert shuffle_tensor(1, 1, ['a', 'b'], suspended=False) == [
            (1, ('a', 'b')), (-1, ('b', 'a')),
        ]

    def test_even_letter(self):
        assert shuffle_tensor(1, 1, ['a', 'b'], degrees=[2, 1]) == [
            (1, ('a', 'b')), (-1, ('b', 'a')),
        ]

    def test_equal_words_merge(self):
        assert shuffle_tensor(1, 1, ['a', 'a']) == [(2, ('a', 'a'))]
        assert shuffle_tensor(1, 1, ['a', 'a'], suspended=False) == []

    @pytest.mark.parametrize("p,q,count", [(1, 2, 3), (2, 2, 6), (1, 3, 4), (0, 3, 1)])
    def test_word_counts(self, p, q, count):
        letters = ['a', 'b', 'c', 'd'][:p + q]
        assert len(shuffle_tensor(p, q, letters)) == count

    def test_bad_split(self):
        with pytest.raises(ValueError):
            shuffle_tensor(2, 2, ['a', 'b', 'c'])


class TestTuples:
    """Exhaustive and sampled argument tuples"""

    def test_degree_one_tuples(self):
        assert len(degree_one_tuples(3, 2)) == 9

    def test_sampling_is_seeded(self):
        first = sampled_tuples(3, 3, 5, seed=7)
        assert len(first) == 5
        assert first == sampled_tuples(3, 3, 5, seed=7)
        assert sampled_tuples(3, 3, 0, seed=7) == []

    def test_harmonic_classes_cover_homology(self):
        assert len(harmonic_classes(2)) == 6
        assert len(harmonic_classes(3)) == 36

    def test_operations_cache(self, calibrated):
        ops = Operations(calibrated(2))
        word = tuple(degree_one_tuples(2, 3)[1])
        assert ops.m(word) is ops.m(word)


class TestLowArityForms:
    """Closed forms on degree-one classes"""

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_closed_forms(self, n):
        report = check_low_arity(n)
        assert report.passed, report.first_failure()

    def test_recursion_base_rejects_wrong_sign(self):
        assert check_recursion_base(TransferConfig(2, 'a')).passed
        assert not check_recursion_base(TransferConfig(2, 'b')).passed


class TestStasheff:
    """A-infinity relations with Koszul signs"""

    def test_small_dims(self, calibrated, small_dim):
        report = check_stasheff(4, calibrated(small_dim))
        assert report.passed, report.first_failure()
        assert [c.name for c in report.checks] == ['SI(1)', 'SI(2)', 'SI(3)', 'SI(4)']

    def test_sampled_mixed_degrees(self, calibrated):
        report = check_stasheff(4, calibrated(3), sample_size=10, seed=3)
        assert report.passed, report.first_failure()

    @pytest.mark.slow
    def test_arity_five(self, calibrated):
        assert check_stasheff(5, calibrated(2)).passed

    @pytest.mark.slow
    def test_arity_five_with_two_hundred_samples(self, calibrated, small_dim):
        report = check_stasheff(5, calibrated(small_dim), sample_size=200, seed=11)
        assert report.passed, report.first_failure()
        for check in report.checks[2:]:
            assert check.details['tuples'] >= 200 + small_dim ** int(check.name[3])

    def test_value_on_degree_one_word(self, calibrated, hclass):
        ops = Operations(calibrated(3))
        word = tuple(hclass(i, 3) for i in (1, 2, 3, 1))
        assert stasheff_value(ops, word).is_zero()


class TestCInfinity:
    """Vanishing on signed shuffles"""

    def test_small_dims(self, calibrated, small_dim):
        report = check_cinfty(4, calibrated(small_dim))
        assert report.passed, report.first_failure()
        assert 'shuffle_1_1' in [c.name for c in report.checks]
        assert 'shuffle_2_2' in [c.name for c in report.checks]

    def test_sampled_mixed_degrees(self, calibrated, small_dim):
        words = sampled_tuples(small_dim, 3, 60, seed=5)
        assert any(x.hom_degree > 1 for word in words for x in word)
        report = check_cinfty(3, calibrated(small_dim), sample_size=60, seed=5)
        assert report.passed, report.first_failure()

    @pytest.mark.slow
    def test_two_hundred_samples(self, calibrated, small_dim):
        report = check_cinfty(4, calibrated(small_dim), sample_size=200, seed=5)
        assert report.passed, report.first_failure()
        assert all(c.details['tuples'] >= 200 for c in report.checks)


class TestStructure:
    """Coherence, unitality and output gradings"""

    def test_coherence(self, calibrated):
        report = check_homotopy_coherence(calibrated(3))
        assert report.passed, report.first_failure()

    def test_unitality(self, calibrated, small_dim):
        report = check_unitality(calibrated(small_dim), up_to=4)
        assert report.passed, report.first_failure()

    def test_bigrading(self, calibrated, small_dim):
        report = check_bigrading(calibrated(small_dim), up_to=4, sample_size=10, seed=1)
        assert report.passed, report.first_failure()

    def test_harmonic_output(self, calibrated):
        report = check_harmonic_output(calibrated(3), up_to=4)
        assert report.passed, report.first_failure()


class TestGeneration:
    """Cohomology generated from degree one"""

    def test_hook_chain(self):
        report = hook_chain(3)
        assert report.passed, report.first_failure()
        assert [row['schur_dim'] for row in report.tables['hooks']] == [3, 8, 6]

    def test_closure_dim_two(self):
        report = generation_closure(2)
        assert report.passed, report.first_failure()
        assert report.tables['closure_dims'] == [1, 2, 2, 1]

    @pytest.mark.slow
    def test_closure_dim_three(self):
        report = generation_closure(3)
        assert report.passed, report.first_failure()
        assert report.tables['closure_dims'] == [1, 3, 8, 12, 8, 3, 1]
