"""
Tests for the transferred operations and sign calibration
"""

import pytest

from algebra import transfer
from algebra.cecomplex import harmonic_basis
from algebra.exterior import Element, GeneratorParseError, parse_element
from algebra.transfer import (
    SIGN_VARIANTS,
    CalibrationError,
    HClass,
    NotHarmonicError,
    TransferConfig,
    TreeSum,
    UncalibratedError,
    calibrate_signs,
    calibrated_variant,
    clear_calibration,
    eliminated_by,
    m1,
    m2,
    m3,
    m3_literal,
    mn,
    monomial_representative,
)


def el(text, n=3):
    return parse_element(text, n)


class TestTransferConfig:
    """Frozen evaluation settings"""

    def test_defaults(self):
        config = TransferConfig(3)
        assert config.sign_variant is None
        assert not config.calibrated
        assert config.with_variant('a').calibrated

    @pytest.mark.parametrize("kwargs", [
        {'dim_v': 0},
        {'dim_v': 2, 'sign_variant': 'z'},
        {'dim_v': 2, 'max_arity': 1},
    ])
    def test_invalid(self, kwargs):
        with pytest.raises(ValueError):
            TransferConfig(**kwargs)

    def test_four_candidates(self):
        assert sorted(SIGN_VARIANTS) == ['a', 'b', 'c', 'd']
        sign = SIGN_VARIANTS['a'][1]
        assert [sign(u, 1) for u in (1, 2, 3)] == [1, -1, 1]


class TestHClass:
    """Harmonic classes and their gradings"""

    def test_gradings(self):
        x = HClass(el("e1^e{2,3} - e3^e{1,2}"), 3)
        assert (x.hom_degree, x.weight, x.multidegree) == (2, 3, (1, 1, 1))
        assert HClass.unit(3).hom_degree == 0

    def test_rejects_mixed_degree(self):
        with pytest.raises(NotHarmonicError):
            HClass(el("e1 + e1^e2"), 3)

    @pytest.mark.parametrize("text,n", [
        ("e{1,2}", 2),
        ("e1^e{2,3}", 3),
        ("e1^e2", 2),
    ])
    def test_constructor_rejects_non_harmonic(self, text, n):
        with pytest.raises(NotHarmonicError):
            HClass(el(text, n), n)

    def test_operations_only_see_harmonic_arguments(self, hclass):
        with pytest.raises(NotHarmonicError):
            m2(HClass(el("e{1,2}", 2), 2), hclass(1, 2))
        with pytest.raises(NotHarmonicError):
            m3(HClass(el("e{1,2}", 2), 2), hclass(1, 2), hclass(2, 2))

    def test_from_text_keeps_harmonic_input(self):
        x = HClass.from_text("e1^e{2,3} + e2^e{1,3}", 3)
        assert x.element == el("e1^e{2,3} + e2^e{1,3}")

    def test_from_text_projects_closed_input(self):
        assert HClass.from_text("e1^e2", 2).is_zero()

    def test_from_text_rejects_open_input(self):
        with pytest.raises(NotHarmonicError):
            HClass.from_text("e2^e{1,3}", 3)

    def test_from_text_rejects_unknown_generator(self):
        with pytest.raises(GeneratorParseError):
            HClass.from_text("e5", 3)


class TestLowArity:
    """Dedicated m1, m2 and m3"""

    def test_m1_is_zero(self, hclass):
        assert m1(hclass(1, 2)).is_zero()

    @pytest.mark.parametrize("i,j", [(1, 1), (1, 2), (2, 1)])
    def test_m2_vanishes_on_degree_one(self, hclass, i, j):
        assert m2(hclass(i, 2), hclass(j, 2)).is_zero()

    def test_m2_unit(self, small_dim):
        unit = HClass.unit(small_dim)
        for element in harmonic_basis(small_dim, 2):
            x = HClass(element, small_dim)
            assert m2(unit, x).element == element == m2(x, unit).element

    def test_m3_distinct(self, hclass):
        value = m3(hclass(1, 3), hclass(2, 3), hclass(3, 3))
        assert value.element == el("e1^e{2,3} - e3^e{1,2}")
        assert (value.hom_degree, value.weight) == (2, 3)

    def test_m3_repeated(self, hclass, small_dim):
        value = m3(hclass(1, small_dim), hclass(1, small_dim), hclass(2, small_dim))
        assert value.element == el("e1^e{1,2}", small_dim)

    def test_m3_literal(self, hclass):
        value = m3_literal(hclass(1, 3), hclass(2, 3), hclass(3, 3))
        assert value.element == el("-1/3*e1^e{2,3} - 2/3*e2^e{1,3} - 1/3*e3^e{1,2}")

    def test_m3_with_unit_vanishes(self, hclass):
        unit = HClass.unit(3)
        assert m3(unit, hclass(1, 3), hclass(2, 3)).is_zero()
        assert m3(hclass(1, 3), unit, hclass(2, 3)).is_zero()


class TestMonomialRepresentative:
    """Single-monomial names of classes"""

    def test_literal_class(self, hclass):
        value = m3_literal(hclass(1, 3), hclass(2, 3), hclass(3, 3))
        assert str(monomial_representative(value)) == "-e2^e{1,3}"

    def test_signed_class_has_none(self, hclass):
        value = m3(hclass(1, 3), hclass(2, 3), hclass(3, 3))
        assert monomial_representative(value) is None

    def test_harmonic_monomial_is_its_own(self, hclass):
        assert monomial_representative(hclass(2, 3)) == el("e2")

    def test_zero(self):
        assert monomial_representative(HClass(Element(), 3)) == Element()


class TestRecursion:
    """General-arity operations from the tree sum"""

    def test_uncalibrated_config_rejected(self, hclass):
        with pytest.raises(UncalibratedError):
            mn(3, [hclass(1, 3)] * 3, TransferConfig(3))
        with pytest.raises(UncalibratedError):
            TreeSum(TransferConfig(3))

    def test_arity_mismatch(self, hclass, calibrated):
        with pytest.raises(ValueError):
            mn(3, [hclass(1, 3)] * 2, calibrated(3))
        with pytest.raises(ValueError):
            mn(0, [], calibrated(3))

    def test_mn_reproduces_m2_m3(self, hclass, calibrated):
        config = calibrated(3)
        e1, e2, e3 = (hclass(i, 3) for i in (1, 2, 3))
        assert mn(1, [e1], config).is_zero()
        assert mn(2, [e1, e2], config).element == m2(e1, e2).element
        assert mn(3, [e1, e2, e3], config).element == m3(e1, e2, e3).element
        assert mn(3, [e1, e1, e2], config).element == m3(e1, e1, e2).element

    def test_wrong_sign_flips_m2(self, calibrated):
        x = HClass(harmonic_basis(2, 2)[0], 2)
        unit = HClass.unit(2)
        flipped = TreeSum(calibrated(2), variant='b').m([unit, x])
        assert flipped.element == -x.element

    def test_m4_bigrading(self, hclass, calibrated):
        config = calibrated(3)
        args = [hclass(1, 3), hclass(2, 3), hclass(3, 3), hclass(1, 3)]
        value = mn(4, args, config)
        if not value.is_zero():
            assert value.hom_degree == 2
            assert value.weight == 4

    def test_lam_needs_two_arguments(self, hclass, calibrated):
        with pytest.raises(ValueError):
            TreeSum(calibrated(2)).lam([hclass(1, 2)])


@pytest.mark.slow
class TestCalibration:
    """Selection of the tree sign"""

    def test_unique_survivor(self):
        variant, verdicts = calibrate_signs((2, 3), 3)
        assert variant == 'a'
        assert all(verdicts['a'].values())
        assert not verdicts['b']['matches_m2_m3']
        assert sorted(verdicts) == ['a', 'b', 'c', 'd']
        assert eliminated_by(verdicts['a']) is None
        assert eliminated_by(verdicts['b']) == 'matches_m2_m3'
        # m4 vanishes on every sampled word, so only coherence separates c from a
        assert verdicts['c']['stasheff']
        assert eliminated_by(verdicts['c']) == 'coherence'

    def test_stable_across_dims(self):
        clear_calibration()
        try:
            assert calibrated_variant((2, 3), 3) == calibrated_variant((3, 4), 3) == 'a'
        finally:
            clear_calibration()

    def test_error_carries_verdicts(self):
        error = CalibrationError("none", {'a': {'stasheff': False}})
        assert error.verdicts['a']['stasheff'] is False


class TestCalibratedVariant:
    """Per-process calibration cache"""

    def test_calibrates_once(self, monkeypatch):
        calls = []

        def fake_calibrate(dims, coherence_dim, workers=None):
            calls.append((tuple(dims), coherence_dim))
            return 'a', {}

        monkeypatch.setattr(transfer, 'calibrate_signs', fake_calibrate)
        clear_calibration()
        try:
            assert calibrated_variant((2, 3), 3) == 'a'
            assert calibrated_variant((2, 3), 3) == 'a'
            assert calls == [((2, 3), 3)]

            clear_calibration()
            calibrated_variant((2, 3), 3)
            assert len(calls) == 2
        finally:
            clear_calibration()


@pytest.mark.parametrize('row, expected', [
    ({'matches_m2_m3': True, 'stasheff': True, 'coherence': True}, None),
    ({'matches_m2_m3': True, 'stasheff': True, 'coherence': False}, 'coherence'),
    ({'matches_m2_m3': False, 'stasheff': False, 'coherence': False}, 'matches_m2_m3'),
    ({'matches_m2_m3': True}, 'stasheff'),
])
def test_eliminated_by_first_failing_filter(row, expected):
    assert eliminated_by(row) == expected
