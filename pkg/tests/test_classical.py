import itertools

import pytest

from gfharmonic import (
    ExponentFunction,
    InvalidOrder,
    ScalarFunction,
    classical_ft,
    comparison_check,
    embed,
    is_bent_spectral,
    is_classical_bent,
)
from _oracles import all_exponent_tables


class TestClassicalTransform:
    def test_constant_exponents_on_z3(self, z3):
        ef = ExponentFunction(z3, 3, (0, 0, 0))
        spectrum = classical_ft(ef)
        assert abs(spectrum[0] - 3) < 1e-9
        assert abs(spectrum[1]) < 1e-9
        assert abs(spectrum[2]) < 1e-9

    def test_flat_spectrum_on_z3(self, z3):
        ef = ExponentFunction(z3, 3, (0, 1, 1))
        for v in classical_ft(ef):
            assert abs(abs(v) ** 2 - 3) < 1e-9

    def test_quadratic_on_z5_has_flat_spectrum(self, z5):
        ef = ExponentFunction(z5, 5, tuple(x * x % 5 for x in range(5)))
        for v in classical_ft(ef):
            assert abs(abs(v) ** 2 - 5) < 1e-9

    def test_zero_frequency_of_constant_is_order(self, z2z4):
        ef = ExponentFunction(z2z4, 4, (0,) * 8)
        assert abs(classical_ft(ef)[0] - 8) < 1e-9


class TestClassicalBent:
    def test_examples(self, z3, z5):
        assert is_classical_bent(ExponentFunction(z3, 3, (0, 1, 1)))
        assert not is_classical_bent(ExponentFunction(z3, 3, (0, 0, 0)))
        assert is_classical_bent(
            ExponentFunction(z5, 5, tuple(x * x % 5 for x in range(5)))
        )


class TestEmbedding:
    def test_z3_example(self, gf4, z3):
        w = gf4.element([0, 1])
        f = embed(ExponentFunction(z3, 3, (0, 1, 1)))
        assert f.values == (gf4.one, w, w)

    def test_zero_exponents_give_constant_one(self, z2z4):
        f = embed(ExponentFunction(z2z4, 4, (0,) * 8))
        assert f == ScalarFunction.constant(z2z4, z2z4.ctx.one)

    def test_z5_quadratic(self, gf16, z5):
        f = embed(ExponentFunction(z5, 5, tuple(x * x % 5 for x in range(5))))
        u = gf16.u
        assert f.values == (gf16.one, u, u**4, u**4, u)

    def test_value_group_homomorphism(self, z3):
        for ea in all_exponent_tables(z3, 3):
            eb = tuple((2 * e + 1) % 3 for e in ea)
            fa = embed(ExponentFunction(z3, 3, ea))
            fb = embed(ExponentFunction(z3, 3, eb))
            fsum = embed(
                ExponentFunction(z3, 3, tuple((a + b) % 3 for a, b in zip(ea, eb)))
            )
            assert fsum.values == tuple(x * y for x, y in zip(fa.values, fb.values))

    def test_conjugation_commutes(self, z5):
        # complex conjugate negates exponents; field conjugate must match
        for e in [(0, 1, 2, 3, 4), (0, 2, 4, 1, 3), (1, 1, 0, 4, 2)]:
            f = embed(ExponentFunction(z5, 5, e))
            conj_f = embed(ExponentFunction(z5, 5, tuple(-k % 5 for k in e)))
            assert conj_f.values == tuple(v.conjugate() for v in f.values)

    def test_inadmissible_order_rejected(self, z5):
        with pytest.raises(InvalidOrder):
            ExponentFunction(z5, 3, (0, 0, 0, 0, 0))


class TestComparison:
    def test_bent_example_holds(self, z3):
        assert comparison_check(ExponentFunction(z3, 3, (0, 1, 1)))

    def test_vacuous_when_not_classically_bent(self, z3):
        assert comparison_check(ExponentFunction(z3, 3, (0, 0, 0)))

    def test_exhaustive_census_on_z3(self, z3):
        classical = set()
        field = set()
        for e in all_exponent_tables(z3, 3):
            ef = ExponentFunction(z3, 3, e)
            assert comparison_check(ef)
            if is_classical_bent(ef):
                classical.add(e)
            if is_bent_spectral(embed(ef)).is_bent:
                field.add(e)
        # on this instance the two notions coincide; 18 functions each
        assert len(classical) == 18
        assert classical == field

    def test_z5_quadratic_bent_both_ways(self, z5):
        ef = ExponentFunction(z5, 5, tuple(x * x % 5 for x in range(5)))
        assert is_classical_bent(ef)
        assert is_bent_spectral(embed(ef)).is_bent

    def test_odd_characteristic_instance(self, z4):
        ef = ExponentFunction(z4, 4, (0, 0, 0, 2))
        assert is_classical_bent(ef)
        assert comparison_check(ef)
        assert is_bent_spectral(embed(ef)).is_bent
