import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gfharmonic import (
    DegreeMismatch,
    DivisionByZero,
    InvalidDivisor,
    NonPrime,
    ReducibleModulus,
    make_context,
)
from _oracles import irreducible_by_factor_enumeration, multiplicative_order, poly_mul, poly_trim


class TestConstruction:
    def test_gf4_selects_standard_modulus(self, gf4):
        assert gf4.modulus == (1, 1, 1)
        assert gf4.q == 4 and gf4.sqrt_q == 2 and gf4.circle_order == 3
        assert multiplicative_order(gf4.u) == 3

    def test_gf16_selects_standard_modulus(self, gf16):
        assert gf16.modulus == (1, 1, 0, 0, 1)
        assert gf16.u == gf16.g ** 3
        assert multiplicative_order(gf16.u) == 5

    def test_selected_moduli_are_irreducible_by_factor_enumeration(self):
        for p, n in [(2, 1), (2, 2), (3, 1), (5, 1)]:
            ctx = make_context(p, n)
            assert irreducible_by_factor_enumeration(ctx.modulus, p)

    def test_composite_characteristic_rejected(self):
        with pytest.raises(NonPrime):
            make_context(4, 1)

    def test_reducible_modulus_rejected(self):
        # x^4 + x^2 + 1 = (x^2 + x + 1)^2 over GF(2)
        with pytest.raises(ReducibleModulus):
            make_context(2, 2, [1, 0, 1, 0, 1])

    def test_wrong_degree_modulus_rejected(self):
        with pytest.raises(DegreeMismatch):
            make_context(2, 2, [1, 1, 1])

    def test_explicit_modulus_accepted(self):
        ctx = make_context(2, 2, [1, 1, 0, 0, 1])
        assert ctx.modulus == (1, 1, 0, 0, 1)

    def test_primitive_element_has_full_order(self):
        for p, n in [(2, 1), (2, 2), (3, 1)]:
            ctx = make_context(p, n)
            assert multiplicative_order(ctx.g) == ctx.q - 1


class TestArithmetic:
    def test_gf4_products(self, gf4):
        w = gf4.element([0, 1])
        w1 = gf4.element([1, 1])
        assert w * w == w1
        assert w * w1 == gf4.one
        assert w + w == gf4.zero

    def test_matches_schoolbook_polynomial_product(self, gf16):
        # oracle: schoolbook multiply then long-division remainder
        for a in gf16.elements():
            for b in list(gf16.elements())[:6]:
                raw = poly_mul(list(a.coeffs), list(b.coeffs), 2)
                rem = list(raw)
                mod = list(gf16.modulus)
                for i in range(len(rem) - 1, 3, -1):
                    if rem[i]:
                        for j in range(5):
                            rem[i - 4 + j] = (rem[i - 4 + j] - mod[j]) % 2
                expected = (rem + [0] * 4)[:4]
                assert list((a * b).coeffs) == expected

    def test_power_by_repeated_squaring_oracle(self, gf16):
        g = gf16.g
        acc = gf16.one
        for k in range(20):
            assert g ** k == acc
            acc = acc * g
        assert g ** 15 == gf16.one

    def test_inverse(self, gf9):
        for x in gf9.elements():
            if x.is_zero():
                with pytest.raises(DivisionByZero):
                    x.inverse()
            else:
                assert x * x.inverse() == gf9.one

    def test_negative_exponent(self, gf16):
        assert gf16.g ** -1 == gf16.g.inverse()
        with pytest.raises(DivisionByZero):
            gf16.zero ** -2

    def test_mixed_field_operands_rejected(self, gf4, gf16):
        with pytest.raises(ValueError):
            gf4.one + gf16.one


class TestConjugation:
    def test_gf4_conjugate_is_square(self, gf4):
        w = gf4.element([0, 1])
        assert w.conjugate() == w * w

    def test_fixes_zero_and_one(self, gf16):
        assert gf16.zero.conjugate() == gf16.zero
        assert gf16.one.conjugate() == gf16.one

    def test_gf16_conjugate_of_g(self, gf16):
        assert gf16.g.conjugate() == gf16.g ** 4

    def test_is_field_automorphism(self, gf16):
        els = list(gf16.elements())
        for a, b in itertools.product(els, els):
            assert (a + b).conjugate() == a.conjugate() + b.conjugate()
            assert (a * b).conjugate() == a.conjugate() * b.conjugate()
        for a in els:
            assert a.conjugate().conjugate() == a

    def test_fixed_points_are_exactly_the_subfield(self, gf16, gf9):
        for ctx in (gf16, gf9):
            fixed = {x.code for x in ctx.elements() if x.conjugate() == x}
            subfield = {x.code for x in ctx.elements() if x ** ctx.sqrt_q == x}
            assert fixed == subfield
            assert len(fixed) == ctx.sqrt_q


class TestNorm:
    def test_gf4_norms(self, gf4):
        w = gf4.element([0, 1])
        assert w.norm() == gf4.one
        assert gf4.zero.norm() == gf4.zero

    def test_gf16_norm_of_g_lands_in_subfield(self, gf16):
        nm = gf16.g.norm()
        assert nm == gf16.g ** 5
        assert nm ** 4 == nm

    def test_norm_values_always_in_subfield(self, gf9, gf16):
        for ctx in (gf9, gf16):
            for x in ctx.elements():
                nm = x.norm()
                assert nm ** ctx.sqrt_q == nm

    def test_norm_multiplicative(self, gf9):
        els = list(gf9.elements())
        for a, b in itertools.product(els, els):
            assert (a * b).norm() == a.norm() * b.norm()

    def test_norm_vanishes_only_at_zero(self, gf16):
        for x in gf16.elements():
            assert x.norm().is_zero() == x.is_zero()


class TestCircle:
    def test_gf4_circle_is_all_nonzero_elements(self, gf4):
        w = gf4.element([0, 1])
        assert w.in_circle()
        assert set(gf4.circle()) == {gf4.one, w, gf4.element([1, 1])}

    def test_circle_size_is_sqrt_q_plus_one(self):
        for p, n in [(2, 1), (2, 2), (3, 1)]:
            ctx = make_context(p, n)
            members = [x for x in ctx.elements() if not x.is_zero() and x.in_circle()]
            assert len(members) == ctx.sqrt_q + 1
            assert set(members) == set(ctx.circle())

    def test_norm_on_circle_is_one(self, gf16):
        for x in gf16.circle():
            assert x.norm() == gf16.one

    def test_subgroup_generator_orders(self, gf16, gf9):
        for ctx in (gf16, gf9):
            s = ctx.circle_order
            for d in range(1, s + 1):
                if s % d:
                    continue
                ud = ctx.circle_subgroup_generator(d)
                assert multiplicative_order(ud) == d
                roots = {ud ** k for k in range(d)}
                assert roots == {x for x in ctx.circle() if x ** d == ctx.one}

    def test_gf16_top_subgroup_generator_is_u(self, gf16):
        assert gf16.circle_subgroup_generator(5) == gf16.u

    def test_non_divisor_rejected(self, gf16):
        with pytest.raises(InvalidDivisor):
            gf16.circle_subgroup_generator(3)


@settings(max_examples=60, deadline=None)
@given(a=st.integers(0, 8), b=st.integers(0, 8), c=st.integers(0, 8))
def test_gf9_field_axioms(a, b, c):
    ctx = make_context(3, 1)
    els = list(ctx.elements())
    x, y, z = els[a], els[b], els[c]
    assert x * (y + z) == x * y + x * z
    assert (x * y) * z == x * (y * z)
    assert x + (y + z) == (x + y) + z
    assert x - x == ctx.zero
