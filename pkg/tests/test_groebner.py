import itertools

import pytest
from hypothesis import given, settings, strategies as st

from hkkit.closed_form import RingSpec, hk_value
from hkkit.groebner import (
    BasisCheck,
    CharacteristicMismatchError,
    FpPoly,
    Monomial,
    PairBudgetExceededError,
    QCapExceededError,
    buchberger,
    count_under_staircase,
    frobenius_power_generators,
    hk_brute,
    reduce,
    s_polynomial,
    standard_monomial_count,
    verify_closed_form_basis,
)

X = Monomial(1, 0)
Y = Monomial(0, 1)


def mono_poly(p, i, j, c=1):
    return FpPoly(p, {Monomial(i, j): c})


class TestMonomial:
    def test_order_is_lex_x_over_y(self):
        assert Monomial(2, 0) > Monomial(1, 9)
        assert Monomial(1, 3) > Monomial(1, 2)
        assert Monomial(0, 5) < Monomial(1, 0)
        assert max([Monomial(0, 9), Monomial(3, 1), Monomial(3, 0)]) == Monomial(3, 1)

    def test_divides(self):
        assert Monomial(1, 2).divides(Monomial(3, 2))
        assert not Monomial(1, 2).divides(Monomial(3, 1))
        assert Monomial(0, 0).divides(Monomial(0, 0))

    def test_lcm_mul_div(self):
        a, b = Monomial(3, 1), Monomial(2, 5)
        assert a.lcm(b) == Monomial(3, 5)
        assert a.mul(b) == Monomial(5, 6)
        assert Monomial(3, 5).div(a) == Monomial(0, 4)
        with pytest.raises(ValueError):
            a.div(b)

    def test_str_forms(self):
        assert str(Monomial(0, 0)) == "1"
        assert str(Monomial(1, 0)) == "x"
        assert str(Monomial(0, 1)) == "y"
        assert str(Monomial(2, 1)) == "x^2*y"
        assert str(Monomial(1, 3)) == "x*y^3"


class TestFpPoly:
    def test_normalizes_coefficients(self):
        f = FpPoly(5, {Monomial(1, 0): 7, Monomial(0, 1): -1})
        assert f.terms == {Monomial(1, 0): 2, Monomial(0, 1): 4}

    def test_drops_zero_terms(self):
        f = FpPoly(3, {Monomial(1, 0): 3, Monomial(0, 0): 1})
        assert f.terms == {Monomial(0, 0): 1}
        assert FpPoly(3, {}).is_zero()

    def test_accumulates_repeated_monomials(self):
        f = FpPoly(5, [(Monomial(1, 1), 2), (Monomial(1, 1), 4)])
        assert f.terms == {Monomial(1, 1): 1}

    def test_rejects_composite_characteristic(self):
        with pytest.raises(ValueError):
            FpPoly(4, {Monomial(0, 0): 1})
        with pytest.raises(ValueError):
            FpPoly(1, {})

    def test_rejects_negative_exponents(self):
        with pytest.raises(ValueError):
            FpPoly(3, {Monomial(-1, 0): 1})

    def test_char2_addition_collapses(self):
        relation = FpPoly(2, {Monomial(3, 0): 1, Monomial(0, 3): -1})  # x^3 + y^3
        cube = mono_poly(2, 0, 3)
        assert relation + cube == mono_poly(2, 3, 0)

    def test_leading_term(self):
        f = FpPoly(3, {Monomial(5, 0): 1, Monomial(0, 5): -1})
        assert f.leading_term() == (Monomial(5, 0), 1)
        with pytest.raises(ValueError):
            FpPoly(3, {}).leading_term()

    def test_mul_monomial_distributes(self):
        f = FpPoly(5, {Monomial(1, 0): 1, Monomial(0, 1): -1})  # x - y
        assert f.mul_monomial(Monomial(0, 2)) == FpPoly(
            5, {Monomial(1, 2): 1, Monomial(0, 3): -1}
        )
        assert f.mul_monomial(Monomial(0, 0), 0).is_zero()

    def test_monic_scales_by_inverse(self):
        f = FpPoly(5, {Monomial(1, 0): 2, Monomial(0, 1): 1})
        assert f.monic() == FpPoly(5, {Monomial(1, 0): 1, Monomial(0, 1): 3})

    def test_mixed_characteristic_rejected(self):
        with pytest.raises(CharacteristicMismatchError):
            mono_poly(2, 1, 0) + mono_poly(3, 1, 0)
        with pytest.raises(CharacteristicMismatchError):
            mono_poly(2, 1, 0) * mono_poly(5, 1, 0)

    def test_str_rendering(self):
        assert str(FpPoly(2, {})) == "0"
        f = FpPoly(3, {Monomial(0, 0): 1, Monomial(1, 1): 2, Monomial(3, 0): 1})
        assert str(f) == "x^3 + 2*x*y + 1"

    def test_hash_consistent_with_eq(self):
        f = FpPoly(5, {Monomial(1, 2): 3})
        g = FpPoly(5, {Monomial(1, 2): -2})
        assert f == g
        assert hash(f) == hash(g)


@st.composite
def poly_pair(draw):
    p = draw(st.sampled_from((2, 3, 5)))
    monos = st.tuples(
        st.integers(min_value=0, max_value=4), st.integers(min_value=0, max_value=4)
    )
    coeffs = st.integers(min_value=1, max_value=p - 1) if p > 2 else st.just(1)
    d1 = draw(st.dictionaries(monos, coeffs, max_size=4))
    d2 = draw(st.dictionaries(monos, coeffs, max_size=4))
    return FpPoly(p, d1), FpPoly(p, d2)


class TestPolyAlgebra:
    @given(poly_pair())
    def test_add_sub_roundtrip(self, pair):
        f, g = pair
        assert (f + g) - g == f
        assert f + (-f) == FpPoly(f.p, {})

    @given(poly_pair())
    def test_mul_commutes(self, pair):
        f, g = pair
        assert f * g == g * f

    @given(poly_pair())
    def test_leading_term_of_product(self, pair):
        f, g = pair
        if f.is_zero() or g.is_zero():
            assert (f * g).is_zero()
            return
        lm_f, lc_f = f.leading_term()
        lm_g, lc_g = g.leading_term()
        lm, lc = (f * g).leading_term()
        assert lm == lm_f.mul(lm_g)
        assert lc == (lc_f * lc_g) % f.p

    @given(poly_pair())
    def test_product_reduces_to_zero_mod_factor(self, pair):
        f, g = pair
        if g.is_zero():
            return
        assert reduce(f * g, [g]).is_zero()


class TestSPolynomial:
    def test_predicted_basis_pair_cancels_exactly(self):
        # b = 2, q = 8, p = 3: the mixed generator against the pure y power
        f = mono_poly(3, 2, 6)
        g = mono_poly(3, 0, 8)
        assert s_polynomial(f, g).is_zero()

    def test_mixed_generator_against_relation(self):
        # b = 3, q = 8, n = 5, p = 2
        f = mono_poly(2, 3, 5)
        relation = FpPoly(2, {Monomial(5, 0): 1, Monomial(0, 5): -1})
        assert s_polynomial(f, relation) == mono_poly(2, 0, 10)

    def test_pure_power_against_relation(self):
        g = mono_poly(2, 0, 8)
        relation = FpPoly(2, {Monomial(5, 0): 1, Monomial(0, 5): -1})
        assert s_polynomial(g, relation) == mono_poly(2, 0, 13)

    def test_makes_inputs_monic_first(self):
        f = FpPoly(5, {Monomial(2, 0): 3, Monomial(0, 1): 1})
        g = FpPoly(5, {Monomial(1, 1): 2})
        s = s_polynomial(f, g)
        # (x^2 y) / (3 x^2) * f - (x^2 y)/(2 x y) * g = x^2 y + 2 y^2 - x^2 y
        assert s == FpPoly(5, {Monomial(0, 2): 2})

    def test_zero_input_rejected(self):
        with pytest.raises(ValueError):
            s_polynomial(FpPoly(2, {}), mono_poly(2, 1, 0))

    def test_mixed_characteristic_rejected(self):
        with pytest.raises(CharacteristicMismatchError):
            s_polynomial(mono_poly(2, 1, 0), mono_poly(3, 0, 1))


class TestReduce:
    def test_pure_power_swallows_spolynomials(self):
        basis = [
            mono_poly(2, 3, 5),
            mono_poly(2, 0, 8),
            FpPoly(2, {Monomial(5, 0): 1, Monomial(0, 5): -1}),
        ]
        assert reduce(mono_poly(2, 0, 10), basis).is_zero()

    def test_self_reduction_vanishes(self):
        f = FpPoly(3, {Monomial(2, 1): 2, Monomial(0, 0): 1})
        assert reduce(f, [f]).is_zero()

    def test_unrelated_leading_monomial_is_inert(self):
        assert reduce(mono_poly(2, 1, 0), [mono_poly(2, 0, 1)]) == mono_poly(2, 1, 0)

    def test_zero_reduces_to_zero(self):
        assert reduce(FpPoly(5, {}), [mono_poly(5, 1, 0)]).is_zero()

    def test_first_divisor_in_list_order_wins(self):
        x = mono_poly(3, 1, 0)
        x_minus_y = FpPoly(3, {Monomial(1, 0): 1, Monomial(0, 1): -1})
        assert reduce(x, [x_minus_y, x]) == mono_poly(3, 0, 1)
        assert reduce(x, [x, x_minus_y]).is_zero()

    def test_zero_basis_element_rejected(self):
        with pytest.raises(ValueError):
            reduce(mono_poly(2, 1, 0), [FpPoly(2, {})])

    def test_result_is_in_normal_form(self):
        basis = [
            FpPoly(3, {Monomial(2, 0): 1, Monomial(0, 1): 1}),
            FpPoly(3, {Monomial(0, 3): 1, Monomial(1, 0): 2}),
        ]
        lead = [g.leading_term()[0] for g in basis]
        out = reduce(FpPoly(3, {Monomial(4, 4): 1, Monomial(1, 1): 2}), basis)
        for mono in out.terms:
            assert not any(lm.divides(mono) for lm in lead)


class TestBuchberger:
    def test_frobenius_generators_give_predicted_staircase(self):
        gb = buchberger(frobenius_power_generators(RingSpec(2, 3), 2))
        assert gb.staircase == (Monomial(0, 4), Monomial(1, 3), Monomial(3, 0))
        assert standard_monomial_count(gb) == 10

    def test_single_generator_returned_monic(self):
        f = FpPoly(5, {Monomial(3, 0): 2, Monomial(0, 3): 3})
        gb = buchberger([f])
        assert gb.generators == (FpPoly(5, {Monomial(3, 0): 1, Monomial(0, 3): 4}),)
        assert gb.staircase == (Monomial(3, 0),)

    def test_monomial_ideal_is_its_own_basis(self):
        gens = [mono_poly(7, 2, 0), mono_poly(7, 1, 1), mono_poly(7, 0, 2)]
        gb = buchberger(gens)
        assert gb.staircase == (Monomial(0, 2), Monomial(1, 1), Monomial(2, 0))

    def test_empty_input_rejected(self):
        with pytest.raises(ValueError):
            buchberger([])

    def test_zero_generator_rejected(self):
        with pytest.raises(ValueError):
            buchberger([mono_poly(2, 1, 0), FpPoly(2, {})])

    def test_mixed_characteristic_rejected(self):
        with pytest.raises(CharacteristicMismatchError):
            buchberger([mono_poly(2, 1, 0), mono_poly(3, 0, 1)])

    def test_pair_budget_is_a_hard_stop(self):
        gens = [mono_poly(5, 2, 1), mono_poly(5, 1, 2)]
        with pytest.raises(PairBudgetExceededError):
            buchberger(gens, pair_budget=0)

    def test_permutations_give_identical_output(self):
        gens = frobenius_power_generators(RingSpec(3, 5), 3)
        expected = buchberger(gens)
        for perm in itertools.permutations(gens):
            assert buchberger(list(perm)) == expected

    def test_output_is_reduced(self):
        gb = buchberger(frobenius_power_generators(RingSpec(2, 5), 3))
        lead = [g.leading_term()[0] for g in gb.generators]
        assert lead == sorted(lead)
        for idx, g in enumerate(gb.generators):
            assert g.leading_term()[1] == 1
            others = lead[:idx] + lead[idx + 1 :]
            for mono in g.terms:
                assert not any(lm.divides(mono) for lm in others)

    @given(st.data())
    @settings(max_examples=60, deadline=None)
    def test_buchberger_certificates(self, data):
        p = data.draw(st.sampled_from((2, 3, 5)))
        monos = st.tuples(
            st.integers(min_value=0, max_value=4),
            st.integers(min_value=0, max_value=4),
        )
        coeffs = st.integers(min_value=1, max_value=p - 1) if p > 2 else st.just(1)
        gens = data.draw(
            st.lists(
                st.dictionaries(monos, coeffs, min_size=1, max_size=3).map(
                    lambda d: FpPoly(p, d)
                ),
                min_size=1,
                max_size=3,
            )
        )
        gb = buchberger(gens)
        basis = list(gb.generators)
        # ideal containment one way: inputs vanish modulo the basis
        for g in gens:
            assert reduce(g, basis).is_zero()
        # Buchberger's criterion holds post hoc
        for f, g in itertools.combinations(basis, 2):
            assert reduce(s_polynomial(f, g), basis).is_zero()
        # staircase is minimal: pairwise incomparable
        for a, b in itertools.combinations(gb.staircase, 2):
            assert not a.divides(b)
            assert not b.divides(a)


class TestStandardMonomialCount:
    def test_hand_counted_staircases(self):
        assert count_under_staircase([Monomial(1, 3), Monomial(0, 4), Monomial(3, 0)]) == 10
        assert count_under_staircase([Monomial(1, 0), Monomial(0, 1)]) == 1
        assert count_under_staircase([Monomial(2, 0)]) is None
        assert count_under_staircase([Monomial(0, 2)]) is None
        assert count_under_staircase([Monomial(0, 0)]) == 0

    def test_box_staircase(self):
        assert count_under_staircase([Monomial(3, 0), Monomial(0, 4)]) == 12

    @given(
        st.lists(
            st.tuples(
                st.integers(min_value=0, max_value=6),
                st.integers(min_value=0, max_value=6),
            ).map(lambda t: Monomial(*t)),
            min_size=1,
            max_size=5,
        )
    )
    def test_agrees_with_lattice_enumeration(self, monos):
        got = count_under_staircase(monos)
        has_x = any(m.j == 0 for m in monos)
        has_y = any(m.i == 0 for m in monos)
        if not (has_x and has_y):
            assert got is None
            return
        bound = 13  # exponents cap at 6, so nothing outside a 13x13 box survives
        brute = sum(
            1
            for i in range(bound)
            for j in range(bound)
            if not any(m.divides(Monomial(i, j)) for m in monos)
        )
        assert got == brute

    def test_predicted_staircase_identity_exhaustive(self):
        # staircase {x^b y^(q-b), y^q, x^n} pins n*q - b*(n-b) lattice points
        for n in range(2, 13):
            for q in range(n + 1, 65):
                for b in range(1, n):
                    count = count_under_staircase(
                        [Monomial(b, q - b), Monomial(0, q), Monomial(n, 0)]
                    )
                    assert count == n * q - b * (n - b), (n, q, b)


class TestHKBrute:
    def test_known_colengths(self):
        assert hk_brute(RingSpec(2, 5), 3) == 34
        assert hk_brute(RingSpec(3, 4), 1) == 9
        assert hk_brute(RingSpec(2, 15), 4) == 226

    def test_tiny_q_cases(self):
        assert hk_brute(RingSpec(2, 5), 0) == 1
        assert hk_brute(RingSpec(5, 3), 1) == hk_value(RingSpec(5, 3), 1)

    def test_cap_is_inclusive(self):
        spec = RingSpec(2, 5)
        assert hk_brute(spec, 9, q_cap=512) == hk_value(spec, 9)
        with pytest.raises(QCapExceededError):
            hk_brute(spec, 10, q_cap=512)

    def test_cap_error_carries_details(self):
        with pytest.raises(QCapExceededError) as info:
            hk_brute(RingSpec(2, 5), 4, q_cap=8)
        assert info.value.q == 16
        assert info.value.q_cap == 8

    def test_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            hk_brute(RingSpec(2, 5), -1)
        with pytest.raises(ValueError):
            hk_brute(RingSpec(2, 5), 1, q_cap=0)


class TestVerifyClosedFormBasis:
    def test_passes_on_known_instances(self):
        check = verify_closed_form_basis(RingSpec(2, 5), 3)
        assert check.ok and check.telescoping_ok and check.spoly_ok and check.staircase_ok
        assert check.q == 8
        assert check.b == 3
        assert bool(check)

    def test_smallest_instance(self):
        check = verify_closed_form_basis(RingSpec(3, 2), 1)
        assert check.ok
        assert check.b == 1
        assert check.computed_staircase == (
            Monomial(0, 3),
            Monomial(1, 2),
            Monomial(2, 0),
        )

    def test_expected_staircase_echoed(self):
        check = verify_closed_form_basis(RingSpec(2, 7), 3)
        assert check.expected_staircase == check.computed_staircase
        assert check.expected_staircase == (
            Monomial(0, 8),
            Monomial(1, 7),
            Monomial(7, 0),
        )

    def test_requires_q_above_n(self):
        with pytest.raises(ValueError):
            verify_closed_form_basis(RingSpec(2, 3), 1)  # q = 2 < 3
        with pytest.raises(ValueError):
            verify_closed_form_basis(RingSpec(2, 5), 0)

    def test_respects_q_cap(self):
        with pytest.raises(QCapExceededError):
            verify_closed_form_basis(RingSpec(2, 5), 10, q_cap=512)

    def test_check_object_is_falsy_when_failed(self):
        failed = BasisCheck(
            ok=False,
            telescoping_ok=True,
            spoly_ok=True,
            staircase_ok=False,
            expected_staircase=(),
            computed_staircase=(),
            q=8,
            b=3,
        )
        assert not failed
