from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from anquartics.exactpoly import (
    PowerSumQuartic,
    SparsePoly,
    expand,
    invariant_part,
    power_sum,
    to_power_sum,
)
from anquartics.oracle import brute_reynolds
from anquartics.reynolds import (
    lemma_sym_closed_form,
    orbit_stats,
    reynolds,
    source_polynomials,
    verify_lemma_sym,
)


def rationals():
    return st.builds(F, st.integers(-6, 6), st.integers(1, 6))


def quartic_monomials(nvars):
    def to_poly(exps):
        if sum(exps) == 0:
            exps = (4,) + (0,) * (nvars - 1)
        return SparsePoly(nvars, {tuple(exps): F(1)})

    return st.builds(to_poly, st.tuples(*([st.integers(0, 4)] * nvars)))


class TestOrbitStats:
    def test_single_orbit(self):
        s = orbit_stats((4, 0, 0), 3)
        assert s.orbit_size == 3
        assert s.sorted_exponents == (4, 0, 0)

    def test_mixed(self):
        # x1^3 x2: 6 = 3!/1!1!1!... with one 3, one 1, one 0
        assert orbit_stats((3, 1, 0), 3).orbit_size == 6

    def test_repeats(self):
        assert orbit_stats((2, 2, 0, 0), 4).orbit_size == 6


class TestReynolds:
    def test_x1_fourth(self):
        f = SparsePoly(3, {(4, 0, 0): F(1)})
        assert reynolds(f) == power_sum(4, 3) * F(1, 3)

    def test_p22_fixed(self):
        p22 = power_sum(2, 5) * power_sum(2, 5)
        assert reynolds(p22) == p22

    def test_square_difference_n4(self):
        _, q2, _ = source_polynomials(4)
        expected = expand(PowerSumQuartic(0, 0, 0, F(-1, 10), F(1, 2)), 5)
        assert reynolds(q2) == expected

    def test_idempotent(self):
        _, _, q3 = source_polynomials(4)
        r = reynolds(q3)
        assert reynolds(r) == r

    @given(quartic_monomials(4), quartic_monomials(4), rationals(), rationals())
    @settings(max_examples=30, deadline=None)
    def test_linearity(self, f, g, a, b):
        assert reynolds(a * f + b * g) == a * reynolds(f) + b * reynolds(g)

    @given(quartic_monomials(4))
    @settings(max_examples=25, deadline=None)
    def test_result_symmetric(self, f):
        assert reynolds(f).is_symmetric()

    @given(quartic_monomials(5))
    @settings(max_examples=20, deadline=None)
    def test_brute_force_equivalence(self, f):
        assert reynolds(f) == brute_reynolds(f)


class TestLemmaSymClosedForm:
    def test_second_form_n4(self):
        forms = lemma_sym_closed_form(4)
        assert forms[1] == PowerSumQuartic(0, 0, 0, F(-1, 10), F(1, 2))

    def test_third_form_invariant_part_n4(self):
        forms = lemma_sym_closed_form(4)
        assert invariant_part(forms[2]).a == F(13, 30)
        assert invariant_part(forms[2]).b == F(-2, 3)

    def test_third_form_matches_operator_at_n3(self):
        # stated in closed form for n >= 4; checked computationally at n = 3
        _, _, q3 = source_polynomials(3)
        closed = lemma_sym_closed_form(3)[2]
        assert reynolds(q3) == expand(closed, 4)

    @pytest.mark.parametrize("n", [4, 5, 6])
    def test_closed_forms_equal_operator(self, n):
        sources = source_polynomials(n)
        for src, cf in zip(sources, lemma_sym_closed_form(n)):
            assert reynolds(src) == expand(cf, n + 1)


class TestVerifyLemmaSym:
    @pytest.mark.parametrize("n", [4, 5])
    def test_holds(self, n):
        assert verify_lemma_sym(n)

    def test_n3_recorded(self):
        # the n = 3 gap check: identities hold verbatim there as well
        assert verify_lemma_sym(3) is True

    def test_rejects_small_n(self):
        with pytest.raises(ValueError):
            verify_lemma_sym(2)
