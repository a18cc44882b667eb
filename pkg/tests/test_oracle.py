import math
import random
from fractions import Fraction as F

import pytest

from anquartics.cones import Position, classify, extremal_rays
from anquartics.exactpoly import InvariantQuartic, SparsePoly, power_sum
from anquartics.halfdeg import OutOfRange, phi
from anquartics.oracle import (
    TooManyVariables,
    brute_reynolds,
    numeric_two_value,
    sample_min,
)
from anquartics.reynolds import reynolds, source_polynomials


class TestSampleMin:
    def test_psd_form_stays_nonnegative(self):
        rep = sample_min(4, extremal_rays(4).F, 100_000, 7)
        assert rep.min_value >= -1e-9

    def test_outside_form_goes_negative(self):
        rep = sample_min(4, InvariantQuartic(-1, 4), 100_000, 7)
        assert rep.min_value < -1e-3

    def test_p22_constant_on_sphere(self):
        rep = sample_min(6, InvariantQuartic(1, 0), 1_000, 7)
        assert abs(rep.min_value - 1.0) < 1e-9

    def test_deterministic(self):
        a = sample_min(5, InvariantQuartic(2, -1), 5_000, 123)
        b = sample_min(5, InvariantQuartic(2, -1), 5_000, 123)
        assert a == b

    def test_argmin_point_on_feasible_sphere(self):
        rep = sample_min(7, InvariantQuartic(-1, 5), 10_000, 3)
        assert abs(sum(rep.argmin_point)) < 1e-12
        assert abs(sum(x * x for x in rep.argmin_point) - 1.0) < 1e-12

    def test_exact_witness_always_confirms_outside(self):
        rng = random.Random(21)
        checked = 0
        while checked < 20:
            n = rng.randint(3, 12)
            f = InvariantQuartic(rng.randint(-9, 9), rng.randint(-9, 9))
            m = classify(n, f)
            if m.psd is not Position.OUTSIDE:
                continue
            P = m.witness
            norm = math.sqrt(P.p2())
            pt = [c / norm for c in P.coordinates]
            value = float(f.a) + float(f.b) * sum(x**4 for x in pt)
            assert value < 0
            checked += 1


class TestBruteReynolds:
    def test_p22_fixed(self):
        p22 = power_sum(2, 5) * power_sum(2, 5)
        assert brute_reynolds(p22) == p22

    def test_single_monomial_orbit(self):
        f = SparsePoly(3, {(3, 1, 0): F(1)})
        r = brute_reynolds(f)
        assert len(r.terms) == 6
        assert all(c == F(1, 6) for c in r.terms.values())

    def test_matches_orbit_counting(self):
        for src in source_polynomials(4):
            assert brute_reynolds(src) == reynolds(src)

    def test_too_many_variables(self):
        with pytest.raises(TooManyVariables):
            brute_reynolds(power_sum(2, 7))


class TestNumericTwoValue:
    @pytest.mark.parametrize(
        "n,l,expected",
        [(4, 2, F(7, 30)), (3, 1, F(7, 12)), (5, 3, F(1, 6))],
    )
    def test_matches_phi(self, n, l, expected):
        s, t = numeric_two_value(n, l)
        p4 = l * t**4 + (n + 1 - l) * s**4
        assert abs(p4 - float(expected)) < 1e-10
        assert abs(p4 - float(phi(n, l))) < 1e-10

    def test_constraints_hold(self):
        for n in range(3, 13):
            for l in range(1, n + 1):
                s, t = numeric_two_value(n, l)
                assert t > 0
                assert abs(l * t + (n + 1 - l) * s) < 1e-12
                assert abs(l * t * t + (n + 1 - l) * s * s - 1) < 1e-12

    def test_out_of_range(self):
        with pytest.raises(OutOfRange):
            numeric_two_value(4, 5)
