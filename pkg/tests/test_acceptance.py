"""Acceptance suite: one test per criterion, printing a pass/fail line each.

Run with `pytest tests/test_acceptance.py -s` to see the per-criterion
lines as they complete.
"""

import math
import random
import time
from fractions import Fraction as F

import pytest

from anquartics import halfdeg
from anquartics.certify import (
    NotInSosCone,
    cert_S1,
    cert_S2,
    cert_for,
    cert_global,
    verify,
)
from anquartics.cones import (
    Position,
    classify,
    cones_equal,
    extremal_rays,
    gap_witness,
    sos_generators,
    sos_solve_raw,
)
from anquartics.exactpoly import (
    InvariantQuartic,
    PowerSumQuartic,
    evaluate,
    expand,
    power_sum,
    reduce_mod_p1,
)
from anquartics.oracle import brute_reynolds, numeric_two_value, sample_min
from anquartics.reynolds import reynolds, source_polynomials, verify_lemma_sym


def report(number, label):
    def decorator(func):
        def wrapper(*args, **kwargs):
            try:
                result = func(*args, **kwargs)
            except BaseException:
                print(f"ACCEPTANCE {number}: FAIL - {label}")
                raise
            print(f"ACCEPTANCE {number}: PASS - {label}")
            return result

        wrapper.__name__ = func.__name__
        return wrapper

    return decorator


@report(1, "extremal-ray closed forms match exhaustive enumeration, n in [3,200]")
def test_criterion_1_extremal_ray_formulas():
    start = time.monotonic()
    for n in range(3, 201):
        assert halfdeg.alpha(n) == halfdeg.p4_min_int(n).value
        assert halfdeg.beta(n) == halfdeg.p4_max_int(n).value
    assert halfdeg.alpha(3) == F(1, 4)
    assert halfdeg.beta(3) == F(7, 12)
    assert halfdeg.alpha(4) == F(7, 30)
    assert halfdeg.beta(4) == F(13, 20)
    assert halfdeg.alpha(5) == F(1, 6)
    assert halfdeg.beta(5) == F(7, 10)
    assert time.monotonic() - start < 5.0


@report(2, "argmin/argmax structure and parity of the lower bound, n in [3,200]")
def test_criterion_2_argmin_argmax_structure():
    for n in range(3, 201):
        assert halfdeg.p4_max_int(n).argmins == frozenset({1, n})
        if n % 2 == 1:
            assert halfdeg.p4_min_int(n).argmins == frozenset({(n + 1) // 2})
        else:
            assert halfdeg.p4_min_int(n).argmins == frozenset({n // 2, n // 2 + 1})
        assert (halfdeg.alpha(n) == F(1, n + 1)) == (n % 2 == 1)


@report(3, "cone equality iff n odd, even-case coefficient, gap witnesses, n in [3,200]")
def test_criterion_3_main_theorem():
    start = time.monotonic()
    for n in range(3, 201):
        assert cones_equal(n) == (n % 2 == 1)
        if n % 2 == 0:
            raw = sos_solve_raw(n, extremal_rays(n).F)
            assert raw[1] == F(-4, 4 - 6 * n + n * n + n**4)
            member = classify(n, gap_witness(n))
            assert member.psd != Position.OUTSIDE
            assert member.sos is Position.OUTSIDE
        else:
            assert gap_witness(n) is None
    assert time.monotonic() - start < 10.0


@report(4, "symmetrization identities hold for n in [4,12]; n=3 computed and recorded")
def test_criterion_4_reynolds_identities():
    for n in range(4, 13):
        assert verify_lemma_sym(n)
    for src in source_polynomials(4):
        assert brute_reynolds(src) == reynolds(src)
    # the identities are stated for n >= 4; the n = 3 case is settled
    # computationally and its outcome recorded here
    result_n3 = verify_lemma_sym(3)
    print(f"  [recorded] third-identity check at n=3: {result_n3}")
    assert result_n3 is True


@report(5, "certificates build and verify; F_4 rejected with NotInSosCone")
def test_criterion_5_certificates():
    start = time.monotonic()
    for n in range(3, 13):
        assert verify(cert_S1(n))
        assert verify(cert_S2(n))
    assert verify(cert_for(5, extremal_rays(5).F))
    with pytest.raises(NotInSosCone):
        cert_for(4, extremal_rays(4).F)
    for n in range(3, 13):
        assert verify(cert_global(n, InvariantQuartic(1, -1)))
        assert verify(cert_global(n, InvariantQuartic(-1, n + 1)))
    assert time.monotonic() - start < 30.0


@report(6, "uniform non-SOS example reduces to 4(p2^2+p4) and is SOS there")
def test_criterion_6_fn_reduction():
    fn = PowerSumQuartic(4, -5, F(-139, 20), 4, 4)
    from anquartics.exactpoly import invariant_part

    assert invariant_part(fn) == InvariantQuartic(4, 4)
    for n in (4, 5, 6):
        lhs = reduce_mod_p1(expand(fn, n + 1))
        rhs = reduce_mod_p1(expand(PowerSumQuartic(0, 0, 0, 4, 4), n + 1))
        assert lhs == rhs
        assert classify(n, InvariantQuartic(4, 4)).sos != Position.OUTSIDE


@report(7, "10^4 outside-classified forms all have strictly negative exact witnesses")
def test_criterion_7_witness_soundness():
    rng = random.Random(2024)
    # cache exact evaluations of the two basis quartics at each witness point
    eval_cache = {}
    found = 0
    while found < 10_000:
        n = rng.randint(3, 30)
        f = InvariantQuartic(
            F(rng.randint(-30, 30), rng.randint(1, 9)),
            F(rng.randint(-30, 30), rng.randint(1, 9)),
        )
        member = classify(n, f)
        if member.psd is not Position.OUTSIDE:
            continue
        P = member.witness
        key = (n, P.l)
        if key not in eval_cache:
            p22 = power_sum(2, n + 1) * power_sum(2, n + 1)
            p4 = power_sum(4, n + 1)
            eval_cache[key] = (
                evaluate(p22, P.coordinates),
                evaluate(p4, P.coordinates),
            )
        v22, v4 = eval_cache[key]
        assert f.a * v22 + f.b * v4 < 0
        found += 1


@report(8, "numeric sampling and two-value solutions corroborate the exact results")
def test_criterion_8_oracle_corroboration():
    rng = random.Random(5)
    for n in range(3, 13):
        rays = extremal_rays(n)
        for _ in range(20):
            u = F(rng.randint(0, 9), rng.randint(1, 9))
            v = F(rng.randint(0, 9), rng.randint(1, 9))
            if u == 0 and v == 0:
                u = F(1)
            f = InvariantQuartic(
                u * rays.F.a + v * rays.G.a, u * rays.F.b + v * rays.G.b
            )
            rep = sample_min(n, f, 100_000, 7)
            assert rep.min_value >= -1e-9, (n, f, rep.min_value)
        for l in range(1, n + 1):
            s, t = numeric_two_value(n, l)
            p4 = l * t**4 + (n + 1 - l) * s**4
            assert abs(p4 - float(halfdeg.phi(n, l))) < 1e-10


@report(9, "10^4 random forms: SOS membership implies nonnegativity, exactly")
def test_criterion_9_containment():
    rng = random.Random(99)
    for _ in range(10_000):
        n = rng.randint(3, 30)
        f = InvariantQuartic(
            F(rng.randint(-30, 30), rng.randint(1, 9)),
            F(rng.randint(-30, 30), rng.randint(1, 9)),
        )
        member = classify(n, f)
        if member.sos is not Position.OUTSIDE:
            assert member.psd is not Position.OUTSIDE
