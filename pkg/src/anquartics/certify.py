"""Explicit sums-of-squares certificates and their exact verification.

A certificate states that a target quartic equals a nonnegative-weighted
sum of squared quadratics, either exactly or modulo the ideal (p1).  The
p1-multiplier is never materialized: the mod-p1 case is checked by
eliminating the last variable, which vanishes exactly on the ideal.
Verification is a full exact polynomial identity plus seeded random
rational spot checks on the zero-sum hyperplane.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from . import cones
from .exactpoly import (
    InvariantQuartic,
    PowerSumQuartic,
    SparsePoly,
    evaluate,
    expand,
    power_sum,
    reduce_mod_p1,
)

SPOT_CHECK_POINTS = 100
_SPOT_CHECK_SEED = 20240817


class NotInSosCone(ValueError):
    """The form has no nonnegative generator coordinates."""

    def __init__(self, n: int, f: InvariantQuartic, raw: tuple):
        self.n = n
        self.form = f
        self.raw = raw
        super().__init__(
            f"({f.a}, {f.b}) is not in the SOS cone for n={n}: "
            f"raw coordinates a'={raw[0]}, b'={raw[1]}"
        )


class NotGloballyPsd(ValueError):
    """The form is not nonnegative on all of R^(n+1)."""


@dataclass(frozen=True)
class Certificate:
    n: int
    target: PowerSumQuartic
    squares: Tuple[Tuple[Fraction, SparsePoly], ...]
    modulo_p1: bool


def cert_p22_minus_p4(n: int) -> Certificate:
    """p2^2 - p4 = 2 * sum_{i<j} (x_i x_j)^2, exact in the full ring."""
    if n < 1:
        raise ValueError("need n >= 1")
    m = n + 1
    squares = []
    for i, j in itertools.combinations(range(m), 2):
        e = [0] * m
        e[i] = e[j] = 1
        squares.append((Fraction(2), SparsePoly(m, {tuple(e): Fraction(1)})))
    return Certificate(
        n=n,
        target=PowerSumQuartic(0, 0, 0, 1, -1),
        squares=tuple(squares),
        modulo_p1=False,
    )


def cert_S1(n: int) -> Certificate:
    """p4 - p2^2/(n+1) = (1/(n+1)) * sum_{i<j} (x_i^2 - x_j^2)^2, exact."""
    if n < 2:
        raise ValueError("need n >= 2")
    m = n + 1
    w = Fraction(1, m)
    squares = []
    for i, j in itertools.combinations(range(m), 2):
        ei = [0] * m
        ei[i] = 2
        ej = [0] * m
        ej[j] = 2
        base = SparsePoly(m, {tuple(ei): Fraction(1), tuple(ej): Fraction(-1)})
        squares.append((w, base))
    return Certificate(
        n=n,
        target=PowerSumQuartic(0, 0, 0, Fraction(-1, m), 1),
        squares=tuple(squares),
        modulo_p1=False,
    )


def cert_S2(n: int) -> Certificate:
    """(1-n+n^2)p2^2 - n(n+1)p4 as 2 * sum of ((x_i-x_j)(x_k-x_l))^2 mod (p1).

    The sum runs over the 3*C(n+1, 4) unordered disjoint pair patterns.
    """
    if n < 3:
        raise cones.UnsupportedN(f"need n >= 3, got {n}")
    m = n + 1
    x = [SparsePoly.variable(i, m) for i in range(m)]
    squares = []
    for quad in itertools.combinations(range(m), 4):
        a, b, c, d = quad
        for (i, j), (k, l) in (((a, b), (c, d)), ((a, c), (b, d)), ((a, d), (b, c))):
            base = (x[i] - x[j]) * (x[k] - x[l])
            squares.append((Fraction(2), base))
    return Certificate(
        n=n,
        target=PowerSumQuartic(0, 0, 0, 1 - n + n * n, -n * (n + 1)),
        squares=tuple(squares),
        modulo_p1=True,
    )


def cert_for(n: int, f: InvariantQuartic) -> Certificate:
    """Certificate for any member of the SOS cone via generator coordinates."""
    raw = cones.sos_solve_raw(n, f)
    coords = cones.sos_coordinates(n, f)
    if coords is None:
        raise NotInSosCone(n, f, raw)
    a_prime, b_prime = coords
    squares: List[Tuple[Fraction, SparsePoly]] = []
    if a_prime > 0:
        squares.extend((a_prime * w, b) for w, b in cert_S1(n).squares)
    if b_prime > 0:
        squares.extend((b_prime * w, b) for w, b in cert_S2(n).squares)
    return Certificate(
        n=n,
        target=PowerSumQuartic(0, 0, 0, f.a, f.b),
        squares=tuple(squares),
        modulo_p1=True,
    )


def cert_global(n: int, f: InvariantQuartic) -> Certificate:
    """Exact (no p1-multiplier) certificate for a globally nonnegative form.

    Decomposes f over p2^2 - p4, (n+1)p4 - p2^2 and the single square p2,
    picking the branch by the sign of b so that boundary forms yield a pure
    one-part certificate.
    """
    if not cones.global_psd(n, f):
        raise NotGloballyPsd(
            f"({f.a}, {f.b}) is negative somewhere on R^{n + 1}"
        )
    m = n + 1
    squares: List[Tuple[Fraction, SparsePoly]] = []
    if f.b < 0:
        mu_pair, mu_p2 = -f.b, f.a + f.b
        if mu_pair > 0:
            squares.extend((mu_pair * w, b) for w, b in cert_p22_minus_p4(n).squares)
    else:
        mu_diff, mu_p2 = f.b / m, f.a + f.b / m
        if mu_diff > 0:
            # (n+1)p4 - p2^2 = (n+1) * S1, so rescale the S1 squares
            squares.extend((mu_diff * m * w, b) for w, b in cert_S1(n).squares)
    if mu_p2 > 0:
        squares.append((mu_p2, power_sum(2, m)))
    return Certificate(
        n=n,
        target=PowerSumQuartic(0, 0, 0, f.a, f.b),
        squares=tuple(squares),
        modulo_p1=False,
    )


def random_zero_sum_point(rng: random.Random, m: int) -> list:
    """Random rational point with coordinate sum zero."""
    pt = [
        Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(m - 1)
    ]
    pt.append(-sum(pt, Fraction(0)))
    return pt


def _compiled_terms(poly: SparsePoly):
    # [(coeff, ((var, exp), ...))] with integer coefficients kept as int
    out = []
    for mon, c in poly.terms.items():
        coeff = c.numerator if c.denominator == 1 else c
        out.append((coeff, tuple((i, e) for i, e in enumerate(mon) if e)))
    return out


def _eval_at(terms, pows):
    # pows[i][e] = point[i]**e, precomputed per point
    total = 0
    for c, factors in terms:
        v = c
        for i, e in factors:
            v = v * pows[i][e]
        total += v
    return total


def verify(cert: Certificate) -> bool:
    """Exact check of the certificate identity; never false-positive.

    Checks nonnegative weights, the full polynomial identity (modulo the
    last-variable elimination when modulo_p1 is set), and evaluations at
    seeded random rational points on the zero-sum hyperplane.
    """
    m = cert.n + 1
    if any(w < 0 for w, _ in cert.squares):
        return False
    if any(b.nvars != m for _, b in cert.squares):
        return False
    target = expand(cert.target, m)
    total_terms: dict = {}
    for w, base in cert.squares:
        if not w:
            continue
        for mon, c in (base * base).terms.items():
            s = total_terms.get(mon, 0) + w * c
            if s:
                total_terms[mon] = s
            else:
                del total_terms[mon]
    diff = target - SparsePoly(m, total_terms)
    if cert.modulo_p1:
        if not reduce_mod_p1(diff).is_zero():
            return False
    elif not diff.is_zero():
        return False

    # Seeded spot checks on the zero-sum hyperplane.  Integer points
    # suffice (they are rational) and keep the arithmetic fast; squares
    # with equal weights are grouped so each point costs one Fraction
    # multiply per distinct weight.
    max_deg = max(
        [target.total_degree()] + [2 * b.total_degree() for _, b in cert.squares],
        default=0,
    )
    by_weight: dict = {}
    for w, base in cert.squares:
        if w:
            by_weight.setdefault(w, []).append(_compiled_terms(base))
    target_terms = _compiled_terms(target)
    rng = random.Random(_SPOT_CHECK_SEED)
    for _ in range(SPOT_CHECK_POINTS):
        pt = [rng.randint(-9, 9) for _ in range(m - 1)]
        pt.append(-sum(pt))
        pows = [[x**e for e in range(max_deg + 1)] for x in pt]
        lhs = _eval_at(target_terms, pows)
        rhs = Fraction(0)
        for w, bases in by_weight.items():
            acc = Fraction(0)
            for terms in bases:
                v = _eval_at(terms, pows)
                acc += v * v
            rhs += w * acc
        if lhs != rhs:
            return False
    return True


# -- certificate file format ----------------------------------------------

_MAGIC = "anquartics certificate v1"


def to_file_text(cert: Certificate) -> str:
    """Canonical text form; round-trips byte-identically through from_file_text."""
    t = cert.target.as_tuple()
    lines = [
        _MAGIC,
        f"n = {cert.n}",
        f"modulo_p1 = {'true' if cert.modulo_p1 else 'false'}",
        "target = " + " ".join(str(c) for c in t),
        f"squares = {len(cert.squares)}",
    ]
    for w, base in cert.squares:
        lines.append(f"{w} ; {base.to_text()}")
    return "\n".join(lines) + "\n"


def from_file_text(text: str) -> Certificate:
    lines = text.splitlines()
    if not lines or lines[0] != _MAGIC:
        raise ValueError("not a certificate file")
    fields = {}
    for line in lines[1:4]:
        key, _, value = line.partition(" = ")
        fields[key] = value
    n = int(fields["n"])
    modulo_p1 = {"true": True, "false": False}[fields["modulo_p1"]]
    target = PowerSumQuartic(*(Fraction(c) for c in fields["target"].split()))
    count_key, _, count_val = lines[4].partition(" = ")
    if count_key != "squares":
        raise ValueError("malformed certificate header")
    count = int(count_val)
    squares = []
    for line in lines[5 : 5 + count]:
        w_text, _, poly_text = line.partition(" ; ")
        squares.append((Fraction(w_text), SparsePoly.from_text(poly_text, n + 1)))
    if len(squares) != count:
        raise ValueError("truncated certificate")
    return Certificate(n=n, target=target, squares=tuple(squares), modulo_p1=modulo_p1)


def write_file(cert: Certificate, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(to_file_text(cert))


def read_file(path) -> Certificate:
    with open(path, "r", encoding="ascii") as fh:
        return from_file_text(fh.read())
