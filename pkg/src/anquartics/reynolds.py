"""Symmetrization over the full symmetric group on coordinates.

The group average is computed per monomial by orbit counting: the image of
a monomial is its monomial-symmetric orbit sum divided by the orbit size,
so the cost scales with the orbits actually present, not with the group
order.  Also provides the closed forms for the three symmetrized quadratic
products that generate the invariant-SOS description, and an exact check
of those closed forms against the operator itself.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .exactpoly import PowerSumQuartic, SparsePoly, expand, power_sum


@dataclass(frozen=True)
class OrbitStats:
    """Orbit data of a monomial under variable permutation."""

    sorted_exponents: tuple
    orbit_size: int


def orbit_stats(monomial, nvars: int) -> OrbitStats:
    """Sorted exponent pattern and number of distinct rearrangements."""
    counts = Counter(monomial)
    size = math.factorial(nvars)
    for mult in counts.values():
        size //= math.factorial(mult)
    return OrbitStats(tuple(sorted(monomial, reverse=True)), size)


def _orbit_monomials(monomial, nvars: int):
    """Yield every distinct rearrangement of the exponent tuple."""
    groups = sorted(Counter(e for e in monomial if e).items())

    def place(groups_left, free_positions):
        if not groups_left:
            yield ()
            return
        (value, count), rest = groups_left[0], groups_left[1:]
        for chosen in itertools.combinations(free_positions, count):
            chosen_set = set(chosen)
            remaining = tuple(p for p in free_positions if p not in chosen_set)
            for tail in place(rest, remaining):
                yield tuple((p, value) for p in chosen) + tail

    for assignment in place(groups, tuple(range(nvars))):
        e = [0] * nvars
        for pos, value in assignment:
            e[pos] = value
        yield tuple(e)


def reynolds(f: SparsePoly) -> SparsePoly:
    """Average of f over all permutations of its variables."""
    nvars = f.nvars
    out: dict = {}
    for mon, c in f.terms.items():
        stats = orbit_stats(mon, nvars)
        share = c / stats.orbit_size
        for image in _orbit_monomials(mon, nvars):
            s = out.get(image, 0) + share
            if s:
                out[image] = s
            else:
                out.pop(image, None)
    return SparsePoly(nvars, out)


def source_polynomials(n: int) -> tuple:
    """The three quadratic products whose symmetrizations span the SOS cone.

    Returns (p2^2, (x1^2-x2^2)^2, ((x1-x2)(x3-x4))^2) in n+1 variables.
    """
    if n < 3:
        raise ValueError("need n >= 3 (at least 4 variables)")
    m = n + 1
    p2 = power_sum(2, m)
    x = [SparsePoly.variable(i, m) for i in range(4)]
    q1 = p2 * p2
    q2 = (x[0] * x[0] - x[1] * x[1]) ** 2
    q3 = ((x[0] - x[1]) * (x[2] - x[3])) ** 2
    return q1, q2, q3


def lemma_sym_closed_form(n: int) -> tuple:
    """Closed-form symmetrizations of the three source polynomials.

    Implemented for n >= 3; at n = 3 validity is settled computationally by
    :func:`verify_lemma_sym`, never assumed.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    first = PowerSumQuartic(0, 0, 0, 1, 0)
    second = PowerSumQuartic(
        0, 0, 0, Fraction(-2, (n + 1) * n), Fraction(2, n)
    )
    denom = (n + 1) * n * (n - 1) * (n - 2)
    third = PowerSumQuartic(
        Fraction(4, denom),
        Fraction(-8 * (n + 1), denom),
        Fraction(16 * n, denom),
        Fraction(4 * (n * n - n + 1), denom),
        Fraction(-4 * n * (n + 1), denom),
    )
    return first, second, third


def verify_lemma_sym(n: int) -> bool:
    """Exact check: reynolds(source_i) == expand(closed_form_i) for all three.

    Comparison happens on fully expanded polynomials so it is well defined
    even at n = 3, where the five power-sum products are dependent.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    sources = source_polynomials(n)
    closed = lemma_sym_closed_form(n)
    return all(
        reynolds(src) == expand(cf, n + 1) for src, cf in zip(sources, closed)
    )
