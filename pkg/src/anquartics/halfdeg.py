"""Exact extrema of p4 on the zero-sum sphere via two-value points.

Degree-4 symmetric optimization on {p1 = 0, p2 = 1} reduces to points with
at most two distinct coordinates.  We use the integer rescaling with l
coordinates equal to n+1-l and the rest equal to -l, so every witness and
every extremal value stays an exact rational.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class OutOfRange(ValueError):
    """l outside the admissible range [1, n]."""


@dataclass(frozen=True)
class TwoValuePoint:
    """Integer point on the zero-sum hyperplane with two distinct values."""

    n: int
    l: int
    coordinates: tuple

    def p2(self) -> int:
        return sum(c * c for c in self.coordinates)

    def p4(self) -> int:
        return sum(c**4 for c in self.coordinates)


@dataclass(frozen=True)
class ExtremumResult:
    value: Fraction
    argmins: frozenset


def _check_l(n: int, l: int):
    if not 1 <= l <= n:
        raise OutOfRange(f"l must lie in [1, {n}], got {l}")


def phi(n: int, l: int) -> Fraction:
    """Value of p4 at the normalized two-value point (p2 = 1)."""
    if n < 2:
        raise OutOfRange(f"n must be >= 2, got {n}")
    _check_l(n, l)
    m = n + 1
    return Fraction(m * m - 3 * l * m + 3 * l * l, m * (m - l) * l)


def two_value_point(n: int, l: int) -> TwoValuePoint:
    """The point with l coordinates n+1-l and n+1-l coordinates -l."""
    if n < 2:
        raise OutOfRange(f"n must be >= 2, got {n}")
    _check_l(n, l)
    coords = (n + 1 - l,) * l + (-l,) * (n + 1 - l)
    return TwoValuePoint(n, l, coords)


def _extremum(n: int, maximize: bool) -> ExtremumResult:
    if n < 2:
        raise OutOfRange(f"n must be >= 2, got {n}")
    best = None
    args: set = set()
    for l in range(1, n + 1):
        v = phi(n, l)
        if best is None or (v > best if maximize else v < best):
            best, args = v, {l}
        elif v == best:
            args.add(l)
    return ExtremumResult(best, frozenset(args))


def p4_min_int(n: int) -> ExtremumResult:
    """Exhaustive integer minimum of phi(n, .) over l in [1, n]."""
    return _extremum(n, maximize=False)


def p4_max_int(n: int) -> ExtremumResult:
    """Exhaustive integer maximum of phi(n, .) over l in [1, n]."""
    return _extremum(n, maximize=True)


def alpha(n: int) -> Fraction:
    """Closed-form minimum of p4 on the feasible set (integer two-value points)."""
    if n < 2:
        raise OutOfRange(f"n must be >= 2, got {n}")
    if n % 2 == 1:
        return Fraction(1, n + 1)
    return Fraction(4 + 2 * n + n * n, 2 * n + 3 * n * n + n**3)


def beta(n: int) -> Fraction:
    """Closed-form maximum of p4 on the feasible set."""
    if n < 2:
        raise OutOfRange(f"n must be >= 2, got {n}")
    return Fraction(1 - n + n * n, n + n * n)
