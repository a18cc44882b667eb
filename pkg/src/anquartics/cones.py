"""Geometry of the two 2D cones of invariant quartics a*p2^2 + b*p4.

The nonnegativity cone is cut out by the two endpoint inequalities
a + b*alpha >= 0 and a + b*beta >= 0; the SOS cone is the simplicial cone
spanned by S1 = (-1/(n+1), 1) and S2 = (1-n+n^2, -n(n+1)).  Classification,
witnesses for non-members, generator coordinates for members, cone
equality, and the global-nonnegativity test all live here.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import halfdeg
from .exactpoly import InvariantQuartic
from .halfdeg import TwoValuePoint, two_value_point


class UnsupportedN(ValueError):
    """n below 3 is outside the scope of this classifier."""


class Position(str, enum.Enum):
    OUTSIDE = "Outside"
    BOUNDARY = "Boundary"
    INTERIOR = "Interior"


@dataclass(frozen=True)
class PsdRange:
    n: int
    alpha: Fraction
    beta: Fraction


@dataclass(frozen=True)
class ExtremalRays:
    F: InvariantQuartic
    G: InvariantQuartic


@dataclass(frozen=True)
class SosGenerators:
    S1: InvariantQuartic
    S2: InvariantQuartic


@dataclass(frozen=True)
class Membership:
    psd: Position
    sos: Position
    witness: Optional[TwoValuePoint]
    sos_coords: Optional[tuple]


def _check_n(n: int):
    if n < 3:
        raise UnsupportedN(f"n must be >= 3, got {n}")


def psd_range(n: int) -> PsdRange:
    _check_n(n)
    return PsdRange(n, halfdeg.alpha(n), halfdeg.beta(n))


def extremal_rays(n: int) -> ExtremalRays:
    """F = -p2^2 + (1/alpha)*p4 and G = p2^2 - (1/beta)*p4."""
    r = psd_range(n)
    return ExtremalRays(
        F=InvariantQuartic(Fraction(-1), 1 / r.alpha),
        G=InvariantQuartic(Fraction(1), -1 / r.beta),
    )


def psd_position(n: int, f: InvariantQuartic):
    """Position of f relative to the nonnegativity cone, with witness.

    Returns (position, witness); the witness is a two-value point at which
    f evaluates strictly negative, present exactly when f is Outside.
    """
    r = psd_range(n)
    e_lo = f.a + f.b * r.alpha
    e_hi = f.a + f.b * r.beta
    if e_lo > 0 and e_hi > 0:
        return Position.INTERIOR, None
    if e_lo >= 0 and e_hi >= 0:
        return Position.BOUNDARY, None
    extremum = halfdeg.p4_min_int(n) if f.b >= 0 else halfdeg.p4_max_int(n)
    l_star = min(extremum.argmins)
    return Position.OUTSIDE, two_value_point(n, l_star)


def sos_generators(n: int) -> SosGenerators:
    _check_n(n)
    return SosGenerators(
        S1=InvariantQuartic(Fraction(-1, n + 1), Fraction(1)),
        S2=InvariantQuartic(Fraction(1 - n + n * n), Fraction(-n * (n + 1))),
    )


def sos_solve_raw(n: int, f: InvariantQuartic) -> tuple:
    """Unique (a', b') with f = a'*S1 + b'*S2, sign-unconstrained.

    The 2x2 system has determinant -(n-1)^2, never zero for n >= 3.
    """
    _check_n(n)
    det = Fraction(-((n - 1) ** 2))
    a_prime = (Fraction(-n * (n + 1)) * f.a - Fraction(n * n - n + 1) * f.b) / det
    b_prime = (-f.a - f.b / (n + 1)) / det
    return a_prime, b_prime


def sos_coordinates(n: int, f: InvariantQuartic) -> Optional[tuple]:
    """Generator coordinates of f if it lies in the SOS cone, else None."""
    a_prime, b_prime = sos_solve_raw(n, f)
    if a_prime >= 0 and b_prime >= 0:
        return a_prime, b_prime
    return None


def classify(n: int, f: InvariantQuartic) -> Membership:
    """Full membership record against both cones."""
    psd, witness = psd_position(n, f)
    a_prime, b_prime = sos_solve_raw(n, f)
    if a_prime < 0 or b_prime < 0:
        sos = Position.OUTSIDE
        coords = None
    elif a_prime > 0 and b_prime > 0:
        sos = Position.INTERIOR
        coords = (a_prime, b_prime)
    else:
        sos = Position.BOUNDARY
        coords = (a_prime, b_prime)
    return Membership(psd=psd, sos=sos, witness=witness, sos_coords=coords)


def cones_equal(n: int) -> bool:
    """True iff both extremal psd rays admit nonnegative SOS coordinates."""
    rays = extremal_rays(n)
    return (
        sos_coordinates(n, rays.F) is not None
        and sos_coordinates(n, rays.G) is not None
    )


def gap_witness(n: int) -> Optional[InvariantQuartic]:
    """A form nonnegative on the hyperplane but not SOS; None when n is odd.

    For even n: the angular midpoint (normalized to b = 1) between the
    F-ray (-alpha, 1) and the S1-ray (-1/(n+1), 1).
    """
    _check_n(n)
    if n % 2 == 1:
        return None
    a = -(halfdeg.alpha(n) + Fraction(1, n + 1)) / 2
    return InvariantQuartic(a, Fraction(1))


def global_psd(n: int, f: InvariantQuartic) -> bool:
    """Nonnegativity of a*p2^2 + b*p4 on all of R^(n+1), not just the hyperplane.

    On the unit p2-sphere, p4 ranges over [1/(n+1), 1]; nonnegativity is
    equivalent to both endpoint values being nonnegative.
    """
    _check_n(n)
    return f.a + f.b >= 0 and f.a + f.b / (n + 1) >= 0
