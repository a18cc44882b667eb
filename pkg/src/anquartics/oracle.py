"""Independent cross-checks: numeric sampling and literal group averaging.

Nothing here decides membership; the exact modules do.  These routines
only corroborate: floating-point minima over seeded random points on the
zero-sum sphere, a literal sum-over-all-permutations Reynolds operator for
small variable counts, and the numeric solution of the two-value system.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .exactpoly import InvariantQuartic, SparsePoly
from .halfdeg import OutOfRange


class TooManyVariables(ValueError):
    """Literal group sum is limited to 6 variables (720 permutations)."""


@dataclass(frozen=True)
class SampleReport:
    n: int
    form: InvariantQuartic
    samples: int
    min_value: float
    argmin_point: tuple
    seed: int


def sample_min(n: int, f: InvariantQuartic, samples: int, seed: int) -> SampleReport:
    """Minimum of a + b*p4 over seeded random points on the zero-sum sphere.

    Points are standard Gaussians projected onto sum(x) = 0 and normalized,
    i.e. the rotation-invariant distribution on the feasible sphere.
    Deterministic for a fixed seed.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    if samples < 1:
        raise ValueError("need at least one sample")
    rng = np.random.default_rng(seed)
    a = float(f.a)
    b = float(f.b)
    best = math.inf
    best_point = None
    batch = 100_000
    done = 0
    while done < samples:
        k = min(batch, samples - done)
        pts = rng.standard_normal((k, n + 1))
        pts -= pts.mean(axis=1, keepdims=True)
        pts /= np.linalg.norm(pts, axis=1, keepdims=True)
        values = a + b * (pts**4).sum(axis=1)
        i = int(values.argmin())
        if values[i] < best:
            best = float(values[i])
            best_point = tuple(float(x) for x in pts[i])
        done += k
    return SampleReport(
        n=n, form=f, samples=samples, min_value=best,
        argmin_point=best_point, seed=seed,
    )


def brute_reynolds(f: SparsePoly) -> SparsePoly:
    """Literal average of f over every permutation of its variables."""
    import itertools

    if f.nvars > 6:
        raise TooManyVariables(f"{f.nvars} variables; limit is 6")
    total = SparsePoly.zero(f.nvars)
    count = 0
    for perm in itertools.permutations(range(f.nvars)):
        total = total + f.apply_permutation(perm)
        count += 1
    return total * Fraction(1, count)


def numeric_two_value(n: int, l: int) -> tuple:
    """Floating-point (s, t) with l*t + (n+1-l)*s = 0, l*t^2 + (n+1-l)*s^2 = 1, t > 0."""
    if not 1 <= l <= n:
        raise OutOfRange(f"l must lie in [1, {n}], got {l}")
    m = n + 1
    t = math.sqrt((m - l) / (l * m))
    s = -l * t / (m - l)
    return s, t
