"""Exact sparse multivariate polynomial arithmetic over the rationals.

Everything in this module is exact: coefficients are `fractions.Fraction`,
monomials are exponent tuples, and no operation ever rounds.  The module
also provides the power-sum quartic basis (p1^4, p2*p1^2, p3*p1, p2^2, p4),
the two ring maps used throughout (substitution y_i -> x1 - x_{i+1} and
reduction modulo p1 = x1 + ... + x_m), and the projection of a symmetric
quartic onto its (p2^2, p4) class.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence


class NotSymmetric(ValueError):
    """The polynomial is not invariant under variable permutations."""


class NotHomogeneousQuartic(ValueError):
    """The polynomial is not homogeneous of degree 4."""


class DegenerateBasis(ValueError):
    """The five power-sum products are linearly dependent below 5 variables."""


class DimensionMismatch(ValueError):
    """Point or polynomial has the wrong number of variables."""


Rational = Fraction
Monomial = tuple  # exponent tuple, one entry per variable


def _grlex_key(m):
    # graded lex: higher total degree first, then lexicographically larger
    # exponent vector first
    return (-sum(m), tuple(-e for e in m))


class SparsePoly:
    """Sparse polynomial: map from exponent tuple to nonzero Fraction.

    Instances are treated as immutable; all arithmetic returns new objects.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Monomial, Fraction] | None = None):
        if nvars < 1:
            raise ValueError("nvars must be positive")
        clean = {}
        if terms:
            for m, c in terms.items():
                if len(m) != nvars:
                    raise DimensionMismatch(
                        f"monomial {m} has {len(m)} exponents, expected {nvars}"
                    )
                c = Fraction(c)
                if c != 0:
                    clean[tuple(m)] = c
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("SparsePoly is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(nvars: int) -> "SparsePoly":
        return SparsePoly(nvars)

    @staticmethod
    def constant(c, nvars: int) -> "SparsePoly":
        return SparsePoly(nvars, {(0,) * nvars: Fraction(c)})

    @staticmethod
    def variable(i: int, nvars: int) -> "SparsePoly":
        """The monomial x_{i+1} (zero-based index i)."""
        e = [0] * nvars
        e[i] = 1
        return SparsePoly(nvars, {tuple(e): Fraction(1)})

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    # -- arithmetic --------------------------------------------------------

    def _check_compat(self, other: "SparsePoly"):
        if self.nvars != other.nvars:
            raise DimensionMismatch(
                f"mixed variable counts {self.nvars} and {other.nvars}"
            )

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SparsePoly.constant(other, self.nvars)
        self._check_compat(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return SparsePoly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return SparsePoly(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SparsePoly.constant(other, self.nvars)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if c == 0:
                return SparsePoly.zero(self.nvars)
            return SparsePoly(self.nvars, {m: c * v for m, v in self.terms.items()})
        self._check_compat(other)
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return SparsePoly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = SparsePoly.constant(1, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def apply_permutation(self, perm: Sequence[int]) -> "SparsePoly":
        """Permute variables: x_i -> x_{perm[i]} (zero-based)."""
        if len(perm) != self.nvars:
            raise DimensionMismatch("permutation length mismatch")
        out: dict = {}
        for m, c in self.terms.items():
            e = [0] * self.nvars
            for i, ei in enumerate(m):
                e[perm[i]] = ei
            key = tuple(e)
            out[key] = out.get(key, 0) + c
        return SparsePoly(self.nvars, out)

    def is_symmetric(self) -> bool:
        """True iff invariant under all adjacent transpositions."""
        for i in range(self.nvars - 1):
            perm = list(range(self.nvars))
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
            if self.apply_permutation(perm) != self:
                return False
        return True

    # -- serialization -----------------------------------------------------

    def sorted_terms(self):
        """Terms in graded-lex order (canonical for serialization)."""
        return sorted(self.terms.items(), key=lambda kv: _grlex_key(kv[0]))

    def to_text(self) -> str:
        """Canonical text form, e.g. ``2 * x1^2*x2^1 + -1/3 * x3^4``."""
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            vars_txt = "*".join(
                f"x{i + 1}^{e}" for i, e in enumerate(m) if e > 0
            )
            parts.append(f"{c} * {vars_txt}" if vars_txt else str(c))
        return " + ".join(parts)

    @staticmethod
    def from_text(text: str, nvars: int) -> "SparsePoly":
        """Parse the canonical text form back into a polynomial."""
        text = text.strip()
        if text == "0":
            return SparsePoly.zero(nvars)
        terms: dict = {}
        for part in text.split(" + "):
            pieces = part.split(" * ")
            coeff = Fraction(pieces[0])
            e = [0] * nvars
            if len(pieces) == 2:
                for factor in pieces[1].split("*"):
                    var, exp = factor.split("^")
                    idx = int(var[1:]) - 1
                    if not 0 <= idx < nvars:
                        raise DimensionMismatch(f"variable {var} out of range")
                    e[idx] += int(exp)
            key = tuple(e)
            terms[key] = terms.get(key, 0) + coeff
        return SparsePoly(nvars, terms)

    def __repr__(self):
        return f"SparsePoly({self.nvars}, {self.to_text()!r})"


def evaluate(f: SparsePoly, point: Sequence) -> Fraction:
    """Exact evaluation of f at a rational point."""
    if len(point) != f.nvars:
        raise DimensionMismatch(
            f"point has {len(point)} coordinates, expected {f.nvars}"
        )
    pt = [Fraction(x) for x in point]
    total = Fraction(0)
    for m, c in f.terms.items():
        v = c
        for x, e in zip(pt, m):
            if e:
                v *= x**e
        total += v
    return total


def power_sum(k: int, nvars: int) -> SparsePoly:
    """p_k = x1^k + ... + x_nvars^k."""
    terms = {}
    for i in range(nvars):
        e = [0] * nvars
        e[i] = k
        terms[tuple(e)] = Fraction(1)
    return SparsePoly(nvars, terms)


@dataclass(frozen=True)
class PowerSumQuartic:
    """Coefficients of a symmetric quartic on (p1^4, p2*p1^2, p3*p1, p2^2, p4)."""

    c1111: Fraction
    c211: Fraction
    c31: Fraction
    c22: Fraction
    c4: Fraction

    def __post_init__(self):
        for name in ("c1111", "c211", "c31", "c22", "c4"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    def as_tuple(self):
        return (self.c1111, self.c211, self.c31, self.c22, self.c4)


@dataclass(frozen=True)
class InvariantQuartic:
    """The class a*p2^2 + b*p4 modulo the ideal (p1)."""

    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))


def expand(v: PowerSumQuartic, nvars: int) -> SparsePoly:
    """Expand a power-sum coefficient vector into a full quartic polynomial."""
    if nvars < 2:
        raise ValueError("nvars must be at least 2")
    p1 = power_sum(1, nvars)
    p2 = power_sum(2, nvars)
    p3 = power_sum(3, nvars)
    p4 = power_sum(4, nvars)
    return (
        v.c1111 * (p1**4)
        + v.c211 * (p2 * p1 * p1)
        + v.c31 * (p3 * p1)
        + v.c22 * (p2 * p2)
        + v.c4 * p4
    )


# Five evaluation points (padded with zeros to any nvars >= 5) at which the
# five power-sum products are linearly independent; nonsingularity is
# asserted when the inverse is first built.
_BASIS_POINTS = (
    (1, 0, 0, 0, 0),
    (1, 1, 0, 0, 0),
    (1, -1, 0, 0, 0),
    (1, 1, 1, 0, 0),
    (1, 1, 1, 1, 0),
)

_basis_matrix_inverse_cache: list | None = None


def _solve_linear(a: list, b: list) -> list:
    """Solve a square rational linear system by Gaussian elimination."""
    n = len(a)
    m = [row[:] + [bv] for row, bv in zip(a, b)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            raise ValueError("singular system")
        m[col], m[pivot] = m[pivot], m[col]
        inv = Fraction(1) / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                factor = m[r][col]
                m[r] = [x - factor * y for x, y in zip(m[r], m[col])]
    return [m[r][n] for r in range(n)]


def _basis_row(point) -> list:
    p = [Fraction(0)] * 5
    p1 = sum(Fraction(x) for x in point)
    p2 = sum(Fraction(x) ** 2 for x in point)
    p3 = sum(Fraction(x) ** 3 for x in point)
    p4 = sum(Fraction(x) ** 4 for x in point)
    return [p1**4, p2 * p1**2, p3 * p1, p2**2, p4]


def to_power_sum(f: SparsePoly) -> PowerSumQuartic:
    """Invert :func:`expand` on a symmetric homogeneous quartic.

    Requires at least 5 variables: below that the five power-sum products
    are linearly dependent and the coefficient vector is not unique.
    """
    if f.nvars < 5:
        raise DegenerateBasis(
            f"power-sum quartic basis needs >= 5 variables, got {f.nvars}"
        )
    if f.is_zero():
        return PowerSumQuartic(0, 0, 0, 0, 0)
    degrees = {sum(m) for m in f.terms}
    if degrees != {4}:
        raise NotHomogeneousQuartic(f"term degrees {sorted(degrees)}, expected all 4")
    if not f.is_symmetric():
        raise NotSymmetric("polynomial changes under a transposition")
    matrix = [_basis_row(pt) for pt in _BASIS_POINTS]
    values = [
        evaluate(f, list(pt) + [0] * (f.nvars - 5)) for pt in _BASIS_POINTS
    ]
    c = _solve_linear(matrix, values)
    return PowerSumQuartic(*c)


def reduce_mod_p1(f: SparsePoly) -> SparsePoly:
    """Image of f under x_m -> -(x_1 + ... + x_{m-1}); kernel is the ideal (p1)."""
    m = f.nvars
    if m < 2:
        raise DimensionMismatch("need at least 2 variables to eliminate one")
    n = m - 1
    s = -power_sum(1, n)
    max_e = max((mon[-1] for mon in f.terms), default=0)
    s_pows = [SparsePoly.constant(1, n)]
    for _ in range(max_e):
        s_pows.append(s_pows[-1] * s)
    out = SparsePoly.zero(n)
    for mon, c in f.terms.items():
        head = SparsePoly(n, {mon[:-1]: c})
        out = out + head * s_pows[mon[-1]]
    return out


def y_to_x(f: SparsePoly) -> SparsePoly:
    """Substitute y_i := x_1 - x_{i+1}, mapping n variables into n+1."""
    n = f.nvars
    m = n + 1
    x1 = SparsePoly.variable(0, m)
    subs = [x1 - SparsePoly.variable(i + 1, m) for i in range(n)]
    out = SparsePoly.zero(m)
    for mon, c in f.terms.items():
        term = SparsePoly.constant(c, m)
        for i, e in enumerate(mon):
            if e:
                term = term * subs[i] ** e
        out = out + term
    return out


def invariant_part(v: PowerSumQuartic) -> InvariantQuartic:
    """Class of v modulo (p1): only the p2^2 and p4 coefficients survive."""
    return InvariantQuartic(v.c22, v.c4)
