"""Exact integer and rational arithmetic used throughout the package.

Rational numbers are ``fractions.Fraction`` (always stored reduced, positive
denominator), re-exported here as ``Rational``.  On top of that this module
provides the extended Euclidean algorithm, a canonical solver for
``y*p + x*q = -1``, and the parity-constrained continued fraction expansions
that describe how a 2-bridge link of even type lifts to the double branched
cover of one of its components.

A fraction beta/(2*alpha) with beta odd always admits an expansion

    beta/(2*alpha) = 1 / (2*a1 + 1 / (a2 + ... + 1 / (2*a_n)))

with n odd: the coefficients at odd positions are doubled.  Re-reading the
same coefficients with the doubling moved to the even positions evaluates to
beta/alpha (mod 1), which is the type of the lifted link.  Coefficients may
be negative; see ``constrained_cf`` for the expansion strategy.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd

from .errors import BadInputError, DegenerateCfError, NotCoprimeError

Rational = Fraction


def egcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended gcd: return (g, x, y) with a*x + b*y = g = gcd(a, b) > 0.

    Total on every pair except (0, 0).
    """
    if a == 0 and b == 0:
        raise BadInputError("egcd(0, 0) is undefined")
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def solve_bezout_neg1(p: int, q: int) -> tuple[int, int]:
    """Solve y*p + x*q = -1 for coprime p, q, returning (x, y).

    The solution set is {(x + k*p, y - k*q)}; the representative with
    0 <= x < p is returned so that downstream cover computations are
    deterministic.
    """
    g, a, b = egcd(p, q)
    if g != 1:
        raise NotCoprimeError(f"({p}, {q}) are not coprime (gcd {g})")
    # p*a + q*b = 1, so y0 = -a, x0 = -b solve y*p + x*q = -1.
    x0, y0 = -b, -a
    x = x0 % p if p != 0 else x0
    y = y0 - ((x - x0) // p) * q if p != 0 else y0
    assert y * p + x * q == -1
    return x, y


class DoubledForm(Enum):
    """Which positions of a continued fraction carry doubled coefficients."""

    ODD = "odd"
    EVEN = "even"


@dataclass(frozen=True)
class CfExpansion:
    """Coefficients (a1, ..., an) of a parity-constrained continued fraction.

    Evaluating uses 2*a_i at the doubled positions (1-indexed) and a_i
    elsewhere.  The length is always odd and no coefficient is zero.
    """

    coefficients: tuple[int, ...]
    doubled: DoubledForm = DoubledForm.ODD

    def __post_init__(self):
        if len(self.coefficients) % 2 == 0:
            raise BadInputError("continued fraction must have odd length")
        if any(c == 0 for c in self.coefficients):
            raise BadInputError("continued fraction coefficients must be nonzero")

    def with_doubling(self, doubled: DoubledForm) -> "CfExpansion":
        return CfExpansion(self.coefficients, doubled)

    def odd_position_sum(self) -> int:
        """a1 + a3 + ... + an; its parity is the linking number parity."""
        return sum(self.coefficients[0::2])


def _floor(f: Fraction) -> int:
    return f.numerator // f.denominator


def _nearest_even(z: Fraction) -> int:
    """Nonzero even integer nearest to z, ties broken toward smaller |c|."""
    lo = 2 * _floor(z / 2)
    hi = lo + 2
    dlo, dhi = z - lo, hi - z
    if dlo < dhi:
        c = lo
    elif dhi < dlo:
        c = hi
    else:
        c = lo if abs(lo) < abs(hi) else hi
    if c == 0:
        c = hi if hi != 0 else lo
    return c


def _nearest_int(z: Fraction) -> int:
    """Integer nearest to z, ties broken toward smaller |c|."""
    lo = _floor(z)
    hi = lo + 1
    dlo, dhi = z - lo, hi - z
    if dlo < dhi:
        return lo
    if dhi < dlo:
        return hi
    return lo if z > 0 else hi


def constrained_cf(frac: Fraction) -> CfExpansion:
    """Expand beta/(2*alpha) in the odd-position-doubled form.

    Precondition: 0 < frac < 1 with even denominator (the numerator is then
    odd automatically since the fraction is reduced).

    The expansion is greedy: at doubled positions take the nonzero even
    integer nearest to the reciprocal of the remaining value, elsewhere the
    nearest integer, ties toward the smaller absolute value.  The parity
    pattern makes the bookkeeping automatic: at doubled positions the state
    is odd/even so the remainder is even/odd and termination (zero
    remainder) can only happen there, with the final even coefficient
    landing at an odd position.  Denominators strictly decrease, so the
    expansion terminates; the round trip through ``eval_cf`` is exact.
    """
    if not isinstance(frac, Fraction):
        frac = Fraction(frac)
    if not 0 < frac < 1:
        raise BadInputError(f"{frac} is not in (0, 1)")
    if frac.denominator % 2 != 0:
        raise BadInputError(f"{frac} does not have an even denominator")
    coefficients = []
    t = frac
    doubled = True
    while True:
        z = 1 / t
        c = _nearest_even(z) if doubled else _nearest_int(z)
        assert c != 0
        coefficients.append(c)
        r = z - c
        if doubled and r == 0:
            break
        assert r != 0  # undoubled remainders have odd numerator
        t = r
        doubled = not doubled
    stored = tuple(
        c // 2 if i % 2 == 0 else c for i, c in enumerate(coefficients)
    )
    return CfExpansion(stored, DoubledForm.ODD)


def eval_cf(cf: CfExpansion) -> Fraction:
    """Exact value of the nested fraction 1/(c1 + 1/(c2 + ... + 1/cn)).

    c_i = 2*a_i at the doubled positions, a_i elsewhere.
    """
    n = len(cf.coefficients)
    double_odd = cf.doubled is DoubledForm.ODD
    w = None
    for i in range(n, 0, -1):
        a = cf.coefficients[i - 1]
        c = 2 * a if (i % 2 == 1) == double_odd else a
        if w is None:
            w = Fraction(c)
        else:
            if w == 0:
                raise DegenerateCfError(f"zero intermediate denominator in {cf}")
            w = c + 1 / w
    if w == 0:
        raise DegenerateCfError(f"zero final denominator in {cf}")
    return 1 / w


def format_rational(q: Fraction) -> str:
    """Render a rational as "num/den" (exact, never floats)."""
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    num, _, den = text.partition("/")
    return Fraction(int(num), int(den)) if den else Fraction(int(num))


def is_coprime(a: int, b: int) -> bool:
    return gcd(a, b) == 1
