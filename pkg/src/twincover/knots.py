"""Presentation types for the knot families in scope.

Four parametric families cover every non pi-hyperbolic tunnel number one
knot: torus knots T(p, q), 2-bridge knots and links b(alpha, beta),
Montesinos knots (b; (a1, b1), ..., (ar, br)), and the satellite tunnel
number one knots, whose exteriors are glued from a two-component 2-bridge
link exterior and a torus knot exterior.  The trivial knot gets a dedicated
sentinel.

Constructors validate coprimality (and, for satellites, admissibility);
bringing parameters into canonical ranges is done by the explicit
``normalize_*`` operations so that degenerate presentations such as
``(0; (2,1), (3,-1), (5,-1))`` can be represented and then normalized.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import Union

from .errors import (
    BadTangleError,
    InvalidSatelliteError,
    NotCoprimeError,
    TrivialKnotError,
)


class Chirality(Enum):
    RIGHT = "right"
    LEFT = "left"

    def flipped(self) -> "Chirality":
        return Chirality.LEFT if self is Chirality.RIGHT else Chirality.RIGHT


@dataclass(frozen=True)
class TrivialKnot:
    """Sentinel for the unknot (and, as a 2-bridge type, b(1, 0))."""


TRIVIAL = TrivialKnot()


@dataclass(frozen=True)
class TorusKnot:
    """T(p, q); the sign of p*q encodes handedness, T(p,q) = T(q,p) = T(-p,-q)."""

    p: int
    q: int

    def __post_init__(self):
        if gcd(abs(self.p), abs(self.q)) != 1:
            raise NotCoprimeError(
                f"torus({self.p},{self.q}): parameters are not coprime "
                f"(gcd {gcd(abs(self.p), abs(self.q))})"
            )

    @property
    def is_trivial(self) -> bool:
        return min(abs(self.p), abs(self.q)) <= 1


@dataclass(frozen=True)
class TwoBridge:
    """2-bridge knot or link of type b(alpha, beta).

    A knot when alpha is odd, a two-component link when alpha is even;
    (1, 0) is reserved for the trivial knot.  beta is not forced into
    (0, alpha) at construction; see ``normalize_two_bridge``.
    """

    alpha: int
    beta: int

    def __post_init__(self):
        if self.alpha < 1:
            raise NotCoprimeError(f"twobridge({self.alpha},{self.beta}): alpha must be >= 1")
        if gcd(self.alpha, self.beta) != 1:
            raise NotCoprimeError(
                f"twobridge({self.alpha},{self.beta}): parameters are not coprime "
                f"(gcd {gcd(self.alpha, self.beta)})"
            )

    @property
    def components(self) -> int:
        return 2 if self.alpha % 2 == 0 else 1

    @property
    def is_normalized(self) -> bool:
        if self.alpha == 1:
            return self.beta == 0
        return 0 < self.beta < self.alpha


@dataclass(frozen=True)
class MontesinosKnot:
    """(b; (alpha_1, beta_1), ..., (alpha_r, beta_r)) with alpha_i >= 2."""

    b: int
    tangles: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "tangles", tuple(tuple(t) for t in self.tangles))
        for alpha, beta in self.tangles:
            if alpha < 2:
                raise BadTangleError(
                    f"tangle ({alpha},{beta}): alpha must be >= 2"
                )
            if gcd(alpha, beta) != 1:
                raise BadTangleError(
                    f"tangle ({alpha},{beta}): parameters are not coprime "
                    f"(gcd {gcd(alpha, beta)})"
                )

    @property
    def is_normalized(self) -> bool:
        return all(0 < b < a for a, b in self.tangles) and (
            self.tangles == tuple(sorted(self.tangles))
        )


@dataclass(frozen=True)
class SatelliteTn1:
    """Satellite tunnel number one knot.

    The exterior is glued from the exterior of a two-component 2-bridge
    link (even alpha, neither trivial nor the Hopf link, so alpha >= 4)
    and the exterior of a nontrivial torus knot.  Validity is enforced
    here so downstream case analysis can rely on it.
    """

    pattern_link: TwoBridge
    companion: TorusKnot

    def __post_init__(self):
        p = self.pattern_link
        if p.alpha % 2 != 0:
            raise InvalidSatelliteError(
                f"pattern twobridge({p.alpha},{p.beta}) is a knot, not a 2-component link"
            )
        if p.alpha == 2:
            raise InvalidSatelliteError("pattern must not be the Hopf link")
        if not p.is_normalized:
            raise InvalidSatelliteError(
                f"pattern twobridge({p.alpha},{p.beta}) must be normalized (0 < beta < alpha)"
            )
        if self.companion.is_trivial:
            raise InvalidSatelliteError("companion torus knot must be nontrivial")


KnotPresentation = Union[TrivialKnot, TorusKnot, TwoBridge, MontesinosKnot, SatelliteTn1]


def normalize_torus(k: TorusKnot) -> tuple[TorusKnot | TrivialKnot, Chirality]:
    """Bring T(p, q) to 2 <= p < q with an explicit chirality flag.

    Right-handed means both parameters of one sign (positive product).
    Returns the trivial sentinel when a parameter is 0 or +-1.
    """
    if k.is_trivial:
        return TRIVIAL, Chirality.RIGHT
    chirality = Chirality.RIGHT if k.p * k.q > 0 else Chirality.LEFT
    p, q = sorted((abs(k.p), abs(k.q)))
    return TorusKnot(p, q), chirality


def canonical_torus(k: TorusKnot) -> TorusKnot | TrivialKnot:
    """Canonical signed form: 2 <= p < |q|, handedness carried by sign(q)."""
    norm, chirality = normalize_torus(k)
    if isinstance(norm, TrivialKnot):
        return norm
    q = norm.q if chirality is Chirality.RIGHT else -norm.q
    return TorusKnot(norm.p, q)


def bridge_index_torus(k: TorusKnot) -> int:
    """Bridge index of a nontrivial torus knot: the smaller parameter."""
    norm, _ = normalize_torus(k)
    if isinstance(norm, TrivialKnot):
        raise TrivialKnotError(f"torus({k.p},{k.q}) is trivial; bridge index 1 is out of scope")
    return norm.p


def euler_montesinos(k: MontesinosKnot) -> Fraction:
    """Euler number b - sum(beta_i / alpha_i); a presentation invariant."""
    return Fraction(k.b) - sum(Fraction(b, a) for a, b in k.tangles)


def normalize_montesinos(k: MontesinosKnot) -> MontesinosKnot:
    """Reduce every beta into (0, alpha), absorbing the shifts into b.

    Replacing beta by beta - m*alpha changes sum(beta_i/alpha_i) by -m, so b
    must absorb -m as well to keep the euler number unchanged.  Tangles are
    sorted afterwards; normalization is idempotent.
    """
    shift = 0
    tangles = []
    for alpha, beta in k.tangles:
        m, r = divmod(beta, alpha)
        shift += m
        tangles.append((alpha, r))
    result = MontesinosKnot(k.b - shift, tuple(sorted(tangles)))
    assert euler_montesinos(result) == euler_montesinos(k)
    return result


def normalize_two_bridge(l: TwoBridge) -> TwoBridge:
    """Reduce beta mod alpha into (0, alpha); b(1, *) collapses to b(1, 0)."""
    if l.alpha == 1:
        return TwoBridge(1, 0)
    return TwoBridge(l.alpha, l.beta % l.alpha)


def mirror(k: KnotPresentation) -> KnotPresentation:
    """Mirror image of a presentation.

    Torus knots negate one parameter; Montesinos presentations negate b and
    every beta and renormalize; 2-bridge types use beta -> alpha - beta;
    satellites mirror both pieces.
    """
    if isinstance(k, TrivialKnot):
        return k
    if isinstance(k, TorusKnot):
        return TorusKnot(k.p, -k.q)
    if isinstance(k, TwoBridge):
        if k.alpha == 1:
            return TwoBridge(1, 0)
        return normalize_two_bridge(TwoBridge(k.alpha, k.alpha - k.beta))
    if isinstance(k, MontesinosKnot):
        flipped = MontesinosKnot(-k.b, tuple((a, -b) for a, b in k.tangles))
        return normalize_montesinos(flipped)
    if isinstance(k, SatelliteTn1):
        return SatelliteTn1(mirror(k.pattern_link), mirror(k.companion))
    raise TypeError(f"not a knot presentation: {k!r}")


def two_bridge_equivalent(a: TwoBridge, b: TwoBridge) -> bool:
    """Whether b(alpha, beta) and b(alpha', beta') are the same 2-bridge type.

    Classification of unoriented 2-bridge knots and links up to
    orientation-preserving homeomorphism: equal alpha and
    beta' congruent to beta or to its inverse mod alpha.  Mirrors
    (beta -> alpha - beta) are not identified.
    """
    a = normalize_two_bridge(a)
    b = normalize_two_bridge(b)
    if a.alpha != b.alpha:
        return False
    if a.beta == b.beta:
        return True
    return (a.beta * b.beta) % a.alpha == 1 % a.alpha


def torus_knots_equal(a: TorusKnot, b: TorusKnot) -> bool:
    """Equality of torus knots up to parameter order, chirality-sensitive."""
    return canonical_torus(a) == canonical_torus(b)
