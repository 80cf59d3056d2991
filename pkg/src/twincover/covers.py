"""Double-branched-cover invariants for the four knot families.

Torus knots and Montesinos knots have Seifert fibered double branched
covers over S^2; 2-bridge links of even type lift to smaller 2-bridge types
in the cover of one component; satellite tunnel number one knots have
toroidal covers described by a small labeled JSJ graph.

The torus knot cover of a right-handed T(p, q), p < q coprime, with
y*p + x*q = -1, is, by branched-cover computations for Seifert fibered
spaces:

  * p, q both odd:  fibers (2, d), (p, k*x), (q, k*y) with d any odd number
    and p*q*d = 1 - 2*k; euler number 1/(2*p*q);
  * p = 2*k even:   fibers (k, x), (q, y), (q, y); euler number 1/(k*q);
  * q = 2*k even:   fibers (p, x), (p, x), (k, y); euler number 1/(k*p).

The freedom in d and in the Bezout representative disappears after
normalization (tested exhaustively).  Mirrors change the orientation of the
cover, i.e. the sign of every invariant.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

from .arith import CfExpansion, constrained_cf, solve_bezout_neg1
from .errors import BadInputError, InvalidSatelliteError, TooFewTanglesError, TrivialKnotError
from .knots import (
    Chirality,
    MontesinosKnot,
    SatelliteTn1,
    TorusKnot,
    TrivialKnot,
    TwoBridge,
    canonical_torus,
    euler_montesinos,
    normalize_montesinos,
    normalize_torus,
    normalize_two_bridge,
)
from .seifert import SfsInvariants, normalize_sfs


@dataclass(frozen=True)
class CoverDerivation:
    """Bezout data behind a torus knot cover: y*p + x*q = -1.

    In the odd-odd case d is the chosen odd parameter and p*q*d = 1 - 2*k;
    in the even cases d is None and k is the halved even parameter.
    """

    x: int
    y: int
    k: int
    d: int | None = None


@dataclass(frozen=True)
class LiftResult:
    """Lift of a 2-bridge link of type (2*alpha, beta) to the double cover
    of one component: a 2-bridge type (alpha, beta mod alpha)."""

    lifted: TwoBridge
    components: int
    linking_parity: int
    hyperbolic: bool
    cf: CfExpansion

    def __post_init__(self):
        knot = self.lifted.alpha % 2 == 1
        if (self.components == 1) != knot:
            raise BadInputError(
                f"lift {self.lifted} has component count {self.components} "
                "inconsistent with its alpha parity"
            )


@dataclass(frozen=True)
class TwoBridgeExterior:
    link: TwoBridge


@dataclass(frozen=True)
class TorusKnotExterior:
    p: int
    q: int


@dataclass(frozen=True)
class TorusExteriorDoubleCover:
    """Unbranched double cover of a torus knot exterior, kept as a label."""

    p: int
    q: int


JsjPiece = Union[TwoBridgeExterior, TorusKnotExterior, TorusExteriorDoubleCover]


@dataclass(frozen=True)
class JsjGraph:
    """Labeled pieces of a geometric decomposition plus gluing tori."""

    pieces: tuple[JsjPiece, ...]
    edges: tuple[tuple[int, int], ...]


def torus_cover_from_bezout(
    p: int, q: int, x: int, y: int, d: int = 1
) -> tuple[tuple[tuple[int, int], ...], Fraction, int]:
    """Raw (unnormalized) cover fibers for any Bezout representative.

    Exposed so representative-independence can be checked directly:
    (x, y) and (x + p, y - q) must normalize to the same space.
    Returns (fibers, euler, k).
    """
    if y * p + x * q != -1:
        raise BadInputError(f"(x, y) = ({x}, {y}) does not solve y*{p} + x*{q} = -1")
    if d % 2 == 0:
        raise BadInputError(f"d = {d} must be odd")
    if p % 2 == 1 and q % 2 == 1:
        k = (1 - p * q * d) // 2
        return ((2, d), (p, k * x), (q, k * y)), Fraction(1, 2 * p * q), k
    if p % 2 == 0:
        k = p // 2
        return ((k, x), (q, y), (q, y)), Fraction(1, k * q), k
    k = q // 2
    return ((p, x), (p, x), (k, y)), Fraction(1, k * p), k


def cover_of_torus_knot(
    k: TorusKnot, d: int = 1
) -> tuple[SfsInvariants, CoverDerivation]:
    """Normalized Seifert invariants of the double branched cover of T(p, q).

    d (odd, default 1) only matters before normalization; left-handed knots
    get the orientation-reversed invariants.  Results with fewer than three
    exceptional fibers (p = 2, lens space regime) are tagged so they remain
    comparable.
    """
    norm, chirality = normalize_torus(k)
    if isinstance(norm, TrivialKnot):
        raise TrivialKnotError(f"torus({k.p},{k.q}) is trivial; its cover is the 3-sphere")
    p, q = norm.p, norm.q
    x, y = solve_bezout_neg1(p, q)
    fibers, euler, kk = torus_cover_from_bezout(p, q, x, y, d)
    if chirality is Chirality.LEFT:
        fibers = tuple((a, -b) for a, b in fibers)
        euler = -euler
    sfs = normalize_sfs(SfsInvariants(fibers, euler, torus_knot_cover=True))
    dd = d if p % 2 == 1 and q % 2 == 1 else None
    return sfs, CoverDerivation(x=x, y=y, k=kk, d=dd)


@lru_cache(maxsize=None)
def _torus_cover_cached(p: int, q: int) -> SfsInvariants:
    return cover_of_torus_knot(TorusKnot(p, q))[0]


def cover_of_montesinos(k: MontesinosKnot) -> SfsInvariants:
    """Double branched cover of a Montesinos knot with at least 3 tangles.

    The cover is the Seifert fibered space over S^2 whose exceptional
    fibers are the tangle pairs and whose euler number is
    b - sum(beta_i/alpha_i).  Presentations with fewer tangles are 2-bridge
    and belong to the lift machinery instead.
    """
    m = normalize_montesinos(k)
    if len(m.tangles) < 3:
        raise TooFewTanglesError(
            f"montesinos presentation with {len(m.tangles)} tangles is a "
            "2-bridge type; use the 2-bridge lift instead"
        )
    return normalize_sfs(SfsInvariants(m.tangles, euler_montesinos(m)))


def lift_two_bridge(l: TwoBridge) -> LiftResult:
    """Lift b(2*alpha, beta) to the double cover of one of its components.

    The lift is the 2-bridge type (alpha, beta mod alpha): a knot when the
    linking number of the two components is odd (equivalently alpha odd),
    a 2-component link when it is even.  The linking number is
    a1 + a3 + ... + an for the odd-position-doubled expansion of
    beta/(2*alpha); its parity is cross-checked against the parity of
    alpha.  The lift is hyperbolic iff beta is not congruent to +-1 mod
    alpha.
    """
    if l.alpha % 2 != 0:
        raise BadInputError(f"twobridge({l.alpha},{l.beta}) is a knot, not a 2-component link")
    if l.alpha < 4:
        raise BadInputError(
            f"twobridge({l.alpha},{l.beta}): trivial and Hopf links do not lift here"
        )
    if not 0 < l.beta < l.alpha:
        raise BadInputError(
            f"twobridge({l.alpha},{l.beta}): beta must lie in (0, alpha)"
        )
    alpha = l.alpha // 2
    lifted = normalize_two_bridge(TwoBridge(alpha, l.beta % alpha))
    cf = constrained_cf(Fraction(l.beta, l.alpha))
    linking_parity = cf.odd_position_sum() % 2
    assert linking_parity == alpha % 2, (l, cf)
    components = 1 if alpha % 2 == 1 else 2
    r = l.beta % alpha
    hyperbolic = r != 1 % alpha and r != (-1) % alpha
    return LiftResult(lifted, components, linking_parity, hyperbolic, cf)


def cover_jsj_satellite(k: SatelliteTn1) -> JsjGraph:
    """JSJ graph of the double branched cover of a satellite tunnel number
    one knot.

    Lift the pattern link first.  If the lift is a knot, the cover glues its
    exterior to the unbranched double cover of the companion exterior (two
    pieces, one torus).  If the lift is a link other than the Hopf link,
    each of its two boundary tori receives a copy of the companion exterior
    (three pieces).  If the lift is the Hopf link its exterior is a
    thickened torus and collapses, leaving two copies of the companion
    exterior glued to each other.
    """
    if not isinstance(k, SatelliteTn1):
        raise InvalidSatelliteError(f"not a satellite presentation: {k!r}")
    lift = lift_two_bridge(k.pattern_link)
    companion = canonical_torus(k.companion)
    p, q = companion.p, companion.q
    if lift.components == 1:
        pieces = (TwoBridgeExterior(lift.lifted), TorusExteriorDoubleCover(p, q))
        edges = ((0, 1),)
    elif lift.lifted.alpha == 2:
        pieces = (TorusKnotExterior(p, q), TorusKnotExterior(p, q))
        edges = ((0, 1),)
    else:
        pieces = (
            TwoBridgeExterior(lift.lifted),
            TorusKnotExterior(p, q),
            TorusKnotExterior(p, q),
        )
        edges = ((0, 1), (0, 2))
    return JsjGraph(pieces, edges)
