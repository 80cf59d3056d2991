"""Decision layer: is a knot determined by its double branched cover?

The trivial knot and 2-bridge knots always are.  A torus knot T(p, q),
p < q, is determined iff p = 2 or (p, q) is (3, 4) or (3, 5); otherwise the
Montesinos knot reconstructed from the cover invariants is a 2-twin.  A
tunnel number one Montesinos knot (Klimenko-Sakuma classification) is not
determined iff its cover is also the cover of a torus knot, which reduces to
explicit modular conditions (2a-1), (2a-2), (2b-1) on the Seifert
invariants, checked up to mirror.  Satellite tunnel number one knots are
never determined: an involution of the cover yields a Conway reducible
hyperbolic 2-twin that has no parametric presentation in these families.

Bridge-level facts are available separately: bridge number at least 5, or a
(1,1)-knot of bridge index at least 4, or a genus-2 cover with bridge index
other than 3, all force "not determined".

Everything is exact; a brute-force cover-matching search over torus knots
serves as an independent oracle for the Montesinos conditions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import gcd

import numpy as np

from .covers import (
    JsjGraph,
    _torus_cover_cached,
    cover_jsj_satellite,
    cover_of_montesinos,
    cover_of_torus_knot,
)
from .errors import (
    BadInputError,
    InvariantError,
    NoComputableCoverError,
    NotTunnelNumberOneError,
    TrivialKnotError,
)
from .knots import (
    KnotPresentation,
    MontesinosKnot,
    SatelliteTn1,
    TorusKnot,
    TrivialKnot,
    TwoBridge,
    euler_montesinos,
    mirror,
    normalize_montesinos,
    normalize_torus,
    normalize_two_bridge,
)
from .seifert import SfsInvariants, integer_part, reverse_orientation, sfs_equivalent


class Verdict(Enum):
    DETERMINED = "determined"
    NOT_DETERMINED = "not_determined"
    OUT_OF_SCOPE = "out_of_scope"


class TwinClass(Enum):
    TORUS_KNOT = "torus"
    MONTESINOS_KNOT = "montesinos"
    CONWAY_REDUCIBLE_HYPERBOLIC = "conway_reducible_hyperbolic"


class BridgeVerdict(Enum):
    NOT_DETERMINED = "not_determined"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class Evidence:
    """Supporting data for a verdict: matched condition tag, cover
    invariants, JSJ graph for satellites, or the torus knot a degenerate
    Montesinos presentation was identified with."""

    condition: str | None = None
    cover: SfsInvariants | None = None
    jsj: JsjGraph | None = None
    identified_as: KnotPresentation | None = None
    no_tn1_twins: bool = False


@dataclass(frozen=True)
class Determination:
    verdict: Verdict
    twin: KnotPresentation | None = None
    twin_class: TwinClass | None = None
    evidence: Evidence = field(default_factory=Evidence)

    def __post_init__(self):
        if self.verdict is Verdict.NOT_DETERMINED:
            if self.twin_class is None:
                raise InvariantError("not-determined verdicts must carry a twin class")
            if (
                self.twin_class is not TwinClass.CONWAY_REDUCIBLE_HYPERBOLIC
                and self.twin is None
            ):
                raise InvariantError(
                    f"twin class {self.twin_class.value} requires an explicit twin"
                )


def is_tn1_montesinos(k: MontesinosKnot) -> tuple[bool, str]:
    """Tunnel number one test for Montesinos presentations.

    Returns (flag, tag) with tag one of "2bridge", "2a", "2b", "none".
    With r <= 2 rational tangles the knot is 2-bridge.  With r = 3 and
    alphas sorted, either alpha_1 = 2 with alpha_2*alpha_3 odd (case 2a), or
    alpha_1 = alpha_2 = 3, beta_1 = beta_2, alpha_3 >= 4 not divisible by 3
    and euler number +-1/(3*alpha_3) (case 2b).  All conditions are
    mirror-invariant, so the normalized presentation suffices.
    """
    m = normalize_montesinos(k)
    r = len(m.tangles)
    if r <= 2:
        return True, "2bridge"
    if r >= 4:
        return False, "none"
    (a1, _b1), (a2, _b2), (a3, _b3) = m.tangles
    if a1 == 2 and a2 % 2 == 1 and a3 % 2 == 1:
        return True, "2a"
    e = euler_montesinos(m)
    if (
        a1 == 3
        and a2 == 3
        and _b1 == _b2
        and a3 >= 4
        and a3 % 3 != 0
        and abs(e) == Fraction(1, 3 * a3)
    ):
        return True, "2b"
    return False, "none"


def _twin_conditions(m: MontesinosKnot) -> tuple[str, TorusKnot] | None:
    """Cover-matching conditions on a normalized TN1 presentation.

    Case 2a, fibers (2,1), (a2,b2), (a3,b3):
      (2a-1) a2, a3 coprime, (a2, a3) != (3, 5), 2*a3*b2 = -1 mod a2,
             2*a2*b3 = -1 mod a3, euler 1/(2*a2*a3):  twin T(a2, a3);
      (2a-2) a2 = a3 > 4 odd, b2 = b3, 4*b2 = -1 mod a2, euler 1/(2*a2):
             twin T(4, a2).
    Case 2b, fibers (3,b1), (3,b1), (a3,b3):
      (2b-1) a3*b1 = 1 mod 3, 3*b3 = -1 mod a3, euler 1/(3*a3):
             twin T(3, 2*a3).
    """
    (a1, b1), (a2, b2), (a3, b3) = m.tangles
    e = euler_montesinos(m)
    if a1 == 2:
        if (
            gcd(a2, a3) == 1
            and (a2, a3) != (3, 5)
            and (2 * a3 * b2 + 1) % a2 == 0
            and (2 * a2 * b3 + 1) % a3 == 0
            and e == Fraction(1, 2 * a2 * a3)
        ):
            return "2a-1", TorusKnot(a2, a3)
        if (
            a2 == a3
            and a2 > 4
            and b2 == b3
            and (4 * b2 + 1) % a2 == 0
            and e == Fraction(1, 2 * a2)
        ):
            return "2a-2", TorusKnot(4, a2)
    elif a1 == 3:
        if (
            (a3 * b1 - 1) % 3 == 0
            and (3 * b3 + 1) % a3 == 0
            and e == Fraction(1, 3 * a3)
        ):
            return "2b-1", TorusKnot(3, 2 * a3)
    return None


def classify_torus(k: TorusKnot) -> Determination:
    """Determined iff p = 2 or (p, q) in {(3, 4), (3, 5)}.

    Otherwise the cover is also the cover of the Montesinos knot whose
    tangles are the cover fibers and whose integer coefficient is recovered
    from the integrality relation; that knot is hyperbolic for p > 3 and for
    p = 3, q > 5, hence a 2-twin.
    """
    norm, _ = normalize_torus(k)
    if isinstance(norm, TrivialKnot):
        raise TrivialKnotError(f"torus({k.p},{k.q}) is trivial")
    p, q = norm.p, norm.q
    cov = cover_of_torus_knot(k)[0]
    if p == 2:
        return Determination(
            Verdict.DETERMINED, evidence=Evidence(condition="2bridge", cover=cov)
        )
    if (p, q) in ((3, 4), (3, 5)):
        return Determination(
            Verdict.DETERMINED,
            evidence=Evidence(condition="torus-exceptional", cover=cov),
        )
    twin = normalize_montesinos(MontesinosKnot(integer_part(cov), cov.fibers))
    condition = "p>3" if p > 3 else "q>5"
    return Determination(
        Verdict.NOT_DETERMINED,
        twin=twin,
        twin_class=TwinClass.MONTESINOS_KNOT,
        evidence=Evidence(condition=condition, cover=cov),
    )


def classify_montesinos(k: MontesinosKnot) -> Determination:
    """Verdict for a tunnel number one Montesinos knot.

    Degenerate presentations whose covers equal a cover of T(3, 4) or
    T(3, 5) (in either orientation) are those torus knots in disguise and
    are determined.  Otherwise the conditions of ``_twin_conditions``,
    checked on the presentation and on its mirror, decide whether a torus
    knot 2-twin exists and produce it with matching chirality.
    """
    m = normalize_montesinos(k)
    tn1, tag = is_tn1_montesinos(m)
    if not tn1:
        raise NotTunnelNumberOneError(
            f"montesinos presentation {m} is not tunnel number one"
        )
    if tag == "2bridge":
        return Determination(
            Verdict.DETERMINED, evidence=Evidence(condition="2bridge")
        )
    cov = cover_of_montesinos(m)
    for tp, tq in ((3, 4), (3, 5)):
        torus_cov = _torus_cover_cached(tp, tq)
        identified = None
        if cov == torus_cov:
            identified = TorusKnot(tp, tq)
        elif cov == reverse_orientation(torus_cov):
            identified = TorusKnot(tp, -tq)
        if identified is not None:
            return Determination(
                Verdict.DETERMINED,
                evidence=Evidence(
                    condition="torus-exceptional", cover=cov, identified_as=identified
                ),
            )
    for candidate, mirrored in ((m, False), (normalize_montesinos(mirror(m)), True)):
        match = _twin_conditions(candidate)
        if match is not None:
            condition, twin = match
            if mirrored:
                twin = TorusKnot(twin.p, -twin.q)
            return Determination(
                Verdict.NOT_DETERMINED,
                twin=twin,
                twin_class=TwinClass.TORUS_KNOT,
                evidence=Evidence(condition=condition, cover=cov),
            )
    return Determination(Verdict.DETERMINED, evidence=Evidence(cover=cov))


def classify_satellite(k: SatelliteTn1) -> Determination:
    """Satellite tunnel number one knots are never determined.

    The 2-twin is a Conway reducible hyperbolic knot obtained from an
    involution of the cover; it has no presentation in the families handled
    here, so the evidence carries the JSJ graph of the cover instead, along
    with the fact that no tunnel number one 2-twin exists.
    """
    jsj = cover_jsj_satellite(k)
    return Determination(
        Verdict.NOT_DETERMINED,
        twin_class=TwinClass.CONWAY_REDUCIBLE_HYPERBOLIC,
        evidence=Evidence(condition="satellite", jsj=jsj, no_tn1_twins=True),
    )


def classify_by_bridge_data(
    bridge: int, is_one_one: bool = False, cover_genus_two: bool | None = None
) -> tuple[BridgeVerdict, str | None]:
    """Input-level rules from bridge number and Heegaard genus hints.

    Bridge number >= 5 forces "not determined", as does a (1,1)-knot of
    bridge index >= 4, as does a genus-2 cover with bridge index != 3.  The
    remaining bridge-3/4 cases stay open here (pi-hyperbolic territory), so
    the fallback is inconclusive rather than determined.
    """
    if bridge < 1:
        raise BadInputError(f"bridge number {bridge} must be >= 1")
    if bridge >= 5:
        return BridgeVerdict.NOT_DETERMINED, "bridge>=5"
    if is_one_one and bridge >= 4:
        return BridgeVerdict.NOT_DETERMINED, "(1,1)-bridge>=4"
    if cover_genus_two and bridge != 3:
        return BridgeVerdict.NOT_DETERMINED, "genus2-cover-bridge!=3"
    return BridgeVerdict.INCONCLUSIVE, None


def decide(k: KnotPresentation) -> Determination:
    """Dispatch over the presentation families.

    The trivial knot and 2-bridge knots are determined by their covers;
    torus, Montesinos and satellite presentations go to their classifiers.
    Montesinos presentations that are not tunnel number one, and 2-bridge
    types with two components, are out of scope.
    """
    if isinstance(k, TrivialKnot):
        return Determination(Verdict.DETERMINED, evidence=Evidence(condition="trivial"))
    if isinstance(k, TorusKnot):
        norm, _ = normalize_torus(k)
        if isinstance(norm, TrivialKnot):
            return Determination(
                Verdict.DETERMINED, evidence=Evidence(condition="trivial")
            )
        return classify_torus(k)
    if isinstance(k, TwoBridge):
        l = normalize_two_bridge(k)
        if l.alpha == 1:
            return Determination(
                Verdict.DETERMINED, evidence=Evidence(condition="trivial")
            )
        if l.alpha % 2 == 0:
            return Determination(Verdict.OUT_OF_SCOPE)
        return Determination(
            Verdict.DETERMINED, evidence=Evidence(condition="2bridge")
        )
    if isinstance(k, MontesinosKnot):
        tn1, _tag = is_tn1_montesinos(k)
        if not tn1:
            return Determination(Verdict.OUT_OF_SCOPE)
        return classify_montesinos(k)
    if isinstance(k, SatelliteTn1):
        return classify_satellite(k)
    raise TypeError(f"not a knot presentation: {k!r}")


def _computable_cover(k: KnotPresentation) -> SfsInvariants:
    if isinstance(k, TorusKnot):
        if k.is_trivial:
            raise NoComputableCoverError(f"torus({k.p},{k.q}) is trivial")
        return cover_of_torus_knot(k)[0]
    if isinstance(k, MontesinosKnot):
        m = normalize_montesinos(k)
        if len(m.tangles) >= 3:
            return cover_of_montesinos(m)
        raise NoComputableCoverError(
            "montesinos presentations with fewer than 3 tangles have no "
            "computable Seifert cover here"
        )
    raise NoComputableCoverError(f"no Seifert fibered cover computed for {k!r}")


def verify_twin(a: KnotPresentation, b: KnotPresentation) -> bool:
    """Whether the double branched covers of a and b are homeomorphic."""
    return sfs_equivalent(_computable_cover(a), _computable_cover(b))


# Torus knot scan table for the brute-force oracle.  Right-handed covers
# have euler number 1/(2pq), 1/((p/2)q) or 1/(p(q/2)), so a candidate can be
# rejected on the euler denominator alone; the table stores that denominator
# for every coprime pair, sorted, so a search touches only the handful of
# pairs surviving the filter, and those are checked with the full cover
# comparison.  Exactness of the filter is cross-checked against a literal
# pair-by-pair scan in the test suite.
_scan_bound = 0
_scan_den = np.empty(0, dtype=np.int64)
_scan_p = np.empty(0, dtype=np.int64)
_scan_q = np.empty(0, dtype=np.int64)


def _ensure_scan_table(bound: int) -> None:
    global _scan_bound, _scan_den, _scan_p, _scan_q
    if bound <= _scan_bound:
        return
    # grow geometrically so a stream of slowly increasing bounds does not
    # rebuild the table over and over
    bound = max(bound, 2 * _scan_bound, 64)
    n = np.arange(1, bound + 1, dtype=np.int64)
    p_grid, q_grid = np.meshgrid(n, n, indexing="ij")
    mask = (p_grid >= 2) & (p_grid < q_grid) & (np.gcd(p_grid, q_grid) == 1)
    p = p_grid[mask]
    q = q_grid[mask]
    odd = (p % 2 == 1) & (q % 2 == 1)
    den = np.where(odd, 2 * p * q, np.where(p % 2 == 0, (p // 2) * q, p * (q // 2)))
    order = np.lexsort((q, p, den))
    _scan_bound = bound
    _scan_den = den[order]
    _scan_p = p[order]
    _scan_q = q[order]


def brute_force_twin_search(k: MontesinosKnot, bound: int) -> TorusKnot | None:
    """Scan all coprime 2 <= p < q <= bound for a torus knot with the same
    double branched cover as k (either orientation, so both chiralities are
    covered); the first match in (p, q) order is returned, or None.
    """
    cov = cover_of_montesinos(normalize_montesinos(k))
    if abs(cov.euler.numerator) != 1:
        return None
    _ensure_scan_table(bound)
    target = cov.euler.denominator
    lo = int(np.searchsorted(_scan_den, target, "left"))
    hi = int(np.searchsorted(_scan_den, target, "right"))
    for i in range(lo, hi):
        p, q = int(_scan_p[i]), int(_scan_q[i])
        if q > bound:
            continue
        if sfs_equivalent(cov, _torus_cover_cached(p, q)):
            return TorusKnot(p, q)
    return None
