"""Seifert invariants over the 2-sphere and homeomorphism testing.

A closed orientable Seifert fibered space over S^2 is encoded by its
exceptional fibers (alpha_i, beta_i) together with the euler number e of the
fibration.  In normalized form every beta lies in (0, alpha), fibers are
sorted, and e + sum(beta_i/alpha_i) is an integer (the integer surgery
coefficient the invariants came from).  Orientation reversal negates e and
every beta.

With at least three exceptional fibers these invariants are a complete
homeomorphism invariant in the regime this package works in, so comparing
double branched covers reduces to comparing normal forms, possibly after an
orientation flip.  Spaces with fewer exceptional fibers are lens spaces with
non-unique fibrations; they are only accepted when tagged as covers of torus
knots, where the parametrization is still faithful.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .errors import AmbiguousFibrationError, BadFiberError, InvariantError


@dataclass(frozen=True)
class SfsInvariants:
    """Exceptional fibers plus euler number of a fibration over S^2.

    ``torus_knot_cover`` marks outputs of the torus-knot cover computation;
    it exempts lens-space shaped results (fewer than three exceptional
    fibers) from the uniqueness precondition of ``sfs_equivalent`` and is
    ignored by equality and hashing.
    """

    fibers: tuple[tuple[int, int], ...]
    euler: Fraction
    torus_knot_cover: bool = field(default=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "fibers", tuple(tuple(f) for f in self.fibers))
        object.__setattr__(self, "euler", Fraction(self.euler))
        for alpha, beta in self.fibers:
            if alpha < 1:
                raise BadFiberError(f"fiber ({alpha},{beta}): alpha must be >= 1")
            if gcd(alpha, beta) != 1:
                raise BadFiberError(
                    f"fiber ({alpha},{beta}): invariants are not coprime "
                    f"(gcd {gcd(alpha, beta)})"
                )

    @property
    def is_normalized(self) -> bool:
        return all(a >= 2 and 0 < b < a for a, b in self.fibers) and (
            self.fibers == tuple(sorted(self.fibers))
        )


def normalize_sfs(m: SfsInvariants) -> SfsInvariants:
    """Normal form: beta mod alpha in (0, alpha), fibers sorted, e untouched.

    Fibers with alpha = 1 contribute an integer to sum(beta/alpha) and are
    deleted.  The euler number is an invariant of the oriented manifold and
    is stored independently of the fiber presentation, so it never changes.
    Raises InvariantError when e + sum(beta_i/alpha_i) is not an integer,
    since no integer surgery description can produce such data.
    """
    fibers = []
    for alpha, beta in m.fibers:
        if alpha == 1:
            continue
        fibers.append((alpha, beta % alpha))
    fibers.sort()
    result = SfsInvariants(tuple(fibers), m.euler, m.torus_knot_cover)
    total = result.euler + sum(Fraction(b, a) for a, b in result.fibers)
    if total.denominator != 1:
        raise InvariantError(
            f"euler {m.euler} is incompatible with fibers {m.fibers}: "
            f"e + sum(beta/alpha) = {total} is not an integer"
        )
    return result


def integer_part(m: SfsInvariants) -> int:
    """The integer b = e + sum(beta_i/alpha_i) of a normalized space."""
    total = m.euler + sum(Fraction(b, a) for a, b in m.fibers)
    if total.denominator != 1:
        raise InvariantError(f"{m} does not satisfy the integrality invariant")
    return int(total)


def reverse_orientation(m: SfsInvariants) -> SfsInvariants:
    """Orientation reversal: negate the euler number and every beta."""
    flipped = SfsInvariants(
        tuple((a, -b) for a, b in m.fibers), -m.euler, m.torus_knot_cover
    )
    return normalize_sfs(flipped)


def _check_comparable(m: SfsInvariants, label: str) -> SfsInvariants:
    m = normalize_sfs(m)
    if len(m.fibers) < 3 and not m.torus_knot_cover:
        raise AmbiguousFibrationError(
            f"{label} has {len(m.fibers)} exceptional fibers; the fibration "
            "is not unique and the space is not tagged as a torus knot cover"
        )
    return m


def sfs_equivalent(
    a: SfsInvariants, b: SfsInvariants, *, same_orientation_only: bool = False
) -> bool:
    """Whether two fibered spaces are homeomorphic.

    By default homeomorphisms may reverse orientation, matching how 2-twins
    are hunted; pass ``same_orientation_only=True`` for the
    orientation-preserving comparison (diagnostics).
    """
    a = _check_comparable(a, "first argument")
    b = _check_comparable(b, "second argument")
    if a == b:
        return True
    if same_orientation_only:
        return False
    return reverse_orientation(a) == b
