"""Exact double-branched-cover invariants for tunnel number one knots.

The library decides, for torus, 2-bridge, Montesinos and satellite
presentations, whether the knot is determined by its double branched cover,
and produces the explicit 2-twin when one exists.  All arithmetic is exact.
"""

from .arith import (
    CfExpansion,
    DoubledForm,
    Rational,
    constrained_cf,
    egcd,
    eval_cf,
    format_rational,
    solve_bezout_neg1,
)
from .classify import (
    BridgeVerdict,
    Determination,
    Evidence,
    TwinClass,
    Verdict,
    brute_force_twin_search,
    classify_by_bridge_data,
    classify_montesinos,
    classify_satellite,
    classify_torus,
    decide,
    is_tn1_montesinos,
    verify_twin,
)
from .covers import (
    CoverDerivation,
    JsjGraph,
    LiftResult,
    TorusExteriorDoubleCover,
    TorusKnotExterior,
    TwoBridgeExterior,
    cover_jsj_satellite,
    cover_of_montesinos,
    cover_of_torus_knot,
    lift_two_bridge,
)
from .errors import TwinCoverError
from .knots import (
    Chirality,
    KnotPresentation,
    MontesinosKnot,
    SatelliteTn1,
    TorusKnot,
    TrivialKnot,
    TwoBridge,
    bridge_index_torus,
    canonical_torus,
    euler_montesinos,
    mirror,
    normalize_montesinos,
    normalize_torus,
    normalize_two_bridge,
    two_bridge_equivalent,
)
from .seifert import (
    SfsInvariants,
    integer_part,
    normalize_sfs,
    reverse_orientation,
    sfs_equivalent,
)
from .textio import parse_presentation, serialize_presentation

__version__ = "0.1.0"
