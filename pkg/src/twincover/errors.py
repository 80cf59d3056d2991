"""Exception types shared across the package.

Every error carries a short machine-readable ``code`` used by the service
layer (HTTP 400 bodies) and the CLI (JSON error reports).
"""


class TwinCoverError(Exception):
    """Base class for all domain errors."""

    code = "error"


class InvariantError(TwinCoverError):
    """A domain invariant is violated (non-coprime pair, bad range, ...)."""

    code = "invariant"


class NotCoprimeError(InvariantError):
    code = "not_coprime"


class BadTangleError(InvariantError):
    code = "bad_tangle"


class BadFiberError(InvariantError):
    code = "bad_fiber"


class InvalidSatelliteError(InvariantError):
    code = "invalid_satellite"


class BadInputError(TwinCoverError):
    code = "bad_input"


class DegenerateCfError(TwinCoverError):
    code = "degenerate_cf"


class TrivialKnotError(TwinCoverError):
    code = "trivial_knot"


class AmbiguousFibrationError(TwinCoverError):
    code = "ambiguous_fibration"


class TooFewTanglesError(TwinCoverError):
    code = "too_few_tangles"


class NotTunnelNumberOneError(TwinCoverError):
    code = "not_tunnel_number_one"


class NoComputableCoverError(TwinCoverError):
    code = "no_computable_cover"


class BadBoundsError(TwinCoverError):
    code = "bad_bounds"


class ParseError(TwinCoverError):
    """Grammar error in a presentation string; ``position`` is a 0-based index."""

    code = "parse_error"

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position
