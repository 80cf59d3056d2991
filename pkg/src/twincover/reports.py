"""Report builders shared by the HTTP service and (through it) the CLI.

Each builder parses its inputs, runs the corresponding computation and
returns a flat dict ready for JSON serialization ("twin-cover/1" schema).
Rationals are rendered as "num/den" strings so nothing passes through
floats.  Domain errors propagate as TwinCoverError subclasses; the service
maps them to HTTP 400 bodies of the form {"error": code, "detail": text}.
"""

from __future__ import annotations

import csv
import io

from .arith import format_rational
from .census import (
    FAMILIES,
    montesinos_census,
    torus_census,
    two_bridge_lift_census,
)
from .classify import Determination, decide
from .covers import (
    JsjGraph,
    TorusExteriorDoubleCover,
    TorusKnotExterior,
    TwoBridgeExterior,
    cover_jsj_satellite,
    cover_of_montesinos,
    cover_of_torus_knot,
    lift_two_bridge,
)
from .errors import BadBoundsError, BadInputError, NoComputableCoverError
from .knots import MontesinosKnot, SatelliteTn1, TorusKnot, TwoBridge, mirror
from .seifert import SfsInvariants
from .textio import check_int_cap, parse_presentation, serialize_presentation

SCHEMA = "twin-cover/1"


def _cover_payload(cover: SfsInvariants) -> dict:
    return {
        "fibers": [[a, b] for a, b in cover.fibers],
        "euler": format_rational(cover.euler),
    }


def _jsj_payload(graph: JsjGraph) -> dict:
    pieces = []
    for piece in graph.pieces:
        if isinstance(piece, TwoBridgeExterior):
            pieces.append(
                {
                    "kind": "two_bridge_exterior",
                    "alpha": piece.link.alpha,
                    "beta": piece.link.beta,
                }
            )
        elif isinstance(piece, TorusKnotExterior):
            pieces.append({"kind": "torus_knot_exterior", "p": piece.p, "q": piece.q})
        elif isinstance(piece, TorusExteriorDoubleCover):
            pieces.append(
                {"kind": "torus_exterior_double_cover", "p": piece.p, "q": piece.q}
            )
    return {"pieces": pieces, "edges": [list(e) for e in graph.edges]}


def _determination_payload(det: Determination) -> dict:
    out: dict = {"verdict": det.verdict.value}
    if det.evidence.condition is not None:
        out["condition"] = det.evidence.condition
    if det.twin is not None:
        out["twin"] = serialize_presentation(det.twin)
    if det.twin_class is not None:
        out["twin_class"] = det.twin_class.value
    if det.evidence.identified_as is not None:
        out["identified_as"] = serialize_presentation(det.evidence.identified_as)
    if det.evidence.cover is not None:
        out["cover"] = _cover_payload(det.evidence.cover)
    if det.evidence.jsj is not None:
        out["jsj"] = _jsj_payload(det.evidence.jsj)
    if det.evidence.no_tn1_twins:
        out["no_tn1_twins"] = True
    return out


def classify_report(presentation: str, mirror_input: bool = False) -> dict:
    k = parse_presentation(presentation)
    if mirror_input:
        k = mirror(k)
    det = decide(k)
    report = {"schema": SCHEMA, "presentation": serialize_presentation(k)}
    report.update(_determination_payload(det))
    return report


def cover_report(presentation: str, mirror_input: bool = False) -> dict:
    k = parse_presentation(presentation)
    if mirror_input:
        k = mirror(k)
    if isinstance(k, TorusKnot):
        cover = cover_of_torus_knot(k)[0]
    elif isinstance(k, MontesinosKnot):
        cover = cover_of_montesinos(k)
    else:
        raise NoComputableCoverError(
            f"{serialize_presentation(k)} has no Seifert fibered cover here; "
            "satellite covers are served by the jsj command"
        )
    report = {"schema": SCHEMA, "presentation": serialize_presentation(k)}
    report.update(_cover_payload(cover))
    return report


def lift_report(alpha: int, beta: int, mirror_input: bool = False) -> dict:
    check_int_cap(alpha, "alpha")
    check_int_cap(beta, "beta")
    link = TwoBridge(alpha, beta)
    if mirror_input:
        link = mirror(link)
    res = lift_two_bridge(link)
    return {
        "schema": SCHEMA,
        "input": [link.alpha, link.beta],
        "lifted": [res.lifted.alpha, res.lifted.beta],
        "components": res.components,
        "linking_parity": res.linking_parity,
        "hyperbolic": res.hyperbolic,
    }


def jsj_report(presentation: str, mirror_input: bool = False) -> dict:
    k = parse_presentation(presentation)
    if mirror_input:
        k = mirror(k)
    if not isinstance(k, SatelliteTn1):
        raise BadInputError(
            f"{serialize_presentation(k)} is not a satellite presentation"
        )
    graph = cover_jsj_satellite(k)
    report = {"schema": SCHEMA, "presentation": serialize_presentation(k)}
    report.update(_jsj_payload(graph))
    return report


def tabulate_rows(
    family: str,
    max_q: int | None = None,
    max_alpha: int | None = None,
    max_b: int | None = None,
    verify: bool = False,
) -> tuple[list[str], list[dict]]:
    if family not in FAMILIES:
        raise BadBoundsError(f"unknown family {family!r}; expected one of {FAMILIES}")
    if family == "torus":
        if max_q is None:
            raise BadBoundsError("family 'torus' requires --max")
        check_int_cap(max_q, "--max")
        return torus_census(max_q, verify=verify)
    if family == "montesinos":
        if max_alpha is None or max_b is None:
            raise BadBoundsError("family 'montesinos' requires --max-alpha and --max-b")
        check_int_cap(max_alpha, "--max-alpha")
        check_int_cap(max_b, "--max-b")
        return montesinos_census(max_alpha, max_b, verify=verify)
    if max_alpha is None:
        raise BadBoundsError("family 'twobridge-lift' requires --max-alpha")
    check_int_cap(max_alpha, "--max-alpha")
    return two_bridge_lift_census(max_alpha)


def tabulate_json(family: str, **kwargs) -> dict:
    _header, rows = tabulate_rows(family, **kwargs)
    return {"schema": SCHEMA, "family": family, "rows": rows}


def tabulate_csv(family: str, **kwargs) -> str:
    """RFC 4180 text: header row always present, CRLF line endings."""
    header, rows = tabulate_rows(family, **kwargs)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\r\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([row.get(col, "") for col in header])
    return buf.getvalue()
