"""Text serialization of knot presentations.

Grammar (whitespace is ignored between tokens):

    presentation := "trivial"
                  | "torus(" int "," int ")"
                  | "twobridge(" int "," int ")"
                  | "montesinos(" int ";" tangle ("," tangle)* ")"
                  | "satellite(" twobridge ";" torus ")"
    tangle       := int "/" int

Parsing validates the domain invariants (coprimality etc.) through the
presentation constructors, surfacing them as InvariantError subclasses; pure
grammar problems raise ParseError with the offending position.  The optional
environment variable TWINCOVER_MAX_INT caps the absolute value of every
integer literal: oversized input is rejected, never wrapped.
"""

from __future__ import annotations

import os

from .errors import InvariantError, ParseError
from .knots import (
    KnotPresentation,
    MontesinosKnot,
    SatelliteTn1,
    TorusKnot,
    TrivialKnot,
    TwoBridge,
)

_MAX_INT_ENV = "TWINCOVER_MAX_INT"


def int_cap() -> int | None:
    raw = os.environ.get(_MAX_INT_ENV, "").strip()
    if not raw:
        return None
    try:
        cap = int(raw)
    except ValueError:
        raise InvariantError(f"{_MAX_INT_ENV}={raw!r} is not an integer")
    return cap if cap > 0 else None


def check_int_cap(value: int, context: str = "integer") -> int:
    cap = int_cap()
    if cap is not None and abs(value) > cap:
        raise InvariantError(
            f"{context} {value} exceeds the {_MAX_INT_ENV} cap of {cap}"
        )
    return value


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, char: str):
        self.skip_ws()
        if self.pos >= len(self.text) or self.text[self.pos] != char:
            found = self.text[self.pos] if self.pos < len(self.text) else "end of input"
            raise ParseError(f"expected {char!r}, found {found!r}", self.pos)
        self.pos += 1

    def word(self) -> str:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isalpha():
            self.pos += 1
        if self.pos == start:
            raise ParseError("expected a presentation keyword", start)
        return self.text[start : self.pos]

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        digits = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits:
            raise ParseError("expected an integer", start)
        return check_int_cap(int(self.text[start : self.pos]))

    def end(self):
        self.skip_ws()
        if self.pos < len(self.text):
            raise ParseError(
                f"unexpected trailing input {self.text[self.pos:]!r}", self.pos
            )


def _parse_torus(s: _Scanner) -> TorusKnot:
    s.expect("(")
    p = s.integer()
    s.expect(",")
    q = s.integer()
    s.expect(")")
    return TorusKnot(p, q)


def _parse_twobridge(s: _Scanner) -> TwoBridge:
    s.expect("(")
    alpha = s.integer()
    s.expect(",")
    beta = s.integer()
    s.expect(")")
    return TwoBridge(alpha, beta)


def _parse_montesinos(s: _Scanner) -> MontesinosKnot:
    s.expect("(")
    b = s.integer()
    s.expect(";")
    tangles = []
    while True:
        alpha = s.integer()
        s.expect("/")
        beta = s.integer()
        tangles.append((alpha, beta))
        if s.peek() == ",":
            s.expect(",")
            continue
        break
    s.expect(")")
    return MontesinosKnot(b, tuple(tangles))


def _parse_keyword(s: _Scanner) -> KnotPresentation:
    at = s.pos
    word = s.word()
    if word == "trivial":
        return TrivialKnot()
    if word == "torus":
        return _parse_torus(s)
    if word == "twobridge":
        return _parse_twobridge(s)
    if word == "montesinos":
        return _parse_montesinos(s)
    if word == "satellite":
        s.expect("(")
        inner = s.word()
        if inner != "twobridge":
            raise ParseError("satellite pattern must be a twobridge(...)", s.pos)
        pattern = _parse_twobridge(s)
        s.expect(";")
        inner = s.word()
        if inner != "torus":
            raise ParseError("satellite companion must be a torus(...)", s.pos)
        companion = _parse_torus(s)
        s.expect(")")
        return SatelliteTn1(pattern, companion)
    raise ParseError(f"unknown presentation keyword {word!r}", at)


def parse_presentation(text: str) -> KnotPresentation:
    """Parse the grammar above into a validated presentation."""
    s = _Scanner(text)
    k = _parse_keyword(s)
    s.end()
    return k


def serialize_presentation(k: KnotPresentation) -> str:
    """Canonical text form; the inverse of ``parse_presentation``."""
    if isinstance(k, TrivialKnot):
        return "trivial"
    if isinstance(k, TorusKnot):
        return f"torus({k.p},{k.q})"
    if isinstance(k, TwoBridge):
        return f"twobridge({k.alpha},{k.beta})"
    if isinstance(k, MontesinosKnot):
        tangles = ",".join(f"{a}/{b}" for a, b in k.tangles)
        return f"montesinos({k.b};{tangles})"
    if isinstance(k, SatelliteTn1):
        return (
            f"satellite({serialize_presentation(k.pattern_link)};"
            f"{serialize_presentation(k.companion)})"
        )
    raise TypeError(f"not a knot presentation: {k!r}")
