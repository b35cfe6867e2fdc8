"""Parsers for the command-line argument syntax.

Arcs are written "i,j" and separated by ";", with 1-based vertices.
Values are written "i,j=v" where v is an integer or a fraction num/den.
"""

import re
from fractions import Fraction

from .combinatorics import Arc
from .exceptions import GrasscatError, ParseError

_VARIABLE_PATTERN = re.compile(r"^x\[(.*)\]$")


def parse_arc(n: int, text: str) -> Arc:
    """Parse "i,j" (or "x[i,j]") into an arc of the n-gon.

    Raises:
        ParseError: If the text is not two integers in [1, n]
    """
    body = text.strip()
    match = _VARIABLE_PATTERN.match(body)
    if match:
        body = match.group(1)
    parts = [p.strip() for p in body.split(",")]
    if len(parts) != 2:
        raise ParseError(text, "expected an arc 'i,j'")
    try:
        a, b = int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError(text, "arc endpoints must be integers")
    if not (1 <= a <= n and 1 <= b <= n) or a == b:
        raise ParseError(text, f"arc endpoints must be distinct vertices in [1, {n}]")
    try:
        return Arc.from_endpoints(n, a, b)
    except GrasscatError as e:
        raise ParseError(text, e.message)


def parse_arcs(n: int, text: str | None) -> list[Arc]:
    """Parse "i,j;k,l;..." into arcs. Empty text gives an empty list."""
    if text is None or not text.strip():
        return []
    return [parse_arc(n, chunk) for chunk in text.split(";") if chunk.strip()]


def parse_fraction(text: str) -> Fraction:
    """Parse an integer or num/den.

    Raises:
        ParseError: If the text is not an exact rational
    """
    try:
        value = Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ParseError(text, "expected an integer or num/den")
    if "." in text or "e" in text.lower():
        raise ParseError(text, "decimal notation is not exact; use num/den")
    return value


def parse_values(n: int, text: str | None) -> dict[Arc, Fraction]:
    """Parse "i,j=v;k,l=w" into an arc-to-value map.

    Raises:
        ParseError: On a malformed entry or an arc given twice
    """
    values: dict[Arc, Fraction] = {}
    if text is None or not text.strip():
        return values
    for chunk in text.split(";"):
        if not chunk.strip():
            continue
        if "=" not in chunk:
            raise ParseError(chunk, "expected 'i,j=value'")
        left, right = chunk.split("=", 1)
        arc = parse_arc(n, left)
        if arc in values:
            raise ParseError(chunk, f"arc {arc} given twice")
        values[arc] = parse_fraction(right)
    return values


def parse_sequence(text: str | None) -> list[str]:
    """Parse a mutation sequence "v1,v2,..." into vertex labels."""
    if text is None or not text.strip():
        return []
    labels = [p.strip() for p in text.split(",")]
    if any(not label for label in labels):
        raise ParseError(text, "empty vertex in mutation sequence")
    return labels
