"""Fomin-Zelevinsky quiver mutation and Dynkin orientation recognition.

An :class:`ExchangeQuiver` is a skew-symmetric integer matrix b with
b[i][j] = #arrows i -> j minus #arrows j -> i, plus one label per vertex.
No vertex is frozen.
"""

import json
import re
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import networkx as nx
import numpy as np

from .combinatorics import fan_diagonals
from .constants import (
    BUILTIN_QUIVERS,
    DYNKIN_FAMILIES,
    EXCEPTIONAL_RANKS,
    Q37_ARROWS,
    Q37_SIZE,
    Q38_ARROWS,
    Q38_SIZE,
)
from .exceptions import (
    BadVertexError,
    InvalidQuiverError,
    ParseError,
    UnknownQuiverError,
)
from .logging_util import get_logger

_FAN_PATTERN = re.compile(r"^fan_quiver\(\s*(\d+)\s*,\s*(\d+)\s*\)$")
_TYPE_PATTERN = re.compile(r"^([ADE])(\d*)$")


@dataclass(frozen=True, eq=False)
class ExchangeQuiver:
    """Skew-symmetric exchange matrix with vertex labels."""

    b: np.ndarray
    labels: tuple[str, ...]

    def __post_init__(self) -> None:
        matrix = np.array(self.b, dtype=int)
        object.__setattr__(self, "b", matrix)
        object.__setattr__(self, "labels", tuple(str(x) for x in self.labels))
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise InvalidQuiverError(f"matrix must be square, got shape {matrix.shape}")
        if matrix.shape[0] != len(self.labels):
            raise InvalidQuiverError(
                f"{len(self.labels)} labels for {matrix.shape[0]} vertices"
            )
        if len(set(self.labels)) != len(self.labels):
            raise InvalidQuiverError("vertex labels must be distinct")
        if not np.array_equal(matrix, -matrix.T):
            raise InvalidQuiverError("matrix is not skew-symmetric")

    @classmethod
    def from_arrows(
        cls, size: int, arrows: Iterable[tuple[int, int]], labels: Sequence[str] | None = None
    ) -> "ExchangeQuiver":
        """Build from 1-based arrows i -> j; repeated arrows add up.

        Raises:
            InvalidQuiverError: If an arrow is a loop or leaves the vertex range
        """
        b = np.zeros((size, size), dtype=int)
        for i, j in arrows:
            if not (1 <= i <= size and 1 <= j <= size) or i == j:
                raise InvalidQuiverError(f"bad arrow {i} -> {j} on {size} vertices")
            b[i - 1, j - 1] += 1
            b[j - 1, i - 1] -= 1
        names = labels if labels is not None else [str(v) for v in range(1, size + 1)]
        return cls(b, tuple(names))

    @property
    def size(self) -> int:
        return len(self.labels)

    def arrows(self) -> list[tuple[str, str, int]]:
        """(source label, target label, multiplicity) for each positive entry."""
        return [
            (self.labels[i], self.labels[j], int(self.b[i, j]))
            for i in range(self.size)
            for j in range(self.size)
            if self.b[i, j] > 0
        ]

    def index(self, vertex: str | int) -> int:
        """Position of a vertex given by label.

        Raises:
            BadVertexError: If no vertex carries that label
        """
        label = str(vertex)
        if label not in self.labels:
            raise BadVertexError(label, list(self.labels))
        return self.labels.index(label)

    def underlying_graph(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.size))
        graph.add_edges_from(
            (i, j)
            for i in range(self.size)
            for j in range(i + 1, self.size)
            if self.b[i, j]
        )
        return graph

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExchangeQuiver):
            return NotImplemented
        return self.labels == other.labels and np.array_equal(self.b, other.b)

    def __hash__(self) -> int:
        return hash((self.labels, self.b.tobytes()))

    def __str__(self) -> str:
        return to_text(self)


def mutate(quiver: ExchangeQuiver, vertex: str | int) -> ExchangeQuiver:
    """Mutation at a vertex.

    b'[i][j] = -b[i][j] if the vertex is i or j, and otherwise
    b[i][j] + (|b[i][v]| b[v][j] + b[i][v] |b[v][j]|) / 2.

    Raises:
        BadVertexError: If the vertex label is unknown
    """
    k = quiver.index(vertex)
    b = quiver.b
    mutated = b.copy()
    for i in range(quiver.size):
        for j in range(quiver.size):
            if i == k or j == k:
                mutated[i, j] = -b[i, j]
            elif b[i, k] * b[k, j] > 0:
                sign = 1 if b[i, k] > 0 else -1
                mutated[i, j] = b[i, j] + sign * b[i, k] * b[k, j]
    return ExchangeQuiver(mutated, quiver.labels)


def mutate_sequence(quiver: ExchangeQuiver, vertices: Iterable[str | int]) -> ExchangeQuiver:
    """Left fold of :func:`mutate` over the sequence."""
    current = quiver
    for step, vertex in enumerate(vertices, start=1):
        current = mutate(current, vertex)
        get_logger().debug(f"Mutation step {step} at {vertex}: {len(current.arrows())} arrow types")
    return current


# =============================================================================
# Dynkin recognition
# =============================================================================


def dynkin_graph(family: str, rank: int) -> nx.Graph:
    """Reference Dynkin diagram with nodes 0..rank-1.

    Raises:
        InvalidQuiverError: If the family and rank name no simply-laced diagram
    """
    if family == "A" and rank >= 1:
        return nx.path_graph(rank)
    if family == "D" and rank >= 4:
        graph = nx.path_graph(rank - 1)
        graph.add_edge(rank - 3, rank - 1)
        return graph
    if family == "E" and rank in EXCEPTIONAL_RANKS:
        graph = nx.path_graph(rank - 1)
        graph.add_edge(2, rank - 1)
        return graph
    raise InvalidQuiverError(f"no Dynkin diagram {family}{rank}")


def parse_dynkin_type(name: str, size: int | None = None) -> tuple[str, int]:
    """Split "E6" into ("E", 6); a bare family takes its rank from ``size``.

    Raises:
        ParseError: If the name is not A, D or E with an optional rank
    """
    match = _TYPE_PATTERN.match(name.strip().upper())
    if not match:
        raise ParseError(name, f"expected one of {DYNKIN_FAMILIES} with an optional rank")
    family, digits = match.groups()
    if digits:
        return family, int(digits)
    if size is None:
        raise ParseError(name, "rank is required")
    return family, size


def is_dynkin_orientation(quiver: ExchangeQuiver, dynkin_type: str) -> bool:
    """True iff the quiver has no multiple arrows and its underlying graph is the diagram."""
    family, rank = parse_dynkin_type(dynkin_type, quiver.size)
    if rank != quiver.size:
        return False
    if np.abs(quiver.b).max(initial=0) > 1:
        return False
    try:
        reference = dynkin_graph(family, rank)
    except InvalidQuiverError:
        return False
    return bool(nx.is_isomorphic(quiver.underlying_graph(), reference))


# =============================================================================
# Built-in quivers
# =============================================================================


def fan_quiver(n: int, v: int) -> ExchangeQuiver:
    """Linear A_{n-3} quiver on the fan diagonals at v, labelled "i,j"."""
    diagonals = fan_diagonals(n, v)
    arrows = [(t, t + 1) for t in range(1, len(diagonals))]
    labels = [f"{d.i},{d.j}" for d in diagonals]
    return ExchangeQuiver.from_arrows(len(diagonals), arrows, labels)


def builtin(name: str) -> ExchangeQuiver:
    """A named quiver: "Q37", "Q38" or "fan_quiver(n, v)".

    Raises:
        UnknownQuiverError: If the name is not one of the built-ins
    """
    key = name.strip()
    if key == "Q37":
        return ExchangeQuiver.from_arrows(Q37_SIZE, Q37_ARROWS)
    if key == "Q38":
        return ExchangeQuiver.from_arrows(Q38_SIZE, Q38_ARROWS)
    match = _FAN_PATTERN.match(key)
    if match:
        return fan_quiver(int(match.group(1)), int(match.group(2)))
    raise UnknownQuiverError(name)


def is_builtin(name: str) -> bool:
    key = name.strip()
    return key in BUILTIN_QUIVERS[:2] or bool(_FAN_PATTERN.match(key))


# =============================================================================
# Serialization
# =============================================================================


def _default_labels(size: int) -> tuple[str, ...]:
    return tuple(str(v) for v in range(1, size + 1))


def to_text(quiver: ExchangeQuiver) -> str:
    """Vertex count, an optional ``labels:`` line, then one "i -> j" per arrow."""
    lines = [str(quiver.size)]
    if quiver.labels != _default_labels(quiver.size):
        lines.append("labels: " + " ".join(quiver.labels))
    for source, target, multiplicity in quiver.arrows():
        lines.extend([f"{source} -> {target}"] * multiplicity)
    return "\n".join(lines) + "\n"


def from_text(text: str) -> ExchangeQuiver:
    """Parse the output of :func:`to_text`. Blank lines and ``#`` comments are skipped.

    Raises:
        ParseError: If the header or an arrow line is malformed
    """
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ParseError(text, "empty quiver text")
    try:
        size = int(lines[0])
    except ValueError:
        raise ParseError(lines[0], "first line must be the vertex count")
    labels = _default_labels(size)
    body = lines[1:]
    if body and body[0].startswith("labels:"):
        labels = tuple(body[0][len("labels:") :].split())
        body = body[1:]
    if len(labels) != size:
        raise ParseError(" ".join(labels), f"expected {size} labels")

    arrows = []
    for line in body:
        parts = [p.strip() for p in line.split("->")]
        if len(parts) != 2 or parts[0] not in labels or parts[1] not in labels:
            raise ParseError(line, "expected 'i -> j' between known vertices")
        arrows.append((labels.index(parts[0]) + 1, labels.index(parts[1]) + 1))
    try:
        return ExchangeQuiver.from_arrows(size, arrows, labels)
    except InvalidQuiverError as e:
        raise ParseError(text, e.message)


def to_json(quiver: ExchangeQuiver) -> str:
    data = {"labels": list(quiver.labels), "matrix": quiver.b.tolist()}
    return json.dumps(data, indent=2)


def from_json(text: str) -> ExchangeQuiver:
    """Parse the output of :func:`to_json`.

    Raises:
        ParseError: If the document is not a labelled skew-symmetric matrix
    """
    try:
        data = json.loads(text)
        return ExchangeQuiver(np.array(data["matrix"], dtype=int), tuple(data["labels"]))
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as e:
        raise ParseError(text, f"invalid quiver JSON: {e}")
    except InvalidQuiverError as e:
        raise ParseError(text, e.message)
