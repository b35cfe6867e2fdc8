"""Mesh friezes, Ptolemy friezes, restriction to reductions, and their checks.

Values are exact: :class:`fractions.Fraction` for numeric friezes and
:class:`~grasscat.laurent.LaurentPoly` when the seed values are formal
variables. Both kinds flow through the same flip propagation.
"""

import json
from collections import deque
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Any, TypeVar

from .arquiver import TranslationQuiver, ar_sequences
from .combinatorics import (
    Arc,
    SubpolygonDecomposition,
    Triangulation,
    compatible_arcs,
    cut_polygon,
    enumerate_arcs,
    flip,
)
from .constants import ASCII_MISSING, MIN_AR_POLYGON
from .exceptions import (
    MismatchedAmbientError,
    MissingValueError,
    NonPropagatableError,
    ParseError,
    PreconditionError,
    ZeroValueError,
)
from .laurent import LaurentPoly
from .logging_util import get_logger

Value = Fraction | LaurentPoly
V = TypeVar("V", Fraction, LaurentPoly)


def _is_zero(value: Value) -> bool:
    if isinstance(value, LaurentPoly):
        return value.is_zero()
    return value == 0


def format_value(value: Value) -> str:
    """Exact text: integers plainly, other rationals as num/den."""
    return str(value)


@dataclass(frozen=True)
class Frieze:
    """Exact values on arcs of the n-gon, outside the arcs crossing ``frozen``."""

    n: int
    frozen: frozenset[Arc]
    values: dict[Arc, Value] = field(hash=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", dict(sorted(self.values.items())))

    def __getitem__(self, arc: Arc) -> Value:
        if arc not in self.values:
            raise MissingValueError(str(arc), f"frieze on the {self.n}-gon")
        return self.values[arc]

    def __contains__(self, arc: object) -> bool:
        return arc in self.values

    def get(self, arc: Arc) -> Value | None:
        return self.values.get(arc)

    def arcs(self) -> list[Arc]:
        return list(self.values)

    def is_positive_integral(self) -> bool:
        return all(
            isinstance(v, Fraction) and v.denominator == 1 and v > 0
            for v in self.values.values()
        )


@dataclass(frozen=True)
class MeshViolation:
    """A mesh where F(X) F(tau X) differs from the product of F(E_i) plus one."""

    end: Arc
    start: Arc
    middle: tuple[Arc, ...]
    lhs: Value
    rhs: Value

    def __str__(self) -> str:
        middle = " + ".join(str(e) for e in self.middle) or "0"
        return (
            f"mesh {self.start} -> {middle} -> {self.end}: "
            f"{format_value(self.lhs)} != {format_value(self.rhs)}"
        )


def _product(values: Iterable[Any]) -> Any:
    result: Any = None
    for v in values:
        result = v if result is None else result * v
    return 1 if result is None else result


# =============================================================================
# Flip propagation
# =============================================================================


def propagate_flips(
    triangulation: Triangulation,
    seeds: Mapping[Arc, V],
    frozen: Iterable[Arc] = (),
    reverse: bool = False,
) -> dict[Arc, V]:
    """Value every arc reachable by flips, via p_e p_e' = p_ab p_cd + p_ad p_bc.

    Starting from ``triangulation`` with values on its diagonals and on the
    boundary, the flip graph is walked breadth first; each flip of e in the
    quadrilateral (a, b, c, d) values the new diagonal e' if it has no value
    yet. Arcs in ``frozen`` are never flipped, so only arcs crossing none of
    them are reached. ``reverse`` flips diagonals in the opposite order,
    which walks different paths through the flip graph.

    Raises:
        MissingValueError: If a seed value is missing
        ZeroValueError: If a seed or a propagated value is zero
    """
    n = triangulation.n
    cuts = frozenset(frozen)
    values: dict[Arc, V] = dict(seeds)
    for arc in enumerate_arcs(n):
        if triangulation.contains(arc):
            if arc not in values:
                raise MissingValueError(str(arc), "flip seeds")
            if _is_zero(values[arc]):
                raise ZeroValueError(str(arc), "flip seeds")

    def p(x: int, y: int) -> V:
        return values[Arc.from_endpoints(n, x, y)]

    wanted = set(compatible_arcs(n, cuts))
    queue = deque([triangulation])
    seen = {triangulation.diagonals}
    while queue and not wanted.issubset(values):
        current = queue.popleft()
        for diagonal in sorted(current.diagonals, reverse=reverse):
            if diagonal in cuts:
                continue
            flipped, (a, b, c, d) = flip(current, diagonal)
            new_arc = Arc.from_endpoints(n, b, d)
            if new_arc not in values:
                value = (p(a, b) * p(c, d) + p(a, d) * p(b, c)) / values[diagonal]
                if _is_zero(value):
                    raise ZeroValueError(str(new_arc), f"flip of {diagonal}")
                values[new_arc] = value
            if flipped.diagonals not in seen:
                seen.add(flipped.diagonals)
                queue.append(flipped)
    return values


def ptolemy_frieze(
    n: int,
    triangulation: Triangulation,
    init: Mapping[Arc, Fraction | int] | None = None,
    reverse: bool = False,
) -> Frieze:
    """Frieze on all arcs from values on the triangulation and the boundary.

    ``init`` overrides the default value 1 on diagonals of the triangulation
    and on boundary arcs.

    Raises:
        PreconditionError: If ``init`` names an arc outside T and the boundary
        ZeroValueError: If a seed or a propagated value is zero
    """
    if triangulation.n != n:
        raise MismatchedAmbientError(f"n={n}", f"triangulation on {triangulation.n}-gon")
    seeds = {a: Fraction(1) for a in enumerate_arcs(n) if triangulation.contains(a)}
    for arc, value in (init or {}).items():
        if arc not in seeds:
            raise PreconditionError(
                "ptolemy_frieze", f"{arc} is neither a diagonal of T nor a boundary arc"
            )
        seeds[arc] = Fraction(value)
    values = propagate_flips(triangulation, seeds, reverse=reverse)
    get_logger().debug(f"Ptolemy frieze of {triangulation} on {n}-gon: {len(values)} values")
    return Frieze(n, frozenset(), dict(values))


# =============================================================================
# Mesh friezes
# =============================================================================


def mesh_slice(quiver: TranslationQuiver) -> list[Arc]:
    """Seeding slice: in each piece, the arcs from its first vertex.

    For C(2,n) itself this is {M_{1,j}}.
    """
    decomposition = cut_polygon(quiver.n, quiver.frozen)
    vertices = set(quiver.non_projectives)
    result = []
    for piece in decomposition.pieces:
        if len(piece) < MIN_AR_POLYGON:
            continue
        for other in piece[2:-1]:
            arc = Arc.from_endpoints(quiver.n, piece[0], other)
            if arc in vertices:
                result.append(arc)
    return sorted(result)


def mesh_frieze(
    quiver: TranslationQuiver,
    boundary: Mapping[Arc, Fraction | int] | None = None,
    slice_values: Mapping[Arc, Fraction | int] | None = None,
) -> Frieze:
    """The frieze satisfying F(X) F(tau X) = prod F(E_i) + 1 on every mesh.

    Projectives take their values from ``boundary`` (default 1), the slice
    of :func:`mesh_slice` from ``slice_values`` (default 1), and every other
    value is propagated across meshes until nothing changes.

    Raises:
        MissingValueError: If ``boundary`` is given but misses a projective
        PreconditionError: If ``slice_values`` names an arc off the slice
        ZeroValueError: If a division by zero is needed
        NonPropagatableError: If some vertices stay unreached
    """
    values: dict[Arc, Fraction] = {}
    for p in sorted(quiver.projectives):
        if boundary is None:
            values[p] = Fraction(1)
        elif p in boundary:
            values[p] = Fraction(boundary[p])
        else:
            raise MissingValueError(str(p), "mesh frieze boundary")

    seeds = mesh_slice(quiver)
    for arc in seeds:
        values[arc] = Fraction(1)
    for arc, value in (slice_values or {}).items():
        if arc not in seeds:
            raise PreconditionError("mesh_frieze", f"{arc} is not on the seeding slice")
        values[arc] = Fraction(value)

    meshes = ar_sequences(quiver)
    changed = True
    while changed:
        changed = False
        for start, middle, end in meshes:
            if (end in values) == (start in values):
                continue
            if any(e not in values for e in middle):
                continue
            known, unknown = (end, start) if end in values else (start, end)
            rhs = _product(values[e] for e in middle) + 1
            if values[known] == 0:
                raise ZeroValueError(str(known), f"mesh ending at {end}")
            values[unknown] = Fraction(rhs) / values[known]
            if values[unknown] == 0:
                raise ZeroValueError(str(unknown), f"mesh ending at {end}")
            changed = True

    missing = [str(v) for v in quiver.vertices if v not in values]
    if missing:
        raise NonPropagatableError(missing)
    return Frieze(quiver.n, quiver.frozen, dict(values))


def restrict_frieze(frieze: Frieze, frozen: Iterable[Arc]) -> Frieze:
    """Restrict a frieze to the arcs crossing no member of X.

    Raises:
        NotRigidError: If X is not rigid
        MissingValueError: If a member of X has no value
    """
    members = frozenset(frozen)
    cut_polygon(frieze.n, members | frieze.frozen)
    for x in sorted(members):
        if x not in frieze:
            raise MissingValueError(str(x), "frieze being restricted")
    keep = compatible_arcs(frieze.n, members)
    values = {a: frieze.values[a] for a in keep if a in frieze.values}
    return Frieze(frieze.n, frieze.frozen | members, values)


# =============================================================================
# Checks
# =============================================================================


def mesh_check(quiver: TranslationQuiver, frieze: Frieze) -> list[MeshViolation]:
    """Every AR triple of the quiver whose mesh relation fails.

    Raises:
        MissingValueError: If a vertex in some mesh has no value
    """
    violations = []
    for start, middle, end in ar_sequences(quiver):
        lhs = frieze[end] * frieze[start]
        rhs = _product(frieze[e] for e in middle) + 1
        if lhs != rhs:
            violations.append(MeshViolation(end, start, tuple(middle), lhs, rhs))
    return violations


def ptolemy_check(
    n: int, frieze: Frieze, pieces: SubpolygonDecomposition | None = None
) -> list[tuple[int, int, int, int]]:
    """Quadruples i<j<k<l where p_ik p_jl != p_ij p_kl + p_il p_jk.

    With ``pieces`` only quadruples inside a single piece are checked.

    Raises:
        MissingValueError: If an arc in scope has no value
    """
    if pieces is None:
        quadruples = list(combinations(range(1, n + 1), 4))
    else:
        quadruples = sorted({q for piece in pieces.pieces for q in combinations(piece, 4)})

    def p(x: int, y: int) -> Value:
        return frieze[Arc.from_endpoints(n, x, y)]

    violations = []
    for i, j, k, l in quadruples:
        if p(i, k) * p(j, l) != p(i, j) * p(k, l) + p(i, l) * p(j, k):
            violations.append((i, j, k, l))
    return violations


def is_unitary(frieze: Frieze, decomposition: SubpolygonDecomposition) -> bool:
    """True if every edge of every piece carries the value 1."""
    return all(
        frieze[edge] == 1
        for index in range(len(decomposition.pieces))
        for edge in decomposition.piece_edges(index)
    )


def piece_friezes(
    frieze: Frieze, frozen: Iterable[Arc] | None = None
) -> list[tuple[tuple[int, ...], Frieze]]:
    """Split a reduced frieze into one frieze per piece of the cut polygon.

    Each piece of size m is relabelled as an m-gon. A piece whose edges all
    carry 1 gives a classical frieze; otherwise it is a frieze with
    coefficients.
    """
    members = frozenset(frozen) if frozen is not None else frieze.frozen
    decomposition = cut_polygon(frieze.n, members)
    result = []
    for index, piece in enumerate(decomposition.pieces):
        local = {}
        for a, b in combinations(piece, 2):
            arc = Arc.from_endpoints(frieze.n, a, b)
            local[decomposition.local_arc(index, arc)] = frieze[arc]
        result.append((piece, Frieze(len(piece), frozenset(), local)))
    return result


def quiddity_row(frieze: Frieze) -> tuple[Value | None, ...]:
    """Values F(M_{i-1,i+1}) for i = 1..n, the second row of the frieze."""
    n = frieze.n
    return tuple(frieze.get(Arc.from_endpoints(n, i - 1, i + 1)) for i in range(1, n + 1))


# =============================================================================
# Serialization
# =============================================================================


def render_ascii(frieze: Frieze) -> str:
    """Rows by arc span 1..n//2; row l lists F(M_{i,i+l}) for i = 1..n.

    Row l is shifted right by l-1 half-columns. Arcs without a value are
    shown as '.'.
    """
    n = frieze.n
    rows = []
    for span in range(1, n // 2 + 1):
        row = []
        for i in range(1, n + 1):
            value = frieze.get(Arc.from_endpoints(n, i, i + span))
            row.append(ASCII_MISSING if value is None else format_value(value))
        rows.append(row)
    width = max(len(cell) for row in rows for cell in row) + 1
    if width % 2:
        width += 1
    lines = []
    for span, row in enumerate(rows, start=1):
        offset = " " * ((span - 1) * width // 2)
        lines.append((offset + "".join(c.rjust(width - 1) + " " for c in row)).rstrip())
    return "\n".join(lines) + "\n"


def frieze_to_json(frieze: Frieze) -> str:
    """Serialize a numeric frieze with fields n, frozen, values.

    Raises:
        PreconditionError: If a value is a Laurent polynomial
    """
    records = []
    for arc, value in frieze.values.items():
        if not isinstance(value, Fraction):
            raise PreconditionError("frieze_to_json", "only numeric friezes serialize")
        records.append({"arc": [arc.i, arc.j], "value": format_value(value)})
    payload = {
        "n": frieze.n,
        "frozen": [[a.i, a.j] for a in sorted(frieze.frozen)],
        "values": records,
    }
    return json.dumps(payload, indent=2) + "\n"


def frieze_from_json(text: str) -> Frieze:
    """Parse the output of :func:`frieze_to_json`.

    Raises:
        ParseError: If the document does not follow the schema
    """
    try:
        data = json.loads(text)
        n = int(data["n"])
        frozen = frozenset(Arc.from_endpoints(n, a, b) for a, b in data["frozen"])
        values: dict[Arc, Value] = {
            Arc.from_endpoints(n, *record["arc"]): Fraction(record["value"])
            for record in data["values"]
        }
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as e:
        snippet = text[:40].replace("\n", " ")
        raise ParseError(snippet, f"not a frieze document: {e}")
    return Frieze(n, frozen, values)
