"""Cyclic-order primitives: k-subsets, arcs, crossing, triangulations and cuts.

Vertices of the n-gon are the representatives 1..n of Z/n. Arcs are stored
normalized as (i, j) with i < j, so the arc (1, n) is a boundary edge.
Triangulations store their diagonals only; the n boundary arcs are always
implicitly present.
"""

from collections.abc import Iterable
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product

from .constants import MIN_POLYGON
from .exceptions import (
    BoundaryArcError,
    DegeneratePolygonError,
    InvalidSubsetError,
    InvalidTriangulationError,
    MismatchedAmbientError,
    NotRigidError,
    PreconditionError,
)


def reduce_vertex(n: int, v: int) -> int:
    """Map any integer to its representative in 1..n."""
    return (v - 1) % n + 1


def cyclically_ordered(points: Iterable[int]) -> bool:
    """Return True if the points are strictly increasing after rotation.

    The sequence is rotated so that its minimal element comes first, which
    removes any ambiguity about where the cycle starts.
    """
    seq = list(points)
    if len(set(seq)) != len(seq):
        return False
    start = seq.index(min(seq))
    rotated = seq[start:] + seq[:start]
    return rotated == sorted(rotated)


@dataclass(frozen=True, order=True)
class KSubset:
    """A k-element subset of Z/n labelling the rank-1 module M_I."""

    n: int
    elements: tuple[int, ...]

    def __post_init__(self) -> None:
        elements = tuple(self.elements)
        object.__setattr__(self, "elements", elements)
        k = len(elements)
        if not 1 <= k <= self.n - 1:
            raise InvalidSubsetError(self.n, elements, f"size {k} outside [1, n-1]")
        if any(not 1 <= e <= self.n for e in elements):
            raise InvalidSubsetError(self.n, elements, "element outside [1, n]")
        if any(a >= b for a, b in zip(elements, elements[1:])):
            raise InvalidSubsetError(self.n, elements, "elements must be strictly increasing")

    @classmethod
    def from_elements(cls, n: int, elements: Iterable[int]) -> "KSubset":
        """Build a subset from unordered, possibly unreduced, elements."""
        return cls(n, tuple(sorted(reduce_vertex(n, e) for e in elements)))

    @property
    def k(self) -> int:
        return len(self.elements)

    def __str__(self) -> str:
        return "{" + ",".join(str(e) for e in self.elements) + "}"


@dataclass(frozen=True, order=True)
class Arc(KSubset):
    """A 2-subset, i.e. an arc of the n-gon. Boundary arcs are projective."""

    def __post_init__(self) -> None:
        super().__post_init__()
        if len(self.elements) != 2:
            raise InvalidSubsetError(self.n, self.elements, "an arc has exactly two endpoints")

    @classmethod
    def from_endpoints(cls, n: int, a: int, b: int) -> "Arc":
        """Build the normalized arc between two vertices, reducing mod n."""
        a, b = reduce_vertex(n, a), reduce_vertex(n, b)
        if a == b:
            raise InvalidSubsetError(n, (a, b), "endpoints coincide")
        return _arc(n, min(a, b), max(a, b))

    @property
    def i(self) -> int:
        return self.elements[0]

    @property
    def j(self) -> int:
        return self.elements[1]

    @property
    def boundary(self) -> bool:
        """True iff the endpoints are cyclically adjacent."""
        return self.j - self.i == 1 or (self.i == 1 and self.j == self.n)

    def rotate(self, shift: int = 1) -> "Arc":
        """Return the arc with both endpoints shifted by ``shift``."""
        return Arc.from_endpoints(self.n, self.i + shift, self.j + shift)

    def __str__(self) -> str:
        return f"({self.i},{self.j})"


@lru_cache(maxsize=None)
def _arc(n: int, i: int, j: int) -> Arc:
    # One shared instance per (n, i, j).
    return Arc(n, (i, j))


def _check_ambient(first: KSubset, second: KSubset) -> None:
    if first.n != second.n or first.k != second.k:
        raise MismatchedAmbientError(
            f"{first} in n={first.n}, k={first.k}",
            f"{second} in n={second.n}, k={second.k}",
        )


def crossing(first: KSubset, second: KSubset) -> bool:
    """Return True if the two subsets cross (are not weakly separated).

    They cross iff cyclically ordered a, b, c, d exist with a, c in
    ``first - second`` and b, d in ``second - first``. Equivalently, reading
    the symmetric difference around the circle and labelling each element by
    the side it comes from, the labels change at least four times.

    Raises:
        MismatchedAmbientError: If n or k differ
    """
    _check_ambient(first, second)
    left = set(first.elements) - set(second.elements)
    right = set(second.elements) - set(first.elements)
    labels = [p in left for p in sorted(left | right)]
    if not labels:
        return False
    changes = sum(1 for idx in range(len(labels)) if labels[idx] != labels[idx - 1])
    return changes >= 4


@lru_cache(maxsize=None)
def _arcs(n: int) -> tuple[Arc, ...]:
    return tuple(_arc(n, i, j) for i, j in combinations(range(1, n + 1), 2))


def enumerate_arcs(n: int) -> list[Arc]:
    """List all C(n,2) arcs of the n-gon in lexicographic order.

    Raises:
        DegeneratePolygonError: If n < 3
    """
    if n < MIN_POLYGON:
        raise DegeneratePolygonError(n, MIN_POLYGON)
    return list(_arcs(n))


def boundary_arcs(n: int) -> list[Arc]:
    """List the n boundary arcs in lexicographic order."""
    return [a for a in enumerate_arcs(n) if a.boundary]


def enumerate_diagonals(n: int) -> list[Arc]:
    """List the non-boundary arcs in lexicographic order."""
    return [a for a in enumerate_arcs(n) if not a.boundary]


def is_rigid(subsets: Iterable[KSubset]) -> bool:
    """Return True if the subsets are pairwise non-crossing.

    Raises:
        MismatchedAmbientError: If the members do not share n and k
    """
    return find_crossing_pair(subsets) is None


def find_crossing_pair(subsets: Iterable[KSubset]) -> tuple[KSubset, KSubset] | None:
    """Return the first crossing pair in deterministic order, if any."""
    members = sorted(set(subsets), key=lambda s: (s.n, s.elements))
    for first, second in combinations(members, 2):
        if crossing(first, second):
            return first, second
    return None


def compatible_arcs(n: int, frozen: Iterable[Arc]) -> list[Arc]:
    """List the arcs crossing no member of ``frozen``, the objects of the reduction."""
    cuts = list(frozen)
    return [a for a in enumerate_arcs(n) if not any(crossing(a, x) for x in cuts)]


def _require_rigid_diagonals(n: int, arcs: Iterable[Arc], context: str) -> frozenset[Arc]:
    members = frozenset(arcs)
    for a in sorted(members):
        if a.n != n:
            raise MismatchedAmbientError(f"{a} in n={a.n}", f"n={n}")
        if a.boundary:
            raise BoundaryArcError(str(a), context)
    pair = find_crossing_pair(members)
    if pair is not None:
        raise NotRigidError(str(pair[0]), str(pair[1]))
    return members


def enumerate_rigid_sets(n: int, max_size: int) -> list[frozenset[Arc]]:
    """List every rigid set of at most ``max_size`` diagonals, smallest first."""
    diagonals = enumerate_diagonals(n)
    result: list[frozenset[Arc]] = []
    for size in range(max_size + 1):
        for combo in combinations(diagonals, size):
            if is_rigid(combo):
                result.append(frozenset(combo))
    return result


def catalan(m: int) -> int:
    """Catalan number via C_m = sum C_i C_{m-1-i}."""
    values = [1]
    for size in range(1, m + 1):
        values.append(sum(values[i] * values[size - 1 - i] for i in range(size)))
    return values[m]


@dataclass(frozen=True)
class Triangulation:
    """A maximal set of pairwise non-crossing diagonals of the n-gon."""

    n: int
    diagonals: frozenset[Arc]

    def __post_init__(self) -> None:
        diagonals = frozenset(self.diagonals)
        object.__setattr__(self, "diagonals", diagonals)
        if self.n < MIN_POLYGON:
            raise InvalidTriangulationError(self.n, "polygon needs at least 3 vertices")
        for d in diagonals:
            if d.n != self.n:
                raise InvalidTriangulationError(self.n, f"{d} lives on a {d.n}-gon")
            if d.boundary:
                raise InvalidTriangulationError(self.n, f"{d} is a boundary arc")
        pair = find_crossing_pair(diagonals)
        if pair is not None:
            raise InvalidTriangulationError(self.n, f"{pair[0]} crosses {pair[1]}")
        if len(diagonals) != self.n - 3:
            raise InvalidTriangulationError(
                self.n, f"expected {self.n - 3} diagonals, got {len(diagonals)}"
            )

    @classmethod
    def _trusted(cls, n: int, diagonals: frozenset[Arc]) -> "Triangulation":
        """Wrap diagonals already known to form a triangulation, skipping the checks."""
        triangulation = object.__new__(cls)
        object.__setattr__(triangulation, "n", n)
        object.__setattr__(triangulation, "diagonals", diagonals)
        return triangulation

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Triangulation":
        """Build a triangulation from endpoint pairs."""
        return cls(n, frozenset(Arc.from_endpoints(n, a, b) for a, b in pairs))

    def contains(self, arc: Arc) -> bool:
        """True if the arc is a diagonal of the triangulation or a boundary arc."""
        return arc.boundary or arc in self.diagonals

    def sorted_diagonals(self) -> list[Arc]:
        return sorted(self.diagonals)

    def __str__(self) -> str:
        return "{" + ";".join(f"{d.i},{d.j}" for d in self.sorted_diagonals()) + "}"


def fan_triangulation(n: int, v: int) -> Triangulation:
    """The triangulation whose diagonals all meet vertex v."""
    return Triangulation(n, frozenset(fan_diagonals(n, v)))


def fan_diagonals(n: int, v: int) -> list[Arc]:
    """Diagonals of the fan at v, ordered cyclically starting from (v, v+2)."""
    if n < MIN_POLYGON:
        raise DegeneratePolygonError(n, MIN_POLYGON)
    return [Arc.from_endpoints(n, v, v + step) for step in range(2, n - 1)]


def is_fan(triangulation: Triangulation) -> int | None:
    """Return the smallest fan vertex of the triangulation, or None."""
    for v in range(1, triangulation.n + 1):
        if all(v in d.elements for d in triangulation.diagonals):
            return v
    return None


def flip(triangulation: Triangulation, diagonal: Arc) -> tuple[Triangulation, tuple[int, int, int, int]]:
    """Flip a diagonal inside the quadrilateral formed by its two triangles.

    Returns:
        The flipped triangulation and the quadrilateral (a, b, c, d), cyclically
        ordered, where (a, c) is the removed and (b, d) the new diagonal

    Raises:
        PreconditionError: If the arc is not a diagonal of the triangulation
    """
    if diagonal not in triangulation.diagonals:
        raise PreconditionError("flip", f"{diagonal} is not a diagonal of {triangulation}")
    n = triangulation.n
    a, c = diagonal.i, diagonal.j

    def present(x: int, y: int) -> bool:
        return triangulation.contains(Arc.from_endpoints(n, x, y))

    b = next(v for v in range(a + 1, c) if present(a, v) and present(v, c))
    outside = [v for v in range(c + 1, n + 1)] + [v for v in range(1, a)]
    d = next(v for v in outside if present(a, v) and present(c, v))
    new_diagonals = (triangulation.diagonals - {diagonal}) | {Arc.from_endpoints(n, b, d)}
    # A flip inside its quadrilateral keeps the diagonals non-crossing.
    return Triangulation._trusted(n, new_diagonals), (a, b, c, d)


def quiddity(triangulation: Triangulation) -> tuple[int, ...]:
    """Number of triangles of the triangulation at each vertex 1..n."""
    n = triangulation.n
    degree = [0] * (n + 1)
    for d in triangulation.diagonals:
        degree[d.i] += 1
        degree[d.j] += 1
    return tuple(1 + degree[v] for v in range(1, n + 1))


@dataclass(frozen=True)
class SubpolygonDecomposition:
    """Faces of the n-gon cut along a rigid set of diagonals."""

    n: int
    pieces: tuple[tuple[int, ...], ...]
    frozen: frozenset[Arc]

    @property
    def sizes(self) -> list[int]:
        return [len(p) for p in self.pieces]

    def piece_edges(self, index: int) -> list[Arc]:
        """Edges of a piece, each a boundary arc or a frozen arc."""
        piece = self.pieces[index]
        return [
            Arc.from_endpoints(self.n, piece[t], piece[(t + 1) % len(piece)])
            for t in range(len(piece))
        ]

    def pieces_containing(self, arc: Arc) -> list[int]:
        """Indices of the pieces that contain both endpoints of the arc."""
        return [
            idx
            for idx, piece in enumerate(self.pieces)
            if arc.i in piece and arc.j in piece
        ]

    def piece_of(self, arc: Arc) -> int:
        """Index of the unique piece containing a non-frozen arc.

        Raises:
            PreconditionError: If the arc lies in no piece or on a cut
        """
        found = self.pieces_containing(arc)
        if len(found) != 1:
            raise PreconditionError(
                "piece_of", f"{arc} lies in {len(found)} pieces of the decomposition"
            )
        return found[0]

    def local_arc(self, index: int, arc: Arc) -> Arc:
        """Relabel an arc of a piece as an arc of the m-gon, m the piece size."""
        piece = self.pieces[index]
        return Arc.from_endpoints(len(piece), piece.index(arc.i) + 1, piece.index(arc.j) + 1)


def cut_polygon(n: int, frozen: Iterable[Arc]) -> SubpolygonDecomposition:
    """Cut the n-gon along a rigid set of diagonals.

    Pieces are listed by their cyclically ordered vertices, sorted
    lexicographically.

    Raises:
        NotRigidError: If two frozen arcs cross
        BoundaryArcError: If a frozen arc is a boundary arc
    """
    if n < MIN_POLYGON:
        raise DegeneratePolygonError(n, MIN_POLYGON)
    cuts = _require_rigid_diagonals(n, frozen, "cut_polygon")
    pieces: list[tuple[int, ...]] = [tuple(range(1, n + 1))]
    for cut in sorted(cuts):
        a, b = cut.i, cut.j
        idx = next(t for t, p in enumerate(pieces) if a in p and b in p)
        piece = pieces.pop(idx)
        pieces.append(tuple(v for v in piece if a <= v <= b))
        pieces.append(tuple(v for v in piece if v <= a or v >= b))
    return SubpolygonDecomposition(n, tuple(sorted(pieces)), cuts)


@lru_cache(maxsize=None)
def _triangulate_piece(piece: tuple[int, ...]) -> tuple[frozenset[tuple[int, int]], ...]:
    # The triangle on the edge (first, last) has a unique apex.
    if len(piece) <= 3:
        return (frozenset(),)
    first, last = piece[0], piece[-1]
    result: list[frozenset[tuple[int, int]]] = []
    for k in range(1, len(piece) - 1):
        apex = piece[k]
        own: set[tuple[int, int]] = set()
        if k > 1:
            own.add((first, apex))
        if k < len(piece) - 2:
            own.add((apex, last))
        for left, right in product(_triangulate_piece(piece[: k + 1]), _triangulate_piece(piece[k:])):
            result.append(frozenset(own) | left | right)
    return tuple(result)


def enumerate_triangulations(n: int, required: Iterable[Arc] = ()) -> list[Triangulation]:
    """Every triangulation of the n-gon containing the required diagonals.

    The polygon is cut along ``required`` and each piece is triangulated
    independently. Results are sorted by their diagonal lists.

    Raises:
        NotRigidError: If two required arcs cross
        BoundaryArcError: If a required arc is a boundary arc
    """
    decomposition = cut_polygon(n, required)
    per_piece = [_triangulate_piece(p) for p in decomposition.pieces]
    triangulations = []
    for choice in product(*per_piece):
        pairs = set().union(*choice) if choice else set()
        diagonals = {_arc(n, *pair) for pair in pairs} | decomposition.frozen
        triangulations.append(Triangulation._trusted(n, frozenset(diagonals)))
    triangulations.sort(key=lambda t: t.sorted_diagonals())
    return triangulations
