"""Cluster characters of arcs as Laurent polynomials in a triangulation's seed.

The variables are the diagonals of T followed by the boundary arcs, which
play the role of frozen variables. :func:`plucker_character` runs the flip
propagation with formal seeds. :func:`cc_character_fan` is an independent
oracle for fan triangulations: the stable endomorphism quiver is then a
linearly oriented type A quiver, the module attached to an arc is an
interval module, and the Caldero-Chapoton sum runs over its submodules.
"""

from dataclasses import dataclass
from functools import lru_cache

from .combinatorics import (
    Arc,
    Triangulation,
    boundary_arcs,
    compatible_arcs,
    crossing,
    fan_diagonals,
    fan_triangulation,
    is_fan,
    is_rigid,
)
from .exceptions import MismatchedAmbientError, NotFanError, PreconditionError
from .frieze import Frieze, propagate_flips
from .laurent import LaurentPoly
from .logging_util import get_logger


def seed_variables(triangulation: Triangulation) -> tuple[Arc, ...]:
    """Variable order: sorted diagonals of T, then sorted boundary arcs."""
    return tuple(triangulation.sorted_diagonals()) + tuple(boundary_arcs(triangulation.n))


def _seeds(triangulation: Triangulation) -> dict[Arc, LaurentPoly]:
    variables = seed_variables(triangulation)
    return {arc: LaurentPoly.variable(variables, arc) for arc in variables}


@lru_cache(maxsize=None)
def _characters(triangulation: Triangulation, reverse: bool) -> dict[Arc, LaurentPoly]:
    values = propagate_flips(triangulation, _seeds(triangulation), reverse=reverse)
    get_logger().debug(f"Characters over seed {triangulation}: {len(values)} arcs")
    return values


def plucker_frieze(n: int, triangulation: Triangulation, reverse: bool = False) -> Frieze:
    """Every character of the seed T, as a Laurent-valued frieze."""
    if triangulation.n != n:
        raise MismatchedAmbientError(f"n={n}", f"triangulation on {triangulation.n}-gon")
    return Frieze(n, frozenset(), dict(_characters(triangulation, reverse)))


def plucker_character(n: int, triangulation: Triangulation, arc: Arc) -> LaurentPoly:
    """Character of an arc over the seed of T, by symbolic Ptolemy flips.

    Raises:
        NonExactDivisionError: If a flip division is not exact, which would be a bug
    """
    if triangulation.n != n or arc.n != n:
        raise MismatchedAmbientError(f"n={n}", f"triangulation on {triangulation.n}-gon")
    return _characters(triangulation, False)[arc]


# =============================================================================
# Fan oracle
# =============================================================================


@dataclass(frozen=True)
class StringModuleSpec:
    """Interval module over a linearly oriented type A quiver.

    ``quiver`` lists the vertices in order, with arrows q[t] -> q[t+1].
    ``support`` is the half-open index range [start, stop) where the module
    is one-dimensional; an empty range is the zero module.
    """

    quiver: tuple[Arc, ...]
    support: tuple[int, int]

    def __post_init__(self) -> None:
        start, stop = self.support
        if not 0 <= start <= stop <= len(self.quiver):
            raise PreconditionError("StringModuleSpec", f"bad interval {self.support}")

    @property
    def dimension_vector(self) -> tuple[int, ...]:
        start, stop = self.support
        return tuple(1 if start <= t < stop else 0 for t in range(len(self.quiver)))

    def submodules(self) -> list[tuple[int, ...]]:
        """Dimension vectors of all submodules.

        A subrepresentation must be closed under the arrows q[t] -> q[t+1],
        so the submodules are exactly the tails [cut, stop) of the interval.
        """
        start, stop = self.support
        size = len(self.quiver)
        return [
            tuple(1 if cut <= t < stop else 0 for t in range(size))
            for cut in range(start, stop + 1)
        ]


def fan_module(n: int, fan_vertex: int, arc: Arc) -> StringModuleSpec:
    """The interval of fan diagonals crossed by the arc."""
    diagonals = tuple(fan_diagonals(n, fan_vertex))
    crossed = [t for t, d in enumerate(diagonals) if crossing(d, arc)]
    if not crossed:
        return StringModuleSpec(diagonals, (0, 0))
    return StringModuleSpec(diagonals, (crossed[0], crossed[-1] + 1))


def cc_character_fan(n: int, fan_vertex: int, arc: Arc) -> LaurentPoly:
    """Caldero-Chapoton character of an arc for the fan at ``fan_vertex``.

    Frozen variables are set to 1. With m the dimension vector of the
    interval module and e that of a submodule, the exponent of x_i is
    -m_i + sum over arrows j -> i of e_j + sum over arrows i -> j of (m_j - e_j),
    and every quiver Grassmannian here is a point.
    """
    triangulation = fan_triangulation(n, fan_vertex)
    variables = seed_variables(triangulation)
    if arc.boundary:
        return LaurentPoly.constant(variables, 1)
    if arc in triangulation.diagonals:
        return LaurentPoly.variable(variables, arc)

    module = fan_module(n, fan_vertex, arc)
    m = module.dimension_vector
    size = len(module.quiver)
    positions = [variables.index(d) for d in module.quiver]
    terms: dict[tuple[int, ...], int] = {}
    for e in module.submodules():
        exponent = [0] * len(variables)
        for t in range(size):
            value = -m[t]
            if t > 0:
                value += e[t - 1]
            if t < size - 1:
                value += m[t + 1] - e[t + 1]
            exponent[positions[t]] = value
        key = tuple(exponent)
        terms[key] = terms.get(key, 0) + 1
    return LaurentPoly(variables, terms)


def cc_character(n: int, triangulation: Triangulation, arc: Arc) -> LaurentPoly:
    """Fan oracle on an explicit triangulation.

    Raises:
        NotFanError: If the triangulation is not a fan
    """
    vertex = is_fan(triangulation)
    if vertex is None:
        raise NotFanError(str(triangulation))
    return cc_character_fan(n, vertex, arc)


# =============================================================================
# Restriction
# =============================================================================


def restricted_characters(
    triangulation: Triangulation, frozen: frozenset[Arc], reverse: bool = False
) -> dict[Arc, LaurentPoly]:
    """Characters computed with flips confined to triangulations containing X."""
    return propagate_flips(
        triangulation, _seeds(triangulation), frozen=frozen, reverse=reverse
    )


def verify_restriction(
    n: int,
    triangulation: Triangulation,
    frozen: frozenset[Arc] | set[Arc],
    arcs: list[Arc] | None = None,
) -> bool:
    """Compare characters computed inside X^perp with the unrestricted ones.

    ``arcs`` defaults to every arc crossing no member of X.

    Raises:
        PreconditionError: If X is not rigid, not contained in T, or an arc crosses X
    """
    members = frozenset(frozen)
    if not is_rigid(members):
        raise PreconditionError("verify_restriction", "X is not rigid")
    if not members <= triangulation.diagonals:
        missing = ",".join(str(x) for x in sorted(members - triangulation.diagonals))
        raise PreconditionError("verify_restriction", f"X is not contained in T: {missing}")
    allowed = set(compatible_arcs(n, members))
    targets = sorted(allowed) if arcs is None else list(arcs)
    for arc in targets:
        if arc not in allowed:
            raise PreconditionError("verify_restriction", f"{arc} crosses X")

    restricted = restricted_characters(triangulation, members)
    full = _characters(triangulation, False)
    mismatched = [a for a in targets if restricted[a] != full[a]]
    for arc in mismatched:
        get_logger().warning(f"Restricted character of {arc} differs over seed {triangulation}")
    return not mismatched

