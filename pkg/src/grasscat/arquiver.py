"""Auslander-Reiten translation quivers of C(2,n) and of its reductions.

Vertices are arcs. In C(2,n) every arc is an indecomposable object, the
boundary arcs are the projective-injectives, and tau rotates an arc by one
step. The reduction at a rigid set X keeps the arcs crossing nothing in X,
adds X to the projectives, and rotates each remaining arc inside its piece
of the cut polygon. Arrows of a reduction come from the radical oracle: an
arrow I -> J exists iff the generator phi^I_J has no defect-0 factorization
through a third vertex.
"""

import json
from collections import Counter
from collections.abc import Iterable
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import permutations

import networkx as nx
from networkx.algorithms import isomorphism

from .combinatorics import (
    Arc,
    compatible_arcs,
    crossing,
    cut_polygon,
    enumerate_arcs,
    enumerate_triangulations,
)
from .constants import DOT_VERTEX_TEMPLATE, MIN_AR_POLYGON
from .exceptions import (
    DegeneratePolygonError,
    GrasscatError,
    InvalidTranslationQuiverError,
    ParseError,
)
from .logging_util import get_logger
from .morphisms import MonomialMorphism, SignedMorphism, factors_through, hom_generator


@dataclass(frozen=True)
class TranslationQuiver:
    """Labelled vertices, arrows, a partial translation and projective flags.

    ``frozen`` records the rigid set the quiver was reduced at (empty for
    C(2,n) itself). Vertices and arrows are kept sorted so that equal quivers
    compare equal and serialize identically.
    """

    n: int
    frozen: frozenset[Arc]
    vertices: tuple[Arc, ...]
    arrows: tuple[tuple[Arc, Arc], ...]
    tau: dict[Arc, Arc] = field(hash=False)
    projectives: frozenset[Arc]

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(sorted(self.vertices)))
        object.__setattr__(self, "arrows", tuple(sorted(self.arrows)))
        object.__setattr__(self, "tau", dict(sorted(self.tau.items())))

    @property
    def non_projectives(self) -> list[Arc]:
        return [v for v in self.vertices if v not in self.projectives]

    @cached_property
    def _adjacency(self) -> tuple[dict[Arc, list[Arc]], dict[Arc, list[Arc]]]:
        into: dict[Arc, list[Arc]] = {}
        out_of: dict[Arc, list[Arc]] = {}
        for a, b in self.arrows:
            into.setdefault(b, []).append(a)
            out_of.setdefault(a, []).append(b)
        return into, out_of

    def sources_into(self, vertex: Arc) -> list[Arc]:
        return list(self._adjacency[0].get(vertex, ()))

    def targets_out_of(self, vertex: Arc) -> list[Arc]:
        return list(self._adjacency[1].get(vertex, ()))

    def middle(self, vertex: Arc) -> list[Arc]:
        """Middle term of the AR sequence ending at a non-projective vertex."""
        return sorted(self.sources_into(vertex))

    def to_graph(self) -> nx.MultiDiGraph:
        """The quiver as a networkx multigraph, edges tagged kind=arrow|tau."""
        graph = nx.MultiDiGraph()
        for v in self.vertices:
            graph.add_node(v, projective=v in self.projectives)
        for a, b in self.arrows:
            graph.add_edge(a, b, kind="arrow")
        for x, tx in self.tau.items():
            graph.add_edge(x, tx, kind="tau")
        return graph


def validate(quiver: TranslationQuiver) -> list[str]:
    """List every violated translation-quiver invariant (empty = valid)."""
    problems = []
    vertex_set = set(quiver.vertices)
    if set(quiver.tau) != vertex_set - quiver.projectives:
        problems.append("tau is not defined exactly on the non-projective vertices")
    if len(set(quiver.tau.values())) != len(quiver.tau):
        problems.append("tau is not injective")
    for target in quiver.tau.values():
        if target not in vertex_set:
            problems.append(f"tau value {target} is not a vertex")
    for arrow, count in Counter(quiver.arrows).items():
        if count > 1:
            problems.append(f"arrow {arrow[0]} -> {arrow[1]} has multiplicity {count}")
        if arrow[0] == arrow[1]:
            problems.append(f"loop at {arrow[0]}")
    for x in quiver.non_projectives:
        if x not in quiver.tau:
            continue
        into = sorted(quiver.sources_into(x))
        out_of = sorted(quiver.targets_out_of(quiver.tau[x]))
        if into != out_of:
            problems.append(
                f"mesh at {x}: sources {[str(a) for a in into]} "
                f"!= targets of tau {[str(a) for a in out_of]}"
            )
    return problems


def irreducible_arrows(vertex_set: Iterable[Arc], n: int) -> list[tuple[Arc, Arc]]:
    """Radical oracle: I -> J is an arrow iff phi^I_J never factors with defect 0.

    Factorizations through I or J themselves only add radical powers of t,
    so the middle object K ranges over the other vertices.
    """
    vertices = sorted(vertex_set)
    for v in vertices:
        if v.n != n:
            raise GrasscatError(f"Vertex {v} does not live on the {n}-gon")
    arrows = []
    for source, target in permutations(vertices, 2):
        if not any(
            factors_through(source, middle, target)
            for middle in vertices
            if middle != source and middle != target
        ):
            arrows.append((source, target))
    return arrows


def _checked(quiver: TranslationQuiver, label: str) -> TranslationQuiver:
    problems = validate(quiver)
    if problems:
        raise InvalidTranslationQuiverError(label, problems)
    return quiver


@lru_cache(maxsize=None)
def build_c2n(n: int) -> TranslationQuiver:
    """AR quiver of C(2,n) by the closed-form rule.

    Arrows are M_{i,j} -> M_{i-1,j} and M_{i,j} -> M_{i,j-1}, dropping
    degenerate labels, and tau(M_{i,j}) = M_{i+1,j+1}.

    Raises:
        DegeneratePolygonError: If n < 4
        InvalidTranslationQuiverError: If the result breaks a translation-quiver invariant
    """
    if n < MIN_AR_POLYGON:
        raise DegeneratePolygonError(n, MIN_AR_POLYGON)
    vertices = enumerate_arcs(n)
    arrows = []
    for arc in vertices:
        for a, b in ((arc.i - 1, arc.j), (arc.i, arc.j - 1)):
            if (a - b) % n != 0:
                arrows.append((arc, Arc.from_endpoints(n, a, b)))
    projectives = frozenset(a for a in vertices if a.boundary)
    tau = {a: a.rotate(1) for a in vertices if not a.boundary}
    get_logger().debug(f"Built C(2,{n}): {len(vertices)} vertices, {len(arrows)} arrows")
    return _checked(
        TranslationQuiver(n, frozenset(), tuple(vertices), tuple(arrows), tau, projectives),
        f"C(2,{n})",
    )


@lru_cache(maxsize=None)
def _reduce(n: int, frozen: frozenset[Arc]) -> TranslationQuiver:
    logger = get_logger()
    decomposition = cut_polygon(n, frozen)
    vertices = compatible_arcs(n, frozen)
    projectives = frozenset(a for a in vertices if a.boundary) | frozen

    tau = {}
    for arc in vertices:
        if arc in projectives:
            continue
        piece = decomposition.pieces[decomposition.piece_of(arc)]
        size = len(piece)
        succ_i = piece[(piece.index(arc.i) + 1) % size]
        succ_j = piece[(piece.index(arc.j) + 1) % size]
        tau[arc] = Arc.from_endpoints(n, succ_i, succ_j)

    arrows = irreducible_arrows(vertices, n)
    quiver = TranslationQuiver(n, frozen, tuple(vertices), tuple(arrows), tau, projectives)

    label = ",".join(str(x) for x in sorted(frozen)) or "none"
    logger.debug(
        f"Reduced C(2,{n}) at {label}: {len(vertices)} vertices, "
        f"{len(projectives)} projectives, {len(arrows)} arrows"
    )
    for x in quiver.non_projectives:
        middle = " + ".join(str(e) for e in quiver.middle(x))
        logger.info(f"AR sequence in reduction at {label}: {tau[x]} -> {middle} -> {x}")
    return _checked(quiver, f"the reduction of C(2,{n}) at {label}")


def reduce(n: int, frozen: Iterable[Arc]) -> TranslationQuiver:
    """AR quiver of the reduction X^perp at a rigid set of diagonals.

    Raises:
        NotRigidError: If two members of X cross
        BoundaryArcError: If X contains a boundary arc
        DegeneratePolygonError: If n < 4
        InvalidTranslationQuiverError: If the radical oracle breaks the mesh condition
    """
    if n < MIN_AR_POLYGON:
        raise DegeneratePolygonError(n, MIN_AR_POLYGON)
    members = frozenset(frozen)
    cut_polygon(n, members)
    return _reduce(n, members)


def ar_sequences(quiver: TranslationQuiver) -> list[tuple[Arc, list[Arc], Arc]]:
    """One (tau X, middle, X) triple per non-projective X."""
    return [(quiver.tau[x], quiver.middle(x), x) for x in quiver.non_projectives]


def stable_quiver(quiver: TranslationQuiver) -> TranslationQuiver:
    """Full subquiver on the non-projective vertices with tau restricted."""
    keep = set(quiver.non_projectives)
    arrows = tuple((a, b) for a, b in quiver.arrows if a in keep and b in keep)
    tau = {x: tx for x, tx in quiver.tau.items() if x in keep and tx in keep}
    return TranslationQuiver(
        quiver.n, quiver.frozen, tuple(sorted(keep)), arrows, tau, frozenset()
    )


def mesh_maps(
    quiver: TranslationQuiver, end: Arc
) -> tuple[tuple[MonomialMorphism, ...], tuple[SignedMorphism, ...]]:
    """Maps tau X -> (+) E -> X of the mesh ending at X, signs alternating.

    Raises:
        GrasscatError: If X is projective in the quiver
    """
    if end not in quiver.tau:
        raise GrasscatError(f"{end} is projective or not a vertex; no AR sequence ends there")
    start = quiver.tau[end]
    middle = quiver.middle(end)
    f = tuple(hom_generator(start, e) for e in middle)
    g = tuple(
        SignedMorphism(1 if idx % 2 == 0 else -1, hom_generator(e, end))
        for idx, e in enumerate(middle)
    )
    return f, g


# =============================================================================
# Iyama-Yoshino compatibility and cluster-tilting objects
# =============================================================================


def compatibility_map(n: int, frozen: Iterable[Arc]) -> dict[Arc, tuple[int, Arc]]:
    """Map each non-projective vertex of the reduction to (piece, local arc).

    Raises:
        NotRigidError: If X is not rigid
    """
    members = frozenset(frozen)
    decomposition = cut_polygon(n, members)
    quiver = reduce(n, members)
    mapping = {}
    for v in quiver.non_projectives:
        index = decomposition.piece_of(v)
        mapping[v] = (index, decomposition.local_arc(index, v))
    return mapping


def _disjoint_union_of_pieces(n: int, frozen: frozenset[Arc]) -> nx.MultiDiGraph:
    decomposition = cut_polygon(n, frozen)
    graph = nx.MultiDiGraph()
    for index, piece in enumerate(decomposition.pieces):
        if len(piece) < MIN_AR_POLYGON:
            continue
        local = stable_quiver(build_c2n(len(piece)))
        for v in local.vertices:
            graph.add_node((index, v))
        for a, b in local.arrows:
            graph.add_edge((index, a), (index, b), kind="arrow")
        for x, tx in local.tau.items():
            graph.add_edge((index, x), (index, tx), kind="tau")
    return graph


def iyama_yoshino_check(n: int, frozen: Iterable[Arc]) -> bool:
    """Check stable(reduce(n, X)) against the disjoint union of stable C(2,m_i).

    Two checks must agree: the explicit piece relabelling is a bijection
    that carries arrows to arrows and tau to tau, and the two coloured
    digraphs are isomorphic as abstract graphs.
    """
    members = frozenset(frozen)
    stable = stable_quiver(reduce(n, members))
    mapping = compatibility_map(n, members)
    union = _disjoint_union_of_pieces(n, members)

    if sorted(mapping.values()) != sorted(union.nodes):
        return False
    image = nx.MultiDiGraph()
    image.add_nodes_from(mapping[v] for v in stable.vertices)
    for a, b in stable.arrows:
        image.add_edge(mapping[a], mapping[b], kind="arrow")
    for x, tx in stable.tau.items():
        image.add_edge(mapping[x], mapping[tx], kind="tau")

    def edge_set(graph: nx.MultiDiGraph) -> list[tuple[object, object, str]]:
        return sorted(
            (repr(a), repr(b), data["kind"]) for a, b, data in graph.edges(data=True)
        )

    relabelled = edge_set(image) == edge_set(union)
    match = isomorphism.categorical_multiedge_match("kind", None)
    abstract = nx.is_isomorphic(stable.to_graph(), union, edge_match=match)
    return relabelled and abstract


def cluster_tilting_objects(quiver: TranslationQuiver) -> list[frozenset[Arc]]:
    """Maximal rigid sets of non-projective vertices, sorted.

    These are the maximal cliques of the compatibility graph on the
    non-projective vertices (edges join non-crossing arcs).
    """
    graph = nx.Graph()
    nodes = quiver.non_projectives
    graph.add_nodes_from(nodes)
    for idx, a in enumerate(nodes):
        for b in nodes[idx + 1 :]:
            if not crossing(a, b):
                graph.add_edge(a, b)
    if graph.number_of_nodes() == 0:
        return [frozenset()]
    cliques = [frozenset(c) for c in nx.find_cliques(graph)]
    return sorted(cliques, key=sorted)


def maximal_rigid_completions(quiver: TranslationQuiver) -> list[frozenset[Arc]]:
    """Cluster-tilting objects of the quiver together with all projectives."""
    return [c | quiver.projectives for c in cluster_tilting_objects(quiver)]


def cluster_tilting_bijection(n: int, frozen: Iterable[Arc]) -> bool:
    """True if cluster-tilting objects of the reduction match the triangulations.

    Every maximal rigid completion inside reduce(n, X) must have 2n - 3
    summands and, after removing X and the boundary, be the diagonal set of
    a triangulation containing X.
    """
    members = frozenset(frozen)
    quiver = reduce(n, members)
    completions = maximal_rigid_completions(quiver)
    if any(len(c) != 2 * n - 3 for c in completions):
        return False
    from_quiver = sorted(sorted(c - quiver.projectives) for c in completions)
    from_polygon = sorted(
        sorted(t.diagonals - members) for t in enumerate_triangulations(n, members)
    )
    return from_quiver == from_polygon


# =============================================================================
# Serialization
# =============================================================================


def to_json(quiver: TranslationQuiver) -> str:
    """Serialize as JSON with fields n, frozen, vertices, arrows, tau."""
    payload = {
        "n": quiver.n,
        "frozen": [[a.i, a.j] for a in sorted(quiver.frozen)],
        "vertices": [
            {"label": [v.i, v.j], "projective": v in quiver.projectives}
            for v in quiver.vertices
        ],
        "arrows": [[[a.i, a.j], [b.i, b.j]] for a, b in quiver.arrows],
        "tau": [[[x.i, x.j], [tx.i, tx.j]] for x, tx in quiver.tau.items()],
    }
    return json.dumps(payload, indent=2) + "\n"


def from_json(text: str) -> TranslationQuiver:
    """Parse the output of :func:`to_json`.

    Raises:
        ParseError: If the document does not follow the schema
    """
    try:
        data = json.loads(text)
        n = int(data["n"])

        def arc(pair: list[int]) -> Arc:
            return Arc.from_endpoints(n, int(pair[0]), int(pair[1]))

        frozen = frozenset(arc(p) for p in data["frozen"])
        vertices = tuple(arc(v["label"]) for v in data["vertices"])
        projectives = frozenset(
            arc(v["label"]) for v in data["vertices"] if v["projective"]
        )
        arrows = tuple((arc(a), arc(b)) for a, b in data["arrows"])
        tau = {arc(x): arc(tx) for x, tx in data["tau"]}
    except (KeyError, TypeError, ValueError, IndexError, GrasscatError) as e:
        snippet = text[:40].replace("\n", " ")
        raise ParseError(snippet, f"not a translation quiver document: {e}")
    return TranslationQuiver(n, frozen, vertices, arrows, tau, projectives)


def _dot_name(arc: Arc) -> str:
    return DOT_VERTEX_TEMPLATE.format(i=arc.i, j=arc.j)


def to_dot(quiver: TranslationQuiver) -> str:
    """Serialize as a Graphviz digraph.

    Projectives are boxes. Each arrow gets one plain "->" line. The tau
    pairs follow as extra "->" lines styled dashed with constraint=false,
    so counting arrows means skipping the lines that carry "style=dashed".
    """
    lines = ["digraph ARQuiver {"]
    for v in quiver.vertices:
        attrs = " [shape=box]" if v in quiver.projectives else ""
        lines.append(f"  {_dot_name(v)}{attrs};")
    for a, b in quiver.arrows:
        lines.append(f"  {_dot_name(a)} -> {_dot_name(b)};")
    for x, tx in quiver.tau.items():
        lines.append(f"  {_dot_name(x)} -> {_dot_name(tx)} [style=dashed, constraint=false];")
    lines.append("}")
    return "\n".join(lines) + "\n"
