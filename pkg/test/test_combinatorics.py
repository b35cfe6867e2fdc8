"""Tests for cyclic-order primitives."""

from itertools import combinations, permutations

import pytest

from grasscat.combinatorics import (
    Arc,
    KSubset,
    Triangulation,
    boundary_arcs,
    catalan,
    compatible_arcs,
    crossing,
    cut_polygon,
    cyclically_ordered,
    enumerate_arcs,
    enumerate_diagonals,
    enumerate_rigid_sets,
    enumerate_triangulations,
    fan_diagonals,
    fan_triangulation,
    flip,
    is_fan,
    is_rigid,
    quiddity,
    reduce_vertex,
)
from grasscat.exceptions import (
    BoundaryArcError,
    DegeneratePolygonError,
    InvalidSubsetError,
    InvalidTriangulationError,
    MismatchedAmbientError,
    NotRigidError,
    PreconditionError,
)


def arc(n: int, i: int, j: int) -> Arc:
    return Arc.from_endpoints(n, i, j)


def brute_force_crossing(first: KSubset, second: KSubset) -> bool:
    """Search for a cyclically ordered a, b, c, d directly."""
    left = set(first.elements) - set(second.elements)
    right = set(second.elements) - set(first.elements)
    for a, c in permutations(left, 2):
        for b, d in permutations(right, 2):
            if cyclically_ordered([a, b, c, d]):
                return True
    return False


class TestKSubset:
    """Tests for KSubset and Arc."""

    def test_from_elements_reduces(self):
        """Test elements are reduced mod n and sorted."""
        subset = KSubset.from_elements(7, [9, 1, 5])
        assert subset.elements == (1, 2, 5)
        assert subset.k == 3

    def test_unsorted_rejected(self):
        """Test the constructor insists on increasing elements."""
        with pytest.raises(InvalidSubsetError):
            KSubset(6, (3, 1))

    def test_out_of_range_rejected(self):
        """Test elements must lie in 1..n."""
        with pytest.raises(InvalidSubsetError):
            KSubset(5, (1, 6))

    def test_size_bounds(self):
        """Test k must lie in [1, n-1]."""
        with pytest.raises(InvalidSubsetError):
            KSubset(3, (1, 2, 3))

    def test_arc_normalized(self):
        """Test arcs are stored with i < j."""
        a = arc(6, 5, 2)
        assert (a.i, a.j) == (2, 5)
        assert str(a) == "(2,5)"

    def test_arc_equal_endpoints(self):
        """Test an arc needs distinct endpoints."""
        with pytest.raises(InvalidSubsetError):
            arc(6, 2, 8)

    def test_boundary(self):
        """Test boundary detection including the wrap-around edge."""
        assert arc(6, 1, 2).boundary
        assert arc(6, 1, 6).boundary
        assert not arc(6, 1, 3).boundary

    def test_from_endpoints_shares_instances(self):
        """Test equal endpoints, in any order or residue, give one shared arc."""
        assert arc(8, 1, 5) is arc(8, 13, 9)
        assert arc(8, 1, 5) is not arc(9, 1, 5)

    def test_rotate(self):
        """Test rotation wraps around."""
        assert arc(6, 4, 6).rotate() == arc(6, 1, 5)

    def test_reduce_vertex(self):
        """Test representatives lie in 1..n."""
        assert reduce_vertex(6, 0) == 6
        assert reduce_vertex(6, 7) == 1
        assert reduce_vertex(6, 6) == 6


class TestCrossing:
    """Tests for crossing and rigidity."""

    def test_crossing_arcs(self):
        """Test the classic crossing pair in the square."""
        assert crossing(arc(4, 1, 3), arc(4, 2, 4))

    def test_sharing_endpoint(self):
        """Test arcs with a common endpoint do not cross."""
        assert not crossing(arc(6, 1, 3), arc(6, 1, 5))

    def test_self(self):
        """Test no arc crosses itself."""
        assert not crossing(arc(6, 2, 5), arc(6, 2, 5))

    def test_symmetric(self):
        """Test crossing is symmetric on all arcs of the heptagon."""
        arcs = enumerate_arcs(7)
        for first, second in combinations(arcs, 2):
            assert crossing(first, second) == crossing(second, first)

    @pytest.mark.parametrize("n,k", [(6, 2), (7, 3), (8, 3)])
    def test_matches_brute_force(self, n, k):
        """Test the label-change count agrees with a direct search."""
        subsets = [KSubset(n, c) for c in combinations(range(1, n + 1), k)]
        for first, second in combinations(subsets, 2):
            assert crossing(first, second) == brute_force_crossing(first, second)

    def test_three_subsets(self):
        """Test crossing for 3-subsets."""
        assert crossing(KSubset(6, (1, 3, 5)), KSubset(6, (2, 4, 6)))
        assert not crossing(KSubset(6, (1, 2, 3)), KSubset(6, (4, 5, 6)))

    def test_mismatched_ambient(self):
        """Test subsets of different polygons cannot be compared."""
        with pytest.raises(MismatchedAmbientError):
            crossing(arc(5, 1, 3), arc(6, 1, 3))

    def test_is_rigid(self):
        """Test rigid and non-rigid sets."""
        assert is_rigid([arc(6, 1, 3), arc(6, 1, 4), arc(6, 4, 6)])
        assert not is_rigid([arc(6, 1, 4), arc(6, 2, 5)])
        assert is_rigid([])

    def test_compatible_arcs(self):
        """Test arcs compatible with a diagonal of the square."""
        assert compatible_arcs(4, [arc(4, 1, 3)]) == [
            arc(4, 1, 2),
            arc(4, 1, 3),
            arc(4, 1, 4),
            arc(4, 2, 3),
            arc(4, 3, 4),
        ]


class TestEnumeration:
    """Tests for arc and triangulation enumeration."""

    @pytest.mark.parametrize("n", [3, 4, 5, 6, 9])
    def test_counts(self, n):
        """Test C(n,2) arcs, n of them boundary."""
        assert len(enumerate_arcs(n)) == n * (n - 1) // 2
        assert len(boundary_arcs(n)) == n
        assert len(enumerate_diagonals(n)) == n * (n - 3) // 2

    def test_lexicographic(self):
        """Test arcs come in lexicographic order."""
        assert [(a.i, a.j) for a in enumerate_arcs(4)] == [
            (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4),
        ]

    def test_degenerate(self):
        """Test polygons below the minimum size."""
        with pytest.raises(DegeneratePolygonError):
            enumerate_arcs(2)

    def test_catalan(self):
        """Test the first Catalan numbers."""
        assert [catalan(m) for m in range(7)] == [1, 1, 2, 5, 14, 42, 132]

    @pytest.mark.parametrize("n", [3, 4, 5, 6, 7, 8])
    def test_triangulation_count(self, n):
        """Test the n-gon has Catalan(n-2) triangulations."""
        triangulations = enumerate_triangulations(n)
        assert len(triangulations) == catalan(n - 2)
        assert len(set(triangulations)) == len(triangulations)

    def test_required_diagonals(self):
        """Test triangulations containing a fixed diagonal of the hexagon."""
        required = [arc(6, 1, 4)]
        triangulations = enumerate_triangulations(6, required)
        assert len(triangulations) == 4
        assert all(arc(6, 1, 4) in t.diagonals for t in triangulations)

    def test_required_must_be_rigid(self):
        """Test crossing required diagonals are refused."""
        with pytest.raises(NotRigidError):
            enumerate_triangulations(6, [arc(6, 1, 4), arc(6, 2, 5)])

    def test_rigid_sets(self):
        """Test rigid sets of at most two diagonals of the pentagon."""
        sets = enumerate_rigid_sets(5, 2)
        # empty set, five diagonals, five non-crossing pairs
        assert len(sets) == 11
        assert sets[0] == frozenset()


class TestTriangulation:
    """Tests for Triangulation."""

    def test_wrong_size(self):
        """Test a triangulation needs n-3 diagonals."""
        with pytest.raises(InvalidTriangulationError):
            Triangulation.from_pairs(6, [(1, 3), (1, 4)])

    def test_crossing_rejected(self):
        """Test crossing diagonals are rejected."""
        with pytest.raises(InvalidTriangulationError):
            Triangulation.from_pairs(6, [(1, 4), (2, 5), (1, 3)])

    def test_boundary_rejected(self):
        """Test boundary arcs are not diagonals."""
        with pytest.raises(InvalidTriangulationError):
            Triangulation.from_pairs(5, [(1, 2), (1, 3)])

    def test_contains(self):
        """Test boundary arcs are implicitly present."""
        t = fan_triangulation(5, 1)
        assert t.contains(arc(5, 2, 3))
        assert t.contains(arc(5, 1, 3))
        assert not t.contains(arc(5, 2, 4))

    def test_str(self):
        """Test the textual form lists sorted diagonals."""
        assert str(fan_triangulation(6, 1)) == "{1,3;1,4;1,5}"

    def test_fan_diagonals_order(self):
        """Test fan diagonals start at (v, v+2) and wrap."""
        assert fan_diagonals(6, 5) == [arc(6, 5, 1), arc(6, 5, 2), arc(6, 5, 3)]

    def test_is_fan(self):
        """Test fan detection."""
        assert is_fan(fan_triangulation(6, 4)) == 4
        assert is_fan(Triangulation.from_pairs(6, [(1, 3), (3, 5), (1, 5)])) is None

    def test_square_is_fan_at_smallest_vertex(self):
        """Test the smallest fan vertex is reported."""
        assert is_fan(Triangulation.from_pairs(4, [(2, 4)])) == 2

    def test_flip(self):
        """Test flipping inside its quadrilateral."""
        t = fan_triangulation(6, 1)
        flipped, quad = flip(t, arc(6, 1, 4))
        assert quad == (1, 3, 4, 5)
        assert flipped.diagonals == frozenset({arc(6, 1, 3), arc(6, 3, 5), arc(6, 1, 5)})

    def test_flip_twice(self):
        """Test flipping back recovers the triangulation."""
        t = fan_triangulation(7, 2)
        flipped, quad = flip(t, arc(7, 2, 5))
        new = arc(7, quad[1], quad[3])
        restored, _ = flip(flipped, new)
        assert restored == t

    @pytest.mark.parametrize("n", [6, 7, 8])
    def test_flip_results_are_triangulations(self, n):
        """Test every flip and every enumerated triangulation passes the full checks."""
        for t in enumerate_triangulations(n):
            assert Triangulation(n, t.diagonals) == t
            for diagonal in t.sorted_diagonals():
                flipped, _ = flip(t, diagonal)
                assert Triangulation(n, flipped.diagonals) == flipped
                assert hash(flipped) == hash(Triangulation(n, flipped.diagonals))

    def test_flip_requires_diagonal(self):
        """Test flipping an absent arc."""
        with pytest.raises(PreconditionError):
            flip(fan_triangulation(6, 1), arc(6, 2, 4))

    def test_quiddity(self):
        """Test triangle counts at each vertex."""
        assert quiddity(fan_triangulation(6, 1)) == (4, 1, 2, 2, 2, 1)

    def test_quiddity_sum(self):
        """Test the quiddity sums to 3n - 6."""
        for t in enumerate_triangulations(7):
            assert sum(quiddity(t)) == 3 * 7 - 6


class TestCutPolygon:
    """Tests for cut_polygon."""

    def test_no_cut(self):
        """Test the empty set leaves one piece."""
        decomposition = cut_polygon(5, [])
        assert decomposition.pieces == ((1, 2, 3, 4, 5),)

    def test_single_cut(self):
        """Test a diagonal of the hexagon gives two squares."""
        decomposition = cut_polygon(6, [arc(6, 1, 4)])
        assert decomposition.pieces == ((1, 2, 3, 4), (1, 4, 5, 6))
        assert decomposition.sizes == [4, 4]

    def test_two_cuts(self):
        """Test two cuts of the octagon."""
        decomposition = cut_polygon(8, [arc(8, 1, 4), arc(8, 4, 8)])
        assert decomposition.pieces == ((1, 2, 3, 4), (1, 4, 8), (4, 5, 6, 7, 8))

    def test_piece_of_and_local_arc(self):
        """Test locating an arc and relabelling it in its piece."""
        decomposition = cut_polygon(6, [arc(6, 1, 4)])
        index = decomposition.piece_of(arc(6, 4, 6))
        assert decomposition.pieces[index] == (1, 4, 5, 6)
        assert decomposition.local_arc(index, arc(6, 4, 6)) == arc(4, 2, 4)

    def test_piece_of_cut(self):
        """Test a cut lies in two pieces."""
        decomposition = cut_polygon(6, [arc(6, 1, 4)])
        assert decomposition.pieces_containing(arc(6, 1, 4)) == [0, 1]
        with pytest.raises(PreconditionError):
            decomposition.piece_of(arc(6, 1, 4))

    def test_piece_edges(self):
        """Test piece edges are boundary or frozen arcs."""
        decomposition = cut_polygon(6, [arc(6, 1, 4)])
        assert decomposition.piece_edges(1) == [
            arc(6, 1, 4), arc(6, 4, 5), arc(6, 5, 6), arc(6, 1, 6),
        ]

    def test_boundary_cut(self):
        """Test a boundary arc is not a cut."""
        with pytest.raises(BoundaryArcError):
            cut_polygon(6, [arc(6, 2, 3)])

    def test_crossing_cuts(self):
        """Test crossing cuts are refused."""
        with pytest.raises(NotRigidError):
            cut_polygon(6, [arc(6, 1, 4), arc(6, 2, 5)])
