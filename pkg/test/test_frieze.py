"""Tests for friezes and their checks."""

import json
from fractions import Fraction

import pytest

from grasscat.arquiver import TranslationQuiver, build_c2n, reduce
from grasscat.combinatorics import (
    Arc,
    boundary_arcs,
    cut_polygon,
    enumerate_arcs,
    enumerate_triangulations,
    fan_triangulation,
    quiddity,
)
from grasscat.exceptions import (
    MissingValueError,
    NonPropagatableError,
    ParseError,
    PreconditionError,
    ZeroValueError,
)
from grasscat.frieze import (
    Frieze,
    frieze_from_json,
    frieze_to_json,
    is_unitary,
    mesh_check,
    mesh_frieze,
    mesh_slice,
    piece_friezes,
    ptolemy_check,
    ptolemy_frieze,
    quiddity_row,
    render_ascii,
    restrict_frieze,
)
from grasscat.laurent import LaurentPoly


def arc(n: int, i: int, j: int) -> Arc:
    return Arc.from_endpoints(n, i, j)


@pytest.fixture
def fan_frieze():
    """Ptolemy frieze of the fan at 1 in the hexagon."""
    return ptolemy_frieze(6, fan_triangulation(6, 1))


class TestPtolemyFrieze:
    """Tests for ptolemy_frieze."""

    def test_reference_values(self, fan_frieze):
        """Test the fan frieze of the hexagon."""
        expected = {
            (2, 4): 2, (3, 5): 2, (4, 6): 2,
            (2, 5): 3, (3, 6): 3,
            (2, 6): 4,
            (1, 3): 1, (1, 4): 1, (1, 5): 1,
        }
        for (i, j), value in expected.items():
            assert fan_frieze[arc(6, i, j)] == value

    def test_other_fan(self):
        """Test p14 = 3 for the fan at 6."""
        frieze = ptolemy_frieze(6, fan_triangulation(6, 6))
        assert frieze[arc(6, 1, 4)] == 3

    def test_all_arcs_valued(self, fan_frieze):
        """Test every arc gets a value."""
        assert len(fan_frieze.arcs()) == 15
        assert fan_frieze.frozen == frozenset()

    @pytest.mark.parametrize("n", [5, 6, 7])
    def test_positive_integral(self, n):
        """Test unit seeds give positive integers everywhere."""
        for t in enumerate_triangulations(n):
            assert ptolemy_frieze(n, t).is_positive_integral()

    def test_reverse_path(self):
        """Test values do not depend on the flip order."""
        for t in enumerate_triangulations(7):
            assert ptolemy_frieze(7, t, reverse=True) == ptolemy_frieze(7, t)

    def test_init_boundary(self):
        """Test a boundary value other than 1."""
        frieze = ptolemy_frieze(4, fan_triangulation(4, 1), init={arc(4, 1, 2): 2})
        assert frieze[arc(4, 2, 4)] == 3

    def test_init_off_seed(self):
        """Test init may only name seed arcs."""
        with pytest.raises(PreconditionError):
            ptolemy_frieze(4, fan_triangulation(4, 1), init={arc(4, 2, 4): 2})

    def test_missing_value(self, fan_frieze):
        """Test indexing an arc without a value."""
        partial = restrict_frieze(fan_frieze, {arc(6, 1, 4)})
        with pytest.raises(MissingValueError):
            _ = partial[arc(6, 2, 5)]

    def test_zero_seed(self):
        """Test a zero seed value is refused before any flip."""
        with pytest.raises(ZeroValueError, match="flip seeds"):
            ptolemy_frieze(4, fan_triangulation(4, 1), init={arc(4, 1, 3): 0})

    @pytest.mark.parametrize("n,seed", [(4, (1, 2)), (6, (1, 4))])
    def test_zero_after_flip(self, n, seed):
        """Test a seed of -1 that makes the first flip produce 0 at (2,4)."""
        with pytest.raises(ZeroValueError) as info:
            ptolemy_frieze(n, fan_triangulation(n, 1), init={arc(n, *seed): -1})
        assert info.value.arc == "(2,4)"
        assert info.value.context == "flip of (1,3)"


class TestMeshFrieze:
    """Tests for mesh_frieze."""

    def test_slice_of_c2n(self):
        """Test the slice of C(2,6) is M_{1,j}."""
        assert mesh_slice(build_c2n(6)) == [arc(6, 1, 3), arc(6, 1, 4), arc(6, 1, 5)]

    def test_matches_fan(self, fan_frieze):
        """Test the unit mesh frieze of C(2,6) is the fan frieze at 1."""
        assert mesh_frieze(build_c2n(6)) == fan_frieze

    def test_reduction(self):
        """Test the mesh frieze of reduce(6, {14})."""
        frieze = mesh_frieze(reduce(6, {arc(6, 1, 4)}))
        assert frieze[arc(6, 1, 3)] == 1
        assert frieze[arc(6, 1, 5)] == 1
        assert frieze[arc(6, 2, 4)] == 2
        assert frieze[arc(6, 4, 6)] == 2
        assert arc(6, 2, 5) not in frieze

    def test_slice_values(self):
        """Test non-unit slice values give rational entries."""
        frieze = mesh_frieze(build_c2n(4), slice_values={arc(4, 1, 3): 3})
        assert frieze[arc(4, 2, 4)] == Fraction(2, 3)
        assert not frieze.is_positive_integral()

    def test_slice_values_off_slice(self):
        """Test slice values must be on the slice."""
        with pytest.raises(PreconditionError):
            mesh_frieze(build_c2n(4), slice_values={arc(4, 2, 4): 3})

    def test_boundary_missing(self):
        """Test an explicit boundary must cover the projectives."""
        with pytest.raises(MissingValueError):
            mesh_frieze(build_c2n(4), boundary={arc(4, 1, 2): 1})

    def test_zero_on_mesh_end(self):
        """Test a zero slice value cannot be divided by."""
        with pytest.raises(ZeroValueError) as info:
            mesh_frieze(build_c2n(4), slice_values={arc(4, 1, 3): 0})
        assert info.value.arc == "(1,3)"

    def test_zero_propagated(self):
        """Test a boundary value of -1 that makes the mesh at (1,3) produce 0."""
        boundary = {a: 1 for a in boundary_arcs(4)}
        boundary[arc(4, 1, 4)] = -1
        with pytest.raises(ZeroValueError) as info:
            mesh_frieze(build_c2n(4), boundary=boundary)
        assert info.value.arc == "(2,4)"
        assert info.value.context == "mesh ending at (1,3)"

    def test_unreachable_vertices(self):
        """Test vertices no mesh reaches are reported."""
        square = build_c2n(4)
        stuck = TranslationQuiver(
            4,
            frozenset(),
            tuple(enumerate_arcs(4)),
            (),
            {arc(4, 1, 3): arc(4, 1, 3), arc(4, 2, 4): arc(4, 2, 4)},
            square.projectives,
        )
        with pytest.raises(NonPropagatableError) as info:
            mesh_frieze(stuck)
        assert info.value.missing == ["(2,4)"]


class TestChecks:
    """Tests for mesh_check and ptolemy_check."""

    def test_clean(self, fan_frieze):
        """Test a Ptolemy frieze satisfies both checks."""
        assert mesh_check(build_c2n(6), fan_frieze) == []
        assert ptolemy_check(6, fan_frieze) == []

    def test_all_ones_square(self):
        """Test the all-ones square fails Ptolemy."""
        ones = Frieze(4, frozenset(), {a: Fraction(1) for a in build_c2n(4).vertices})
        assert ptolemy_check(4, ones) == [(1, 2, 3, 4)]
        violations = mesh_check(build_c2n(4), ones)
        assert len(violations) == 2
        assert "1 != 2" in str(violations[0])

    def test_restriction_at_diagonal_of_t(self, fan_frieze):
        """Test restricting at an arc of T keeps the mesh relations."""
        restricted = restrict_frieze(fan_frieze, {arc(6, 1, 4)})
        assert mesh_check(reduce(6, {arc(6, 1, 4)}), restricted) == []

    def test_restriction_off_t(self, fan_frieze):
        """Test restricting at an arc with value 3 breaks a mesh."""
        frozen = {arc(6, 2, 5)}
        restricted = restrict_frieze(fan_frieze, frozen)
        assert mesh_check(reduce(6, frozen), restricted) != []
        assert ptolemy_check(6, restricted, cut_polygon(6, frozen)) == []

    def test_missing_values(self, fan_frieze):
        """Test checking arcs the frieze does not cover."""
        restricted = restrict_frieze(fan_frieze, {arc(6, 1, 4)})
        with pytest.raises(MissingValueError):
            mesh_check(build_c2n(6), restricted)


class TestPieces:
    """Tests for restriction and the piecewise view."""

    def test_restrict(self, fan_frieze):
        """Test restriction keeps compatible arcs only."""
        restricted = restrict_frieze(fan_frieze, {arc(6, 1, 4)})
        assert len(restricted.arcs()) == 11
        assert restricted.frozen == frozenset({arc(6, 1, 4)})

    def test_restrict_requires_value(self):
        """Test members of X need a value."""
        partial = Frieze(6, frozenset(), {arc(6, 1, 2): Fraction(1)})
        with pytest.raises(MissingValueError):
            restrict_frieze(partial, {arc(6, 1, 4)})

    def test_piece_friezes(self, fan_frieze):
        """Test the two squares of the hexagon cut at 14."""
        restricted = restrict_frieze(fan_frieze, {arc(6, 1, 4)})
        pieces = piece_friezes(restricted)
        assert [p for p, _ in pieces] == [(1, 2, 3, 4), (1, 4, 5, 6)]
        first = pieces[0][1]
        assert first.n == 4
        assert first[arc(4, 2, 4)] == 2
        assert ptolemy_check(4, first) == []

    def test_unitary(self, fan_frieze):
        """Test pieces are unitary iff the cut carries 1."""
        assert is_unitary(fan_frieze, cut_polygon(6, {arc(6, 1, 4)}))
        assert not is_unitary(fan_frieze, cut_polygon(6, {arc(6, 2, 5)}))

    def test_quiddity_row(self, fan_frieze):
        """Test the second row is the quiddity of T."""
        assert quiddity_row(fan_frieze) == (4, 1, 2, 2, 2, 1)

    def test_quiddity_row_all(self):
        """Test the quiddity row for every triangulation of the heptagon."""
        for t in enumerate_triangulations(7):
            assert quiddity_row(ptolemy_frieze(7, t)) == quiddity(t)


class TestSerialization:
    """Tests for ASCII and JSON output."""

    def test_ascii(self, fan_frieze):
        """Test rows by span with half-column offsets."""
        lines = render_ascii(fan_frieze).splitlines()
        assert len(lines) == 3
        assert lines[0] == "1 1 1 1 1 1"
        assert lines[1].startswith(" ")
        assert lines[1].split() == ["1", "2", "2", "2", "1", "4"]

    def test_ascii_missing(self, fan_frieze):
        """Test unvalued arcs are dots."""
        text = render_ascii(restrict_frieze(fan_frieze, {arc(6, 1, 4)}))
        assert "." in text

    def test_ascii_deterministic(self, fan_frieze):
        """Test rendering twice gives identical text."""
        assert render_ascii(fan_frieze) == render_ascii(fan_frieze)

    def test_json_round_trip(self, fan_frieze):
        """Test a numeric frieze survives JSON."""
        restricted = restrict_frieze(fan_frieze, {arc(6, 1, 4)})
        assert frieze_from_json(frieze_to_json(restricted)) == restricted

    def test_json_fields(self):
        """Test fractions are written as num/den strings."""
        frieze = mesh_frieze(build_c2n(4), slice_values={arc(4, 1, 3): 3})
        data = json.loads(frieze_to_json(frieze))
        values = {tuple(r["arc"]): r["value"] for r in data["values"]}
        assert values[(2, 4)] == "2/3"

    def test_json_laurent(self):
        """Test symbolic friezes do not serialize."""
        a = arc(4, 1, 3)
        frieze = Frieze(4, frozenset(), {a: LaurentPoly.variable((a,), a)})
        with pytest.raises(PreconditionError):
            frieze_to_json(frieze)

    def test_json_bad(self):
        """Test malformed documents."""
        with pytest.raises(ParseError):
            frieze_from_json('{"n": 4, "frozen": []}')
