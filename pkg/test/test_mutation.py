"""Tests for quiver mutation and Dynkin recognition."""

import numpy as np
import pytest

from grasscat.constants import Q38_E8_SEQUENCE
from grasscat.exceptions import (
    BadVertexError,
    InvalidQuiverError,
    ParseError,
    UnknownQuiverError,
)
from grasscat.mutation import (
    ExchangeQuiver,
    builtin,
    dynkin_graph,
    fan_quiver,
    from_json,
    from_text,
    is_builtin,
    is_dynkin_orientation,
    mutate,
    mutate_sequence,
    parse_dynkin_type,
    to_json,
    to_text,
)


@pytest.fixture
def q37():
    return builtin("Q37")


@pytest.fixture
def q38():
    return builtin("Q38")


class TestExchangeQuiver:
    """Tests for ExchangeQuiver construction."""

    def test_from_arrows(self):
        """Test the matrix of a path."""
        q = ExchangeQuiver.from_arrows(3, [(1, 2), (2, 3)])
        assert q.b.tolist() == [[0, 1, 0], [-1, 0, 1], [0, -1, 0]]
        assert q.labels == ("1", "2", "3")

    def test_multiple_arrows(self):
        """Test repeated arrows add up."""
        q = ExchangeQuiver.from_arrows(2, [(1, 2), (1, 2)])
        assert q.arrows() == [("1", "2", 2)]

    def test_not_skew(self):
        """Test the matrix must be skew-symmetric."""
        with pytest.raises(InvalidQuiverError):
            ExchangeQuiver(np.array([[0, 1], [1, 0]]), ("a", "b"))

    def test_label_count(self):
        """Test one label per vertex."""
        with pytest.raises(InvalidQuiverError):
            ExchangeQuiver(np.zeros((2, 2), dtype=int), ("a",))

    def test_duplicate_labels(self):
        """Test labels must be distinct."""
        with pytest.raises(InvalidQuiverError):
            ExchangeQuiver(np.zeros((2, 2), dtype=int), ("a", "a"))

    def test_loop(self):
        """Test loops are refused."""
        with pytest.raises(InvalidQuiverError):
            ExchangeQuiver.from_arrows(2, [(1, 1)])

    def test_index(self, q37):
        """Test vertices are found by label."""
        assert q37.index(4) == 3
        assert q37.index("4") == 3
        with pytest.raises(BadVertexError):
            q37.index("9")

    def test_equality_and_hash(self):
        """Test equal quivers hash equally."""
        first = ExchangeQuiver.from_arrows(3, [(1, 2)])
        second = ExchangeQuiver.from_arrows(3, [(1, 2)])
        assert first == second
        assert hash(first) == hash(second)
        assert first != ExchangeQuiver.from_arrows(3, [(2, 1)])


class TestMutate:
    """Tests for mutation."""

    def test_path(self):
        """Test mutating the middle of a path creates the shortcut 1 -> 3."""
        q = ExchangeQuiver.from_arrows(3, [(1, 2), (2, 3)])
        mutated = mutate(q, 2)
        assert sorted(mutated.arrows()) == [("1", "3", 1), ("2", "1", 1), ("3", "2", 1)]

    def test_involution(self, q38):
        """Test mutating twice at a vertex is the identity."""
        for label in q38.labels:
            assert mutate(mutate(q38, label), label) == q38

    def test_stays_skew(self, q38):
        """Test mutation keeps the matrix skew-symmetric."""
        mutated = mutate_sequence(q38, ["1", "2", "3", "4"])
        assert np.array_equal(mutated.b, -mutated.b.T)

    def test_bad_vertex(self, q37):
        """Test mutating at an unknown vertex."""
        with pytest.raises(BadVertexError):
            mutate(q37, "7")

    def test_empty_sequence(self, q37):
        """Test the empty sequence is the identity."""
        assert mutate_sequence(q37, []) == q37

    def test_q37_to_e6(self, q37):
        """Test one mutation takes Q37 to an E6 orientation."""
        assert not is_dynkin_orientation(q37, "E6")
        assert is_dynkin_orientation(mutate(q37, "4"), "E6")

    def test_q38_to_e8(self, q38):
        """Test the stored sequence takes Q38 to an E8 orientation."""
        assert not is_dynkin_orientation(q38, "E8")
        assert is_dynkin_orientation(mutate_sequence(q38, Q38_E8_SEQUENCE), "E8")


class TestDynkin:
    """Tests for Dynkin recognition."""

    def test_parse_type(self):
        """Test family and rank parsing."""
        assert parse_dynkin_type("E6") == ("E", 6)
        assert parse_dynkin_type("d5") == ("D", 5)
        assert parse_dynkin_type("A", 4) == ("A", 4)

    @pytest.mark.parametrize("name", ["F4", "E", "A-1", ""])
    def test_parse_type_errors(self, name):
        """Test names outside A, D, E or without a rank."""
        with pytest.raises(ParseError):
            parse_dynkin_type(name)

    def test_graphs(self):
        """Test the shapes of the reference diagrams."""
        assert sorted(d for _, d in dynkin_graph("D", 4).degree()) == [1, 1, 1, 3]
        e6 = dynkin_graph("E", 6)
        assert e6.number_of_edges() == 5
        assert max(d for _, d in e6.degree()) == 3

    def test_no_diagram(self):
        """Test E9 does not exist."""
        with pytest.raises(InvalidQuiverError):
            dynkin_graph("E", 9)

    def test_path(self):
        """Test a path is type A in any orientation."""
        q = ExchangeQuiver.from_arrows(3, [(1, 2), (3, 2)])
        assert is_dynkin_orientation(q, "A3")
        assert is_dynkin_orientation(q, "A")
        assert not is_dynkin_orientation(q, "A4")
        assert not is_dynkin_orientation(q, "D3")

    def test_double_arrow(self):
        """Test multiple arrows are never Dynkin."""
        q = ExchangeQuiver.from_arrows(2, [(1, 2), (1, 2)])
        assert not is_dynkin_orientation(q, "A2")

    def test_d4(self):
        """Test a star with three arms."""
        q = ExchangeQuiver.from_arrows(4, [(1, 2), (3, 2), (2, 4)])
        assert is_dynkin_orientation(q, "D4")
        assert not is_dynkin_orientation(q, "A4")


class TestBuiltins:
    """Tests for the built-in quivers."""

    def test_sizes(self, q37, q38):
        """Test vertex and arrow counts."""
        assert q37.size == 6
        assert len(q37.arrows()) == 7
        assert q38.size == 8
        assert len(q38.arrows()) == 10

    @pytest.mark.parametrize("n,v", [(5, 1), (6, 1), (7, 4)])
    def test_fan_quiver(self, n, v):
        """Test fan quivers are linear A_{n-3}."""
        q = fan_quiver(n, v)
        assert q.size == n - 3
        assert is_dynkin_orientation(q, f"A{n - 3}")

    def test_fan_quiver_labels(self):
        """Test fan quiver vertices are labelled by diagonals."""
        assert fan_quiver(6, 1).labels == ("1,3", "1,4", "1,5")

    def test_builtin_fan(self):
        """Test the fan_quiver(n, v) name."""
        assert builtin("fan_quiver(6, 1)") == fan_quiver(6, 1)

    def test_unknown(self):
        """Test unknown names."""
        with pytest.raises(UnknownQuiverError):
            builtin("Q39")

    def test_is_builtin(self):
        """Test recognizing built-in names."""
        assert is_builtin("Q37")
        assert is_builtin("fan_quiver(5,2)")
        assert not is_builtin("quiver.txt")


class TestSerialization:
    """Tests for text and JSON quiver formats."""

    def test_text(self):
        """Test the text layout."""
        q = ExchangeQuiver.from_arrows(3, [(1, 2), (1, 2), (3, 2)])
        assert to_text(q) == "3\n1 -> 2\n1 -> 2\n3 -> 2\n"

    def test_text_labels(self):
        """Test a labels line for non-default labels."""
        assert to_text(fan_quiver(5, 1)) == "2\nlabels: 1,3 1,4\n1,3 -> 1,4\n"

    def test_text_round_trip(self, q38):
        """Test text output parses back."""
        assert from_text(to_text(q38)) == q38
        assert from_text(to_text(fan_quiver(7, 2))) == fan_quiver(7, 2)

    def test_text_comments(self):
        """Test comments and blank lines are skipped."""
        text = "# a path\n3\n\n1 -> 2\n# middle\n2 -> 3\n"
        assert from_text(text) == ExchangeQuiver.from_arrows(3, [(1, 2), (2, 3)])

    @pytest.mark.parametrize(
        "text",
        ["", "three\n1 -> 2\n", "2\n1 -> 3\n", "2\n1 => 2\n", "2\nlabels: a\n", "2\n1 -> 1\n"],
    )
    def test_text_errors(self, text):
        """Test malformed quiver text."""
        with pytest.raises(ParseError):
            from_text(text)

    def test_json_round_trip(self, q37):
        """Test JSON output parses back."""
        assert from_json(to_json(q37)) == q37

    def test_json_errors(self):
        """Test malformed or non-skew JSON."""
        with pytest.raises(ParseError):
            from_json("{")
        with pytest.raises(ParseError):
            from_json('{"labels": ["a", "b"], "matrix": [[0, 1], [1, 0]]}')
