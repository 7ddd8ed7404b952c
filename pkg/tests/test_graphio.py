import pytest

from indexcoding.graphio import ParseError, format_graph, parse_graph
from indexcoding.graphs import Digraph

FIG1_TEXT = """n 3
1: 2 3
2: 1
3: 1 2
"""


class TestSideInfoFormat:
    def test_fig1(self, fig1):
        assert parse_graph(FIG1_TEXT) == fig1

    def test_receivers_any_order(self):
        text = "n 2\n2: 1\n1:\n"
        G = parse_graph(text)
        assert G.edges == {(1, 2)}

    def test_empty_problem_accepted(self):
        G = parse_graph("n 0\n")
        assert G.n == 0

    def test_duplicate_entry_is_duplicate_edge(self):
        with pytest.raises(ParseError, match="line 2.*duplicate"):
            parse_graph("n 2\n1: 2 2\n2:\n")

    def test_own_message_rejected(self):
        with pytest.raises(ParseError, match="line 3"):
            parse_graph("n 2\n1:\n2: 2\n")

    def test_out_of_range_label(self):
        with pytest.raises(ParseError, match="out of range"):
            parse_graph("n 2\n1: 5\n2:\n")

    def test_duplicate_receiver_line(self):
        with pytest.raises(ParseError, match="twice"):
            parse_graph("n 2\n1: 2\n1:\n2:\n")

    def test_missing_receiver_line(self):
        with pytest.raises(ParseError, match="missing"):
            parse_graph("n 3\n1:\n2:\n")

    def test_bad_header(self):
        with pytest.raises(ParseError, match="line 1"):
            parse_graph("n x\n")

    def test_garbage_line(self):
        with pytest.raises(ParseError, match="line 2"):
            parse_graph("n 1\nwhat\n")


class TestEdgeListFormat:
    def test_basic(self):
        G = parse_graph("1 -> 2\n2 -> 1\n1 -> 3\n")
        assert G.n == 3
        assert G.edges == {(1, 2), (2, 1), (1, 3)}

    def test_duplicate_edge_with_line_number(self):
        with pytest.raises(ParseError, match="line 2.*duplicate"):
            parse_graph("1 -> 2\n1 -> 2\n")

    def test_self_loop(self):
        with pytest.raises(ParseError, match="self-loop"):
            parse_graph("1 -> 1\n")

    def test_nonpositive_label(self):
        with pytest.raises(ParseError, match="positive"):
            parse_graph("0 -> 1\n")

    def test_unrecognized_first_line(self):
        with pytest.raises(ParseError):
            parse_graph("hello world\n")

    def test_empty_input(self):
        with pytest.raises(ParseError):
            parse_graph("   \n  \n")


class TestRoundTrip:
    def test_fig1_round_trip(self, fig1):
        assert parse_graph(format_graph(fig1)) == fig1

    def test_empty_graph_round_trip(self):
        G = Digraph.from_edges(4)
        assert parse_graph(format_graph(G)) == G

    def test_formatting_is_canonical(self, fig1):
        assert format_graph(fig1) == FIG1_TEXT
