"""Unit tests for graph6 encoding and decoding."""

import networkx as nx
import pytest

from execution.models.errors import Graph6FormatError
from graph_core import complete, cycle, graph6_decode, graph6_encode, make_graph, path
from graph_core.graph6 import read_graph6_lines


@pytest.mark.parametrize(
    "graph,code",
    [
        (complete(3), "Bw"),
        (make_graph(1, []), "@"),
        (path(2), "A_"),
        (make_graph(3, []), "B?"),
    ],
)
def test_known_encodings(graph, code):
    """Test encodings that can be checked by hand."""
    assert graph6_encode(graph) == code
    assert graph6_decode(code) == graph


def test_header_and_whitespace_are_ignored():
    """Test that the optional header and surrounding whitespace decode cleanly."""
    assert graph6_decode("  >>graph6<<Bw\n") == complete(3)


@pytest.mark.parametrize("n", [2, 5, 8, 13])
def test_matches_networkx_writer(n):
    """Test byte-for-byte agreement with networkx on cycles and paths."""
    m = max(n, 3)
    for ours, theirs in ((cycle(m), nx.cycle_graph(m)), (path(n), nx.path_graph(n))):
        expected = nx.to_graph6_bytes(theirs, header=False).decode("ascii").strip()
        assert graph6_encode(ours) == expected

        back = nx.from_graph6_bytes(expected.encode("ascii"))
        assert sorted(tuple(sorted(e)) for e in back.edges()) == ours.edges()


@pytest.mark.parametrize(
    "text",
    [
        "",
        "B",
        "Bww",
        "B w",
        "?",
        "~?@A",
    ],
)
def test_malformed_lines_raise(text):
    """Test empty, short, long, invalid-character, zero-order and long-form input."""
    with pytest.raises(Graph6FormatError):
        graph6_decode(text)


def test_stream_errors_carry_line_numbers():
    """Test that blank lines are skipped and the failing line is reported 1-based."""
    lines = ["Bw\n", "\n", "A_\n", "B!\n"]
    reader = read_graph6_lines(lines)

    assert next(reader) == complete(3)
    assert next(reader) == path(2)
    with pytest.raises(Graph6FormatError) as excinfo:
        next(reader)

    assert excinfo.value.line_number == 4
    assert excinfo.value.to_dict()["line_number"] == 4
