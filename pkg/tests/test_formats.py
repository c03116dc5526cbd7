import random

import networkx as nx
import pytest

from wellcov.errors import GraphFormatError
from wellcov.formats import (
    format_graph,
    from_graph6,
    parse_graph,
    to_dot,
    to_graph6,
)
from wellcov.generate import canonical_form, random_graph
from wellcov.graph import Graph, complete_graph, cycle_graph, path_graph


def test_edge_list_basics():
    doc = parse_graph(b"0 1\n")
    assert doc.graph == complete_graph(2) and doc.labels is None
    doc = parse_graph("# a comment\nn 4\n0 1  # trailing\n1 2\n")
    assert doc.graph.n == 4 and doc.graph.m == 2
    assert doc.comments == ("a comment", "trailing")


def test_edge_list_labels():
    doc = parse_graph("a b\nb c\nd\n")
    assert doc.labels == ("a", "b", "c", "d")
    assert doc.graph == Graph(4, [(0, 1), (1, 2)])
    text = format_graph(doc.graph, "edge-list", doc.labels)
    again = parse_graph(text)
    assert again.labels == doc.labels and again.graph == doc.graph


@pytest.mark.parametrize(
    "text, line, fragment",
    [
        ("0 0\n", 1, "loop"),
        ("0 1\n1 0\n", 2, "repeated edge"),
        ("n 2\n0 2\n", 2, "out of range"),
        ("0 1 2\n", 1, "expected 'u v'"),
        ("0 1\nn 3\n", 2, "must come first"),
        ("n x\n", 1, "malformed header"),
    ],
)
def test_edge_list_errors(text, line, fragment):
    with pytest.raises(GraphFormatError, match=fragment) as info:
        parse_graph(text)
    assert info.value.line == line
    assert str(info.value).startswith(f"line {line}:")


def test_graph6_known_strings():
    assert to_graph6(cycle_graph(5)) == "Dhc"
    assert to_graph6(complete_graph(2)) == "A_"
    assert to_graph6(Graph(0)) == "?"
    assert to_graph6(complete_graph(5)) == "D~{"
    assert from_graph6("Dhc") == cycle_graph(5)
    assert from_graph6(">>graph6<<A_\n") == complete_graph(2)


def test_graph6_matches_networkx():
    rng = random.Random(3)
    for n in [0, 1, 2, 5, 6, 7, 12, 40, 63, 64, 70]:
        G = random_graph(n, p=0.4, rng=rng)
        ours = to_graph6(G)
        H = nx.Graph()
        H.add_nodes_from(range(n))
        H.add_edges_from(G.edges())
        assert ours == nx.to_graph6_bytes(H, header=False).decode().strip()
        assert from_graph6(ours) == G


@pytest.mark.parametrize("bad", ["", "D", "Dhc!", "A~", "B?@"])
def test_graph6_errors(bad):
    with pytest.raises(GraphFormatError):
        from_graph6(bad)


def test_graph6_document_rejects_two_lines():
    with pytest.raises(GraphFormatError, match="exactly one"):
        parse_graph("A_\nA_\n", "graph6")


def test_dimacs():
    doc = parse_graph("c path\np edge 3 2\ne 1 2\ne 2 3\n", "dimacs-graph")
    assert doc.graph == path_graph(3)
    assert parse_graph(format_graph(cycle_graph(6), "dimacs-graph"), "dimacs-graph").graph == cycle_graph(6)
    for text, fragment in [
        ("e 1 2\n", "before problem line"),
        ("p edge 2 1\ne 1 3\n", "out of range"),
        ("p edge 2 2\ne 1 2\n", "announces 2 edges"),
        ("p edge 2 1\nx 1 2\n", "unknown line type"),
        ("p edge 2 1\ne 1 1\n", "loop"),
    ]:
        with pytest.raises(GraphFormatError, match=fragment):
            parse_graph(text, "dimacs-graph")


def test_three_formats_agree():
    rng = random.Random(5)
    for _ in range(30):
        G = random_graph(rng.randint(1, 8), p=0.5, rng=rng)
        parsed = [parse_graph(format_graph(G, f), f).graph for f in ("edge-list", "graph6", "dimacs-graph")]
        forms = {to_graph6(canonical_form(H)) for H in parsed}
        assert len(forms) == 1
        assert all(H == G for H in parsed)


def test_non_utf8_input():
    with pytest.raises(GraphFormatError, match="UTF-8"):
        parse_graph(b"\xff\xfe")


def test_dot():
    dot = to_dot(path_graph(2), highlight=1)
    assert "0 -- 1;" in dot and "fillcolor" in dot.splitlines()[1]
