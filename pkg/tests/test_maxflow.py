import random

import pytest

from wellcov import oracle
from wellcov.generate import connected_graphs, random_graph
from wellcov.graph import Graph, cycle_graph, path_graph, popcount, star_graph
from wellcov.maxflow import NetworkStructureError, build_shedding_network, max_flow, min_cut_value


def test_network_layout_c6():
    net = build_shedding_network(cycle_graph(6), 0)
    assert net.n_nodes == 8
    assert net.graph_vertex == (None, 1, 5, 2, 4, None, None, None)
    assert net.arcs == ((0, 1), (0, 2), (1, 3), (2, 4), (3, 5), (4, 6), (5, 7), (6, 7))
    result = max_flow(net, 6)
    assert result.value == 2
    assert result.positive_flow_vertices.to_list() == [2, 4]


@pytest.mark.parametrize(
    "G, v, value, chosen",
    [
        (star_graph(3), 1, 1, [2]),
        (path_graph(4), 1, 1, [3]),
        (path_graph(2), 0, 0, []),
        (Graph(1), 0, 0, []),
    ],
)
def test_small_flows(G, v, value, chosen):
    result = max_flow(build_shedding_network(G, v), G.n)
    assert result.value == value
    assert result.positive_flow_vertices.to_list() == chosen


def test_network_rejects_c4():
    with pytest.raises(NetworkStructureError):
        build_shedding_network(cycle_graph(4), 0)


def test_pair_component():
    # v=0, N(v)={1,2}, N2 = {3,4} adjacent: one component, capacity one
    G = Graph(5, [(0, 1), (0, 2), (1, 3), (2, 4), (3, 4)])
    net = build_shedding_network(G, 0)
    assert len(net.component_nodes) == 1
    assert max_flow(net, 5).value == 1


def _flow_identity(G, v):
    net = build_shedding_network(G, v)
    result = max_flow(net, G.n)
    S = result.positive_flow_vertices.mask
    assert result.value == popcount(S) == popcount(G.open_of(S) & G.adj[v])
    assert G.is_independent(S)
    assert result.value == min_cut_value(net) or net.n_nodes > 18
    return result


def test_flow_identity_exhaustive_c46free():
    for G in connected_graphs(7, "c46free"):
        for v in G.vertices():
            result = _flow_identity(G, v)
            shedding = result.value < G.degree(v)
            assert shedding == oracle.is_shedding_oracle(G, v).answer


def test_flow_identity_random():
    rng = random.Random(7)
    for _ in range(40):
        G = random_graph(rng.randint(5, 16), "c46free", p=0.25, rng=rng)
        for v in G.vertices():
            _flow_identity(G, v)


def test_min_cut_matches_on_c6():
    assert min_cut_value(build_shedding_network(cycle_graph(6), 0)) == 2
