"""Unit-capacity flow network for deciding shedding in graphs without 4- and 6-cycles.

Layers: source ``s`` -> ``N(v)`` -> ``N2(v)`` -> one node per component of
``G[N2(v)]`` -> sink ``t``.  Every arc has capacity one, so a maximum flow
picks at most one vertex per component and per neighbour of ``v``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graph import Graph, VertexSet, bits, popcount


@dataclass(frozen=True)
class FlowNetwork:
    """Nodes are numbered ``0 = s``, then ``N(v)``, ``N2(v)``, the component
    nodes, and finally ``t``; ``graph_vertex[i]`` maps a layer node back to
    its graph vertex (``None`` for s, t and component nodes)."""

    v: int
    n_nodes: int
    arcs: tuple[tuple[int, int], ...]
    graph_vertex: tuple[int | None, ...]
    neighbour_nodes: tuple[int, ...]
    second_nodes: tuple[int, ...]
    component_nodes: tuple[int, ...]

    @property
    def source(self) -> int:
        return 0

    @property
    def sink(self) -> int:
        return self.n_nodes - 1


@dataclass(frozen=True)
class FlowResult:
    value: int
    positive_flow_vertices: VertexSet
    arc_flows: tuple[int, ...]


class NetworkStructureError(AssertionError):
    """The graph around ``v`` breaks the layer structure the network relies on."""


def build_shedding_network(G: Graph, v: int) -> FlowNetwork:
    G.check_vertex(v)
    first = list(bits(G.adj[v]))
    second_mask = G.second(v)
    second = list(bits(second_mask))
    for x in second:
        if popcount(G.adj[x] & G.adj[v]) != 1:
            raise NetworkStructureError(f"vertex {x} of N2({v}) has {popcount(G.adj[x] & G.adj[v])} neighbours in N({v})")
    components = []
    sub, back = G.induced(second_mask)
    for comp in sub.components():
        members = [back[i] for i in bits(comp)]
        if len(members) > 2:
            raise NetworkStructureError(f"component {members} of G[N2({v})] has more than two vertices")
        components.append(members)

    node = {}
    graph_vertex: list[int | None] = [None]
    for x in first + second:
        node[x] = len(graph_vertex)
        graph_vertex.append(x)
    comp_nodes = []
    for _ in components:
        comp_nodes.append(len(graph_vertex))
        graph_vertex.append(None)
    sink = len(graph_vertex)
    graph_vertex.append(None)

    arcs = [(0, node[y]) for y in first]
    for y in first:
        arcs.extend((node[y], node[x]) for x in bits(G.adj[y] & second_mask))
    for members, a in zip(components, comp_nodes):
        arcs.extend((node[x], a) for x in members)
    arcs.extend((a, sink) for a in comp_nodes)
    return FlowNetwork(
        v=v,
        n_nodes=sink + 1,
        arcs=tuple(arcs),
        graph_vertex=tuple(graph_vertex),
        neighbour_nodes=tuple(node[y] for y in first),
        second_nodes=tuple(node[x] for x in second),
        component_nodes=tuple(comp_nodes),
    )


def max_flow(net: FlowNetwork, graph_order: int | None = None) -> FlowResult:
    """Ford-Fulkerson with breadth-first augmenting paths, lowest node id first.

    ``graph_order`` sizes the returned vertex set; it defaults to one more
    than the largest graph vertex in the network.
    """
    out_arcs: list[list[int]] = [[] for _ in range(net.n_nodes)]
    in_arcs: list[list[int]] = [[] for _ in range(net.n_nodes)]
    for i, (a, b) in enumerate(net.arcs):
        out_arcs[a].append(i)
        in_arcs[b].append(i)
    for lst in out_arcs:
        lst.sort(key=lambda i: net.arcs[i][1])
    for lst in in_arcs:
        lst.sort(key=lambda i: net.arcs[i][0])
    flow = [0] * len(net.arcs)
    s, t = net.source, net.sink
    value = 0
    while True:
        # (arc index, forward?) used to reach each node
        via: dict[int, tuple[int, bool]] = {s: (-1, True)}
        queue = deque([s])
        while queue and t not in via:
            u = queue.popleft()
            steps = [(net.arcs[i][1], i, True) for i in out_arcs[u] if flow[i] == 0]
            steps += [(net.arcs[i][0], i, False) for i in in_arcs[u] if flow[i] == 1]
            for w, i, forward in sorted(steps):
                if w not in via:
                    via[w] = (i, forward)
                    queue.append(w)
        if t not in via:
            break
        w = t
        while w != s:
            i, forward = via[w]
            if forward:
                flow[i] = 1
                w = net.arcs[i][0]
            else:
                flow[i] = 0
                w = net.arcs[i][1]
        value += 1

    second = set(net.second_nodes)
    positive = 0
    for i, (a, b) in enumerate(net.arcs):
        if flow[i] and b in second:
            positive |= 1 << net.graph_vertex[b]
    if graph_order is None:
        graph_order = max((x for x in net.graph_vertex if x is not None), default=net.v) + 1
        graph_order = max(graph_order, net.v + 1)
    return FlowResult(value, VertexSet(graph_order, positive), tuple(flow))


def min_cut_value(net: FlowNetwork) -> int:
    """Brute-force minimum s-t cut over all source-side node subsets."""
    inner = [i for i in range(net.n_nodes) if i not in (net.source, net.sink)]
    best = None
    for bitset in range(1 << len(inner)):
        side = {net.source} | {inner[j] for j in range(len(inner)) if bitset >> j & 1}
        cut = sum(1 for a, b in net.arcs if a in side and b not in side)
        if best is None or cut < best:
            best = cut
    return best
