"""Shared fixtures and naive definition-level reference implementations.

The ``naive_*`` functions deliberately ignore every shortcut the library
takes: they enumerate vertex subsets with itertools and read the
definitions literally.  Only use them for n <= 7.
"""

from __future__ import annotations

from itertools import combinations

import pytest

from wellcov.graph import Graph, cycle_graph

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def subsets(vertices):
    vertices = list(vertices)
    for k in range(len(vertices) + 1):
        yield from (frozenset(c) for c in combinations(vertices, k))


def independent(G: Graph, S) -> bool:
    return all(not G.has_edge(u, w) for u, w in combinations(S, 2))


def naive_independent_sets(G: Graph):
    return [S for S in subsets(range(G.n)) if independent(G, S)]


def naive_maximal_sets(G: Graph):
    ind = naive_independent_sets(G)
    return [S for S in ind if not any(S < T for T in ind)]


def naive_alpha(G: Graph) -> int:
    return max(len(S) for S in naive_independent_sets(G))


def naive_well_covered(G: Graph) -> bool:
    return len({len(S) for S in naive_maximal_sets(G)}) <= 1


def naive_shedding(G: Graph, v: int) -> bool:
    """Every independent S outside N[v] extends by some neighbour of v."""
    closed = {v} | {u for u in range(G.n) if G.has_edge(u, v)}
    outside = [u for u in range(G.n) if u not in closed]
    nbrs = [u for u in range(G.n) if G.has_edge(u, v)]
    for S in subsets(outside):
        if independent(G, S) and not any(independent(G, S | {u}) for u in nbrs):
            return False
    return True


def naive_w2(G: Graph) -> bool:
    """Any two disjoint independent sets extend to two disjoint maximum ones."""
    ind = naive_independent_sets(G)
    alpha = max(len(S) for S in ind)
    maxi = [S for S in ind if len(S) == alpha]
    for A in ind:
        for B in ind:
            if A & B:
                continue
            if not any(A <= X and B <= Y and not X & Y for X in maxi for Y in maxi):
                return False
    return True


def naive_relating(G: Graph, x: int, y: int) -> bool:
    for S in naive_independent_sets(G):
        if x in S or y in S:
            continue
        if any(G.has_edge(s, x) or G.has_edge(s, y) for s in S):
            continue
        sx, sy = S | {x}, S | {y}
        if all(independent(G, s) for s in (sx, sy)):
            maximal = naive_maximal_sets(G)
            if sx in maximal and sy in maximal:
                return True
    return False


# Reference graphs --------------------------------------------------------

# well-covered, girth 5, outside PC, ten vertices; found by exhaustive search
G10_EDGES = [(0, 1), (0, 6), (1, 7), (2, 4), (2, 6), (3, 5), (3, 7), (4, 9), (5, 8), (6, 8), (7, 9), (8, 9)]


def girth5_outside_pc() -> Graph:
    return Graph(10, G10_EDGES)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


# Edge xy is always (0, 1).  Expected: (relating, x shedding, y shedding).
RELATING_FIXTURES = {
    "common neighbour": (
        Graph(7, [(4, 2), (2, 0), (0, 1), (1, 3), (3, 5), (0, 6), (1, 6)]),
        (True, True, True),
    ),
    "leaf endpoint": (Graph(4, [(2, 3), (3, 0), (0, 1)]), (True, None, False)),
    "four-cycle": (
        Graph(8, [(4, 2), (2, 0), (0, 1), (1, 3), (3, 5), (6, 0), (1, 7), (6, 7)]),
        (False, False, False),
    ),
    "five-cycle": (cycle_graph(5), (True, True, True)),
    "two six-cycles": (
        Graph(10, [(0, 1), (0, 2), (2, 3), (3, 5), (5, 4), (4, 1), (0, 6), (6, 7), (7, 9), (9, 8), (8, 1)]),
        (False, False, False),
    ),
}


@pytest.fixture
def c5():
    return cycle_graph(5)
