"""Immutable simple graphs over dense integer vertices with bitset adjacency.

Vertex sets are Python ints used as bitsets (bit ``v`` set means vertex ``v``
is a member).  The public :class:`VertexSet` wraps such a mask together with
the vertex count it belongs to; the algorithms themselves work on raw masks.
"""

from __future__ import annotations

from collections import deque
from itertools import permutations
from typing import Iterable, Iterator

from .errors import InputError

INFINITE = float("inf")

CYCLE_LENGTHS = (3, 4, 5, 6, 7)


def bits(mask: int) -> Iterator[int]:
    """Yield the members of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def mask_of(items: Iterable[int]) -> int:
    mask = 0
    for v in items:
        mask |= 1 << v
    return mask


class VertexSet:
    """A set of vertices of an ``n``-vertex graph, stored as a bitset."""

    __slots__ = ("mask", "n")

    def __init__(self, n: int, mask: int = 0):
        if mask >> n:
            raise InputError(f"vertex set {mask:#x} has members outside 0..{n - 1}")
        self.n = n
        self.mask = mask

    @classmethod
    def of(cls, n: int, items: Iterable[int]) -> VertexSet:
        items = list(items)
        for v in items:
            if not 0 <= v < n:
                raise InputError(f"vertex {v} out of range 0..{n - 1}")
        return cls(n, mask_of(items))

    def __iter__(self) -> Iterator[int]:
        return bits(self.mask)

    def __len__(self) -> int:
        return popcount(self.mask)

    def __bool__(self) -> bool:
        return self.mask != 0

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and v >= 0 and bool(self.mask >> v & 1)

    def _other(self, other: VertexSet) -> int:
        if not isinstance(other, VertexSet):
            return NotImplemented
        if other.n != self.n:
            raise InputError("vertex sets belong to graphs of different order")
        return other.mask

    def __or__(self, other: VertexSet) -> VertexSet:
        return VertexSet(self.n, self.mask | self._other(other))

    def __and__(self, other: VertexSet) -> VertexSet:
        return VertexSet(self.n, self.mask & self._other(other))

    def __sub__(self, other: VertexSet) -> VertexSet:
        return VertexSet(self.n, self.mask & ~self._other(other))

    def __le__(self, other: VertexSet) -> bool:
        return self.mask & ~self._other(other) == 0

    def complement(self) -> VertexSet:
        return VertexSet(self.n, ((1 << self.n) - 1) & ~self.mask)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, VertexSet):
            return self.n == other.n and self.mask == other.mask
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.n, self.mask))

    def to_list(self) -> list[int]:
        return list(bits(self.mask))

    def __repr__(self) -> str:
        return f"VertexSet({self.to_list()})"


class Graph:
    """A simple undirected loopless graph on vertices ``0..n-1``.

    Instances are immutable.  ``adj[v]`` is the neighbourhood bitset of ``v``.
    """

    __slots__ = ("n", "adj", "_m")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise InputError("vertex count must be non-negative")
        adj = [0] * n
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise InputError(f"loop at vertex {u}")
            if adj[u] >> v & 1:
                raise InputError(f"repeated edge ({u}, {v})")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            m += 1
        self.n = n
        self.adj = tuple(adj)
        self._m = m

    @classmethod
    def from_adjacency(cls, adj: Iterable[int]) -> Graph:
        """Build from neighbourhood masks, checking symmetry and looplessness."""
        adj = tuple(adj)
        n = len(adj)
        for v, row in enumerate(adj):
            if row >> n:
                raise InputError(f"row {v} has bits outside 0..{n - 1}")
            if row >> v & 1:
                raise InputError(f"loop at vertex {v}")
            for u in bits(row):
                if not adj[u] >> v & 1:
                    raise InputError(f"asymmetric adjacency between {v} and {u}")
        g = cls.__new__(cls)
        g.n = n
        g.adj = adj
        g._m = sum(popcount(r) for r in adj) // 2
        return g

    @property
    def m(self) -> int:
        return self._m

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    def vertices(self) -> range:
        return range(self.n)

    def check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise InputError(f"vertex {v!r} out of range 0..{self.n - 1}")

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        """Canonical edge list: pairs ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def vset(self, items: Iterable[int] | int = 0) -> VertexSet:
        if isinstance(items, int):
            return VertexSet(self.n, items)
        return VertexSet.of(self.n, items)

    # mask helpers used throughout the package

    def closed(self, v: int) -> int:
        return self.adj[v] | 1 << v

    def open_of(self, mask: int) -> int:
        """N(S) as in the usual convention: N[S] minus S."""
        return self.closed_of(mask) & ~mask

    def closed_of(self, mask: int) -> int:
        out = mask
        for v in bits(mask):
            out |= self.adj[v]
        return out

    def second(self, v: int) -> int:
        return self.closed_of(self.adj[v]) & ~self.closed(v)

    def is_independent(self, mask: int) -> bool:
        for v in bits(mask):
            if self.adj[v] & mask:
                return False
        return True

    def is_clique(self, mask: int) -> bool:
        for v in bits(mask):
            if (mask & ~(1 << v)) & ~self.adj[v]:
                return False
        return True

    def induced(self, mask: int) -> tuple[Graph, list[int]]:
        """Induced subgraph on ``mask``; returns it with the new-to-old vertex map."""
        keep = list(bits(mask))
        index = {v: i for i, v in enumerate(keep)}
        rows = []
        for v in keep:
            rows.append(mask_of(index[u] for u in bits(self.adj[v] & mask)))
        g = Graph.__new__(Graph)
        g.n = len(keep)
        g.adj = tuple(rows)
        g._m = sum(popcount(r) for r in rows) // 2
        return g, keep

    def delete(self, mask: int) -> tuple[Graph, list[int]]:
        return self.induced(self.all_mask & ~mask)

    def components(self) -> list[int]:
        """Connected components as masks, ordered by smallest member."""
        seen = 0
        comps = []
        for v in range(self.n):
            if seen >> v & 1:
                continue
            comp = frontier = 1 << v
            while frontier:
                reach = 0
                for u in bits(frontier):
                    reach |= self.adj[u]
                frontier = reach & ~comp
                comp |= frontier
            seen |= comp
            comps.append(comp)
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def isolated_vertices(self) -> list[int]:
        return [v for v in range(self.n) if not self.adj[v]]

    def relabel(self, perm: list[int]) -> Graph:
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Graph):
            return self.adj == other.adj
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.adj)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


# ---------------------------------------------------------------------------
# named graphs


def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InputError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges())
        offset += g.n
    return Graph(offset, edges)


def t10_graph() -> Graph:
    """T10: a claw centre 6 with legs 0-3, 1-4, 2-5 ending in the triangle 7, 8, 9.

    Recovered (not transcribed) as the only connected well-covered graph on
    ten vertices with no C4, no C5 and no shedding vertex.
    """
    legs = [(6, 0), (6, 1), (6, 2), (0, 3), (1, 4), (2, 5), (3, 7), (4, 8), (5, 9)]
    return Graph(10, legs + [(7, 8), (7, 9), (8, 9)])


SMALL_TARGETS = {
    "K1": lambda: Graph(1),
    "K2": lambda: complete_graph(2),
    "P3": lambda: path_graph(3),
    "C5": lambda: cycle_graph(5),
    "C7": lambda: cycle_graph(7),
}


# ---------------------------------------------------------------------------
# structural predicates


def neighborhood(G: Graph, v: int, kind: str = "open") -> VertexSet:
    """Open, closed or second neighbourhood of ``v``.

    The second neighbourhood holds the vertices at distance exactly two.
    """
    G.check_vertex(v)
    if kind == "open":
        return VertexSet(G.n, G.adj[v])
    if kind == "closed":
        return VertexSet(G.n, G.closed(v))
    if kind == "second":
        return VertexSet(G.n, G.second(v))
    raise InputError(f"unknown neighbourhood kind {kind!r}")


def _mask(G: Graph, S) -> int:
    if isinstance(S, VertexSet):
        if S.n != G.n:
            raise InputError("vertex set belongs to a graph of different order")
        return S.mask
    if isinstance(S, int):
        return S
    return VertexSet.of(G.n, S).mask


def dominates(G: Graph, S, T) -> bool:
    """True iff every vertex of ``T`` is in ``S`` or adjacent to ``S``."""
    t = _mask(G, T)
    return t & ~G.closed_of(_mask(G, S)) == 0


def _cycle_from(adj: tuple[int, ...], start: int, k: int, allowed: int) -> bool:
    # simple paths start -> ... of k vertices inside `allowed`, closing back to start
    target = adj[start]

    def extend(u: int, used: int, length: int) -> bool:
        if length == k:
            return bool(target >> u & 1)
        for w in bits(adj[u] & allowed & ~used):
            if length + 1 == k and not target >> w & 1:
                continue
            if extend(w, used | 1 << w, length + 1):
                return True
        return False

    return extend(start, 1 << start, 1)


def contains_cycle_len(G: Graph, k: int) -> bool:
    """Whether ``G`` has a (not necessarily induced) cycle of exactly ``k`` vertices."""
    if k not in CYCLE_LENGTHS:
        raise InputError(f"cycle length {k} unsupported; use one of {CYCLE_LENGTHS}")
    # anchor each cycle at its smallest vertex
    for s in range(G.n):
        allowed = G.all_mask & ~((1 << (s + 1)) - 1)
        if popcount(G.adj[s] & allowed) >= 2 and _cycle_from(G.adj, s, k, allowed):
            return True
    return False


def has_cycle_through(G: Graph, v: int, k: int) -> bool:
    """Whether some ``k``-cycle passes through ``v``."""
    return popcount(G.adj[v]) >= 2 and _cycle_from(G.adj, v, k, G.all_mask & ~(1 << v))


def girth(G: Graph) -> float:
    """Length of a shortest cycle, ``INFINITE`` for forests."""
    best = INFINITE
    for root in range(G.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in bits(G.adj[u]):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def is_simplicial(G: Graph, v: int) -> bool:
    G.check_vertex(v)
    return G.is_clique(G.adj[v])


def is_claw_free(G: Graph) -> bool:
    """No vertex has three pairwise non-adjacent neighbours."""
    for v in range(G.n):
        if claw_at(G, v) is not None:
            return False
    return True


def claw_at(G: Graph, v: int) -> tuple[int, int, int] | None:
    """Three pairwise non-adjacent neighbours of ``v``, if any."""
    nb = G.adj[v]
    for a in bits(nb):
        rest = nb & ~G.closed(a) & ~((1 << (a + 1)) - 1)
        for b in bits(rest):
            third = rest & ~G.closed(b) & ~((1 << (b + 1)) - 1)
            if third:
                return a, b, lowest(third)
    return None


def is_isomorphic_small(G: Graph, target) -> bool:
    """Exact isomorphism test against a named graph or another small graph."""
    H = SMALL_TARGETS[target]() if isinstance(target, str) else target
    if G.n != H.n or G.m != H.m:
        return False
    if sorted(map(G.degree, G.vertices())) != sorted(map(H.degree, H.vertices())):
        return False
    if G.n > 9:
        raise InputError("exhaustive isomorphism test limited to 9 vertices")
    hedges = set(H.edges())
    gedges = G.edges()
    for perm in permutations(range(G.n)):
        if all(G.degree(v) == H.degree(perm[v]) for v in range(G.n)) and all(
            (min(perm[u], perm[v]), max(perm[u], perm[v])) in hedges for u, v in gedges
        ):
            return True
    return False
