"""Graph families, exhaustive generation of small connected graphs, random sampling.

Exhaustive generation grows connected graphs one vertex at a time: every
connected graph on ``n`` vertices arises from one on ``n - 1`` vertices by
adding a vertex (delete a non-cut vertex to see why), and all the families
here are closed under taking induced subgraphs.  Duplicates are removed by
nauty canonical labelling; each graph is emitted in its canonical labelling.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator

import pynauty

from .errors import InputError, SizeLimitError
from .graph import Graph, _cycle_from, bits, popcount
from .recognizers import FamilyGate
from .formats import to_graph6

MAX_EXHAUSTIVE_N = 10


@dataclass(frozen=True)
class Family:
    name: str
    absent_cycles: tuple[int, ...] = ()
    claw_free: bool = False
    description: str = ""

    @property
    def gate(self) -> FamilyGate:
        return FamilyGate(frozenset(self.absent_cycles), claw_free=self.claw_free)

    def admits(self, G: Graph) -> bool:
        return self.gate.admits(G)

    def ok_at(self, adj, v: int, n: int) -> bool:
        """No forbidden structure through ``v``, given none elsewhere."""
        allowed = ((1 << n) - 1) & ~(1 << v)
        if popcount(adj[v]) >= 2:
            for k in self.absent_cycles:
                if _cycle_from(adj, v, k, allowed):
                    return False
        if self.claw_free:
            for c in [v, *bits(adj[v])]:
                if _has_claw_at(adj, c):
                    return False
        return True


def _has_claw_at(adj, c: int) -> bool:
    nb = adj[c]
    for a in bits(nb):
        rest = nb & ~adj[a] & ~((1 << (a + 1)) - 1)
        for b in bits(rest):
            if rest & ~adj[b] & ~((1 << (b + 1)) - 1):
                return True
    return False


FAMILIES = {
    f.name: f
    for f in (
        Family("all", (), False, "all graphs"),
        Family("girth5", (3, 4), False, "girth at least 5"),
        Family("c5free", (5,), False, "no C5"),
        Family("c3c5free", (3, 5), False, "no C3, no C5"),
        Family("c45free", (4, 5), False, "no C4, no C5"),
        Family("c46free", (4, 6), False, "no C4, no C6"),
        Family("c456free", (4, 5, 6), False, "no C4, C5, C6"),
        Family("clawfree", (), True, "claw-free"),
    )
}


def family(name: str) -> Family:
    try:
        return FAMILIES[name]
    except KeyError:
        raise InputError(f"unknown family {name!r}; choose from {sorted(FAMILIES)}") from None


def canonical_form(G: Graph) -> Graph:
    """``G`` relabelled into nauty's canonical labelling."""
    if G.n == 0:
        return G
    ng = pynauty.Graph(G.n, adjacency_dict={v: list(bits(G.adj[v])) for v in range(G.n)})
    order = pynauty.canon_label(ng)
    # order[i] is the vertex placed at position i
    position = [0] * G.n
    for i, v in enumerate(order):
        position[v] = i
    return G.relabel(position)


def certificate(G: Graph) -> bytes:
    if G.n == 0:
        return b""
    ng = pynauty.Graph(G.n, adjacency_dict={v: list(bits(G.adj[v])) for v in range(G.n)})
    return pynauty.certificate(ng)


def connected_graphs(n_max: int, fam: Family | str = "all", n_min: int = 1) -> Iterator[Graph]:
    """Every connected graph in ``fam`` with ``n_min..n_max`` vertices, up to isomorphism.

    Output order: by vertex count, then by graph6 string of the canonical form.
    """
    if isinstance(fam, str):
        fam = family(fam)
    if n_max > MAX_EXHAUSTIVE_N:
        raise SizeLimitError(f"exhaustive generation is limited to n <= {MAX_EXHAUSTIVE_N}")
    level = [Graph(1)]
    for n in range(1, n_max + 1):
        if n > 1:
            level = _grow(level, fam)
        if n >= n_min:
            yield from level


def all_graphs(n_max: int, fam: Family | str = "all", n_min: int = 0) -> Iterator[Graph]:
    """Every graph in ``fam`` (connected or not) with ``n_min..n_max`` vertices, up to isomorphism."""
    if isinstance(fam, str):
        fam = family(fam)
    if n_max > MAX_EXHAUSTIVE_N:
        raise SizeLimitError(f"exhaustive generation is limited to n <= {MAX_EXHAUSTIVE_N}")
    level = [Graph(0)]
    for n in range(0, n_max + 1):
        if n > 0:
            level = _grow(level, fam, isolated=True)
        if n >= n_min:
            yield from level


def _grow(level: list[Graph], fam: Family, isolated: bool = False) -> list[Graph]:
    seen: dict[bytes, Graph] = {}
    for g in level:
        n = g.n
        base = list(g.adj)
        for nbrs in range(0 if isolated else 1, 1 << n):
            adj = [row | ((nbrs >> u & 1) << n) for u, row in enumerate(base)]
            adj.append(nbrs)
            if not fam.ok_at(adj, n, n + 1):
                continue
            h = Graph.from_adjacency(adj)
            cert = certificate(h)
            if cert not in seen:
                seen[cert] = h
    out = [canonical_form(h) for h in seen.values()]
    out.sort(key=to_graph6)
    return out


def random_graph(
    n: int,
    fam: Family | str = "all",
    p: float = 0.3,
    rng: random.Random | None = None,
    connected: bool = False,
    budget: int = 1000,
) -> Graph:
    """Random graph in ``fam``: candidate edges come in random order, each kept
    with probability ``p`` and rejected if it would break the family.

    With ``connected`` whole graphs are resampled until connected, at most
    ``budget`` times.
    """
    if isinstance(fam, str):
        fam = family(fam)
    rng = rng or random.Random()
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for _ in range(budget):
        order = pairs[:]
        rng.shuffle(order)
        adj = [0] * n
        for u, v in order:
            if rng.random() >= p:
                continue
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            if not (fam.ok_at(adj, u, n) and fam.ok_at(adj, v, n)):
                adj[u] &= ~(1 << v)
                adj[v] &= ~(1 << u)
        g = Graph.from_adjacency(adj)
        if not connected or g.is_connected():
            return g
    raise SizeLimitError(
        f"no connected {fam.name} graph on {n} vertices after {budget} samples; try a larger p"
    )


def random_graphs(n: int, count: int, fam: Family | str = "all", seed: int = 0, **kwargs) -> list[Graph]:
    rng = random.Random(seed)
    return [random_graph(n, fam, rng=rng, **kwargs) for _ in range(count)]
