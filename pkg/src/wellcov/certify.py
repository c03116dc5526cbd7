"""Independent re-verification of certificates.

Nothing in here calls the oracle or a recognizer: each check is a direct
polynomial test of what the certificate claims.  Claims that cannot be
checked in polynomial time (for example "no dominating set exists") are
accepted as is.
"""

from __future__ import annotations

from .errors import WellcovError
from .graph import Graph, VertexSet, bits, mask_of, popcount
from .verdict import (
    DisjointPair,
    PCPartition,
    SetPair,
    SizedSets,
    TrianglePartition,
    Verdict,
    VertexWitness,
    WitnessSet,
)


class CertificateError(WellcovError):
    """A certificate does not establish what its verdict claims."""


def _fail(msg: str):
    raise CertificateError(msg)


def _independent(G: Graph, s: VertexSet, what: str) -> int:
    if s.n != G.n:
        _fail(f"{what} belongs to a graph of order {s.n}, not {G.n}")
    if not G.is_independent(s.mask):
        _fail(f"{what} {s.to_list()} is not independent")
    return s.mask


def check_shedding_witness(G: Graph, v: int, s: VertexSet) -> None:
    """``s`` is independent, avoids ``N[v]`` and dominates ``N(v)``."""
    mask = _independent(G, s, "witness")
    if mask & G.closed(v):
        _fail(f"witness {s.to_list()} meets N[{v}]")
    if G.adj[v] & ~G.closed_of(mask):
        _fail(f"witness {s.to_list()} does not dominate N({v})")


def check_relating_witness(G: Graph, x: int, y: int, s: VertexSet) -> None:
    mask = _independent(G, s, "witness")
    if mask & (G.closed(x) | G.closed(y)):
        _fail("relating witness meets N[x] or N[y]")
    for end in (x, y):
        if G.closed_of(mask | 1 << end) != G.all_mask:
            _fail(f"S + {end} is not a maximal independent set")


def check_triangle_partition(G: Graph, cert: TrianglePartition) -> None:
    covered = 0
    for tri in cert.triangles:
        mask = mask_of(tri)
        if len(set(tri)) != 3 or not G.is_clique(mask):
            _fail(f"{tri} is not a triangle")
        if covered & mask:
            _fail(f"{tri} overlaps another block")
        covered |= mask
        simplicial = sum(1 for u in tri if G.is_clique(G.adj[u]))
        if simplicial < 2:
            _fail(f"triangle {tri} has {simplicial} simplicial vertices")
    if covered != G.all_mask:
        _fail("triangles do not cover every vertex")


def check_pc_partition(G: Graph, cert: PCPartition) -> None:
    P, C = cert.P.mask, cert.C.mask
    if P & C or P | C != G.all_mask:
        _fail("P and C do not partition V")
    leaves = mask_of(v for v in G.vertices() if G.degree(v) == 1)
    pendant = {(u, w) for u, w in G.edges() if leaves >> u & 1 or leaves >> w & 1}
    if set(cert.pendant_edges) != pendant:
        _fail("pendant edge list differs from the graph's pendant edges")
    touched = 0
    for u, w in cert.pendant_edges:
        if touched >> u & 1 or touched >> w & 1:
            _fail("pendant edges are not a matching")
        touched |= 1 << u | 1 << w
    if touched != P:
        _fail("pendant edges do not cover P exactly")
    covered = 0
    for cyc in cert.basic_cycles:
        if len(cyc) != 5 or len(set(cyc)) != 5:
            _fail(f"{cyc} is not a 5-cycle")
        for i in range(5):
            a, b = cyc[i], cyc[(i + 1) % 5]
            if not G.has_edge(a, b):
                _fail(f"{cyc} is not a cycle of G")
            if G.degree(a) >= 3 and G.degree(b) >= 3:
                _fail(f"{cyc} has adjacent vertices of degree >= 3")
        mask = mask_of(cyc)
        if covered & mask:
            _fail("basic cycles overlap")
        covered |= mask
    if covered != C:
        _fail("basic cycles do not cover C exactly")


def check_disjoint_pair(G: Graph, cert: DisjointPair) -> None:
    a = _independent(G, cert.first, "first set")
    b = _independent(G, cert.second, "second set")
    if a & b:
        _fail("the two sets intersect")
    if popcount(a) != popcount(b):
        _fail("the two sets differ in size")
    used = 0
    for u, w in cert.matching:
        if not G.has_edge(u, w):
            _fail(f"({u}, {w}) is not an edge")
        if used >> u & 1 or used >> w & 1:
            _fail("matching edges share a vertex")
        used |= 1 << u | 1 << w
    if len(cert.matching) != popcount(a):
        _fail("matching size differs from the set size")
    if not _bipartite(G, used):
        _fail("matched vertices induce a non-bipartite graph")


def _bipartite(G: Graph, mask: int) -> bool:
    colour: dict[int, int] = {}
    for root in bits(mask):
        if root in colour:
            continue
        colour[root] = 0
        stack = [root]
        while stack:
            u = stack.pop()
            for w in bits(G.adj[u] & mask):
                if w not in colour:
                    colour[w] = 1 - colour[u]
                    stack.append(w)
                elif colour[w] == colour[u]:
                    return False
    return True


def _check_not_well_covered(G: Graph, cert, alpha: int | None) -> None:
    if isinstance(cert, SetPair):
        small = _independent(G, cert.first, "maximal set")
        big = _independent(G, cert.second, "larger set")
        if G.closed_of(small) != G.all_mask:
            _fail("claimed maximal set is not maximal")
        if popcount(big) <= popcount(small):
            _fail("no larger independent set supplied")
    elif isinstance(cert, WitnessSet):
        s = _independent(G, cert.vertices, "dominating set")
        if G.closed_of(s) != G.all_mask:
            _fail("set is not dominating")
        if alpha is not None and popcount(s) >= alpha:
            _fail("independent dominating set is not smaller than alpha")
    else:
        _fail(f"unexpected certificate {type(cert).__name__} for 'not well-covered'")


def verify(G: Graph, prop: str, verdict: Verdict, *, vertex=None, edge=None, alpha=None) -> None:
    """Raise :class:`CertificateError` unless ``verdict.certificate`` backs ``verdict.answer``.

    ``prop`` is one of ``wc``, ``w2``, ``shed``, ``relating``, ``pc``,
    ``disjoint-max``, ``w2-alpha``.
    """
    cert = verdict.certificate
    if cert is None:
        return
    if prop == "shed":
        if verdict.answer:
            _fail("a shedding verdict carries no certificate")
        if not isinstance(cert, WitnessSet):
            _fail("non-shedding certificate must be a witness set")
        check_shedding_witness(G, vertex, cert.vertices)
    elif prop == "wc":
        if verdict.answer:
            if not isinstance(cert, SizedSets):
                _fail("well-covered certificate must list sized sets")
            sizes = {k for _, k in cert.sets}
            if len(sizes) > 1:
                _fail("listed maximal sets differ in size")
            for s, k in cert.sets:
                m = _independent(G, s, "maximal set")
                if G.closed_of(m) != G.all_mask or popcount(m) != k:
                    _fail(f"{s.to_list()} is not a maximal independent set of size {k}")
        else:
            _check_not_well_covered(G, cert, alpha)
    elif prop == "w2":
        if verdict.answer:
            if not isinstance(cert, TrianglePartition):
                _fail("positive W2 certificate must be a triangle partition")
            check_triangle_partition(G, cert)
            return
        if verdict.notes.get("reason") == "not well-covered" or verdict.notes.get("well_covered") is False:
            _check_not_well_covered(G, cert, alpha)
        elif isinstance(cert, SetPair):
            a = _independent(G, cert.first, "A")
            b = _independent(G, cert.second, "B")
            if a & b:
                _fail("A and B intersect")
        elif isinstance(cert, VertexWitness):
            reason = verdict.notes.get("reason")
            if reason == "isolated vertex":
                if G.adj[cert.vertex]:
                    _fail(f"vertex {cert.vertex} is not isolated")
            elif reason == "G - v not well-covered":
                H = G.delete(1 << cert.vertex)[0]
                _check_not_well_covered(H, _drop(cert.witness, cert.vertex, G.n), None)
            elif isinstance(cert.witness, WitnessSet):
                check_shedding_witness(G, cert.vertex, cert.witness.vertices)
        elif isinstance(cert, WitnessSet):
            _check_not_well_covered(G, cert, alpha)
        else:
            _fail(f"unexpected certificate {type(cert).__name__} for 'not W2'")
    elif prop == "relating":
        x, y = edge
        if verdict.answer:
            if isinstance(cert, WitnessSet):
                check_relating_witness(G, x, y, cert.vertices)
            elif isinstance(cert, SetPair):
                check_shedding_witness(G, x, cert.first)
                check_shedding_witness(G, y, cert.second)
            else:
                _fail(f"unexpected certificate {type(cert).__name__} for a relating edge")
    elif prop == "pc":
        if not isinstance(cert, PCPartition):
            _fail("PC certificate must be a PC partition")
        check_pc_partition(G, cert)
    elif prop == "disjoint-max":
        if not isinstance(cert, DisjointPair):
            _fail("expected a disjoint pair")
        check_disjoint_pair(G, cert)
    elif prop == "w2-alpha":
        if not isinstance(cert, VertexWitness) or not isinstance(cert.witness, WitnessSet):
            _fail("expected (vertex, set)")
        v, s = cert.vertex, cert.witness.vertices.mask
        rest = G.all_mask & ~G.closed(v)
        if s & ~rest or not G.is_independent(s) or (rest & ~G.closed_of(s)):
            _fail("S is not a maximal independent set of G - N[v]")
        left = G.adj[v] & ~G.closed_of(s)
        if left and G.is_clique(left):
            _fail("N(v) - N(S) is a non-empty clique; the condition holds here")
    else:
        raise ValueError(f"unknown property {prop!r}")


def _drop(cert, removed: int, n: int):
    """Re-express a certificate given in ``G`` numbering in ``G - removed`` numbering."""

    def down(s: VertexSet) -> VertexSet:
        return VertexSet(n - 1, mask_of(u - (u > removed) for u in s))

    if isinstance(cert, SetPair):
        return SetPair(down(cert.first), down(cert.second))
    if isinstance(cert, WitnessSet):
        return WitnessSet(down(cert.vertices))
    if isinstance(cert, SizedSets):
        return SizedSets(tuple((down(s), k) for s, k in cert.sets))
    _fail(f"cannot interpret {type(cert).__name__}")
