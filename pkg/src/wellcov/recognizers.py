"""Polynomial recognizers for shedding vertices, well-covered graphs and W2 graphs.

Each recognizer is sound only on a restricted graph family and re-checks
that family before answering; a violated gate raises
:class:`~wellcov.errors.FamilyError` instead of returning a guess.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Sequence

from . import oracle
from .errors import FamilyError, InputError, PreconditionError
from .graph import (
    Graph,
    VertexSet,
    bits,
    claw_at,
    contains_cycle_len,
    girth,
    is_isomorphic_small,
    lowest,
    mask_of,
    popcount,
)
from .maxflow import build_shedding_network, max_flow
from .verdict import (
    Certificate,
    PCPartition,
    SetPair,
    SizedSets,
    TrianglePartition,
    Verdict,
    VertexWitness,
    WitnessSet,
)

ShedCheck = Callable[[Graph, int], Verdict]
WCCheck = Callable[[Graph], Verdict]
MWISSolver = Callable[[Graph, Sequence[int]], VertexSet]


@dataclass(frozen=True)
class FamilyGate:
    """Forbidden cycle lengths and other structural demands of a recognizer."""

    absent_cycles: frozenset[int] = frozenset()
    claw_free: bool = False
    girth_min: int | None = None
    connected: bool = False
    well_covered_required: bool = False

    def violation(self, G: Graph) -> str | None:
        """Name of the first violated condition, or None if ``G`` is admitted.

        ``well_covered_required`` is informational only; it is checked by the
        callers that can afford it.
        """
        if self.girth_min is not None and girth(G) < self.girth_min:
            return f"girth >= {self.girth_min}"
        for k in sorted(self.absent_cycles):
            if contains_cycle_len(G, k):
                return f"no C{k} subgraph"
        if self.claw_free and not all(claw_at(G, v) is None for v in G.vertices()):
            return "claw-free"
        if self.connected and not G.is_connected():
            return "connected"
        return None

    def admits(self, G: Graph) -> bool:
        return self.violation(G) is None

    def require(self, G: Graph, who: str) -> None:
        failed = self.violation(G)
        if failed is not None:
            raise FamilyError(f"{who} requires {failed}")


C5_FREE = FamilyGate(frozenset({5}))
C46_FREE = FamilyGate(frozenset({4, 6}))
CLAW_FREE = FamilyGate(claw_free=True)
GIRTH5 = FamilyGate(girth_min=5)
GIRTH5_CONNECTED = FamilyGate(girth_min=5, connected=True)
C3C5_FREE = FamilyGate(frozenset({3, 5}), connected=True)
C45_FREE = FamilyGate(frozenset({4, 5}), connected=True)
C456_FREE = FamilyGate(frozenset({4, 5, 6}))


def _vs(G: Graph, mask: int) -> VertexSet:
    return VertexSet(G.n, mask)


def _greedy_maximal_independent(G: Graph, within: int) -> int:
    chosen = 0
    cand = within
    while cand:
        v = lowest(cand)
        chosen |= 1 << v
        cand &= ~(G.adj[v] | 1 << v)
    return chosen


# ---------------------------------------------------------------------------
# shedding


def shed_c5free(G: Graph, v: int) -> Verdict:
    """Without 5-cycles, ``v`` is shedding iff ``N2(v)`` fails to dominate ``N(v)``."""
    G.check_vertex(v)
    C5_FREE.require(G, "shed_c5free")
    second = G.second(v)
    if G.adj[v] & ~G.closed_of(second):
        return Verdict(True, None, "c5free")
    witness = _greedy_maximal_independent(G, second)
    if G.adj[v] & ~G.closed_of(witness):
        raise AssertionError(f"maximal independent subset of N2({v}) fails to dominate N({v})")
    return Verdict(False, WitnessSet(_vs(G, witness)), "c5free")


def brute_force_mwis(G: Graph, weights: Sequence[int]) -> VertexSet:
    """Maximum weight independent set by include/exclude branching with a sum bound.

    Zero-weight vertices are never picked.  Ties keep the first optimum found,
    which prefers including lower vertex ids.
    """
    w = list(weights)
    best = [0, -1]

    def search(cand: int, chosen: int, total: int, remaining: int) -> None:
        if total + remaining <= best[1]:
            return
        if not cand:
            best[0], best[1] = chosen, total
            return
        v = lowest(cand)
        dropped = cand & ~(G.adj[v] | 1 << v)
        search(dropped, chosen | 1 << v, total + w[v], sum(w[u] for u in bits(dropped)))
        rest = cand & ~(1 << v)
        search(rest, chosen, total, remaining - w[v])

    start = mask_of(v for v in G.vertices() if w[v] > 0)
    search(start, 0, 0, sum(w[v] for v in bits(start)))
    return _vs(G, best[0])


def mwis(G: Graph, weights: Sequence[int], solver: MWISSolver = brute_force_mwis) -> VertexSet:
    """Maximum weight independent set via a pluggable solver.

    The solver's answer is checked for independence before it is returned.
    """
    if len(weights) != G.n:
        raise InputError(f"expected {G.n} weights, got {len(weights)}")
    if any(x < 0 for x in weights):
        raise InputError("weights must be non-negative")
    result = solver(G, weights)
    if not G.is_independent(result.mask):
        raise AssertionError(f"MWIS solver returned a dependent set {result}")
    return result


def shedding_weights(G: Graph, v: int) -> tuple[Graph, list[int], list[int]]:
    """Induced graph on ``N2(v)``, its weights ``|N(x) & N(v)|`` and the vertex map back."""
    sub, back = G.induced(G.second(v))
    return sub, [popcount(G.adj[x] & G.adj[v]) for x in back], back


def shed_clawfree(G: Graph, v: int, solver: MWISSolver = brute_force_mwis) -> Verdict:
    """In a claw-free graph distinct members of an independent ``S`` inside ``N2(v)``
    hit disjoint parts of ``N(v)``, so ``v`` is shedding iff the heaviest such
    ``S`` under ``w(x) = |N(x) & N(v)|`` weighs less than ``d(v)``."""
    G.check_vertex(v)
    CLAW_FREE.require(G, "shed_clawfree")
    sub, weights, back = shedding_weights(G, v)
    best = mwis(sub, weights, solver)
    weight = sum(weights[i] for i in best)
    notes = {"max_weight": weight, "degree": G.degree(v)}
    if weight < G.degree(v):
        return Verdict(True, None, "clawfree", notes)
    witness = mask_of(back[i] for i in best)
    return Verdict(False, WitnessSet(_vs(G, witness)), "clawfree", notes)


def shed_c46free(G: Graph, v: int) -> Verdict:
    """Unit-capacity max flow from ``N(v)`` through ``N2(v)`` and its components;
    ``v`` is shedding iff the flow cannot saturate all of ``N(v)``."""
    G.check_vertex(v)
    C46_FREE.require(G, "shed_c46free")
    net = build_shedding_network(G, v)
    result = max_flow(net, G.n)
    notes = {"flow": result.value, "degree": G.degree(v)}
    if result.value < G.degree(v):
        return Verdict(True, None, "c46free", notes)
    return Verdict(False, WitnessSet(result.positive_flow_vertices), "c46free", notes)


# ---------------------------------------------------------------------------
# girth at least five


def five_cycles(G: Graph, within: int) -> list[tuple[int, ...]]:
    """Every 5-cycle inside ``within``, listed from its smallest vertex with
    the smaller of the two neighbours second."""
    found = []
    adj = G.adj
    for s in bits(within):
        allowed = within & ~((1 << (s + 1)) - 1)

        def walk(path: list[int], used: int) -> None:
            u = path[-1]
            if len(path) == 5:
                if adj[u] >> s & 1 and path[1] < path[4]:
                    found.append(tuple(path))
                return
            for w in bits(adj[u] & allowed & ~used):
                path.append(w)
                walk(path, used | 1 << w)
                path.pop()

        walk([s], 1 << s)
    return found


def _exact_cover(universe: int, blocks: list[int]) -> list[int] | None:
    """Blocks partitioning ``universe``; branches on the vertex with fewest options."""
    if not universe:
        return []
    best_opts = None
    for v in bits(universe):
        opts = [b for b in blocks if b >> v & 1 and b & ~universe == 0]
        if best_opts is None or len(opts) < len(best_opts):
            best_opts = opts
            if not opts:
                return None
    for b in best_opts:
        rest = _exact_cover(universe & ~b, blocks)
        if rest is not None:
            return [b] + rest
    return None


def recognize_pc_family(G: Graph) -> Verdict:
    """Split ``V`` into ``P`` (leaves and stems, perfectly matched by the
    pendant edges) and ``C`` (covered exactly by basic 5-cycles)."""
    GIRTH5.require(G, "recognize_pc_family")
    deg = [G.degree(v) for v in G.vertices()]
    pendant = [(u, w) for u, w in G.edges() if deg[u] == 1 or deg[w] == 1]
    touches = [0] * G.n
    for u, w in pendant:
        touches[u] += 1
        touches[w] += 1
    P = mask_of(v for v in G.vertices() if touches[v])
    if any(t > 1 for t in touches):
        return Verdict(False, None, "pc", {"reason": "pendant edges are not a matching"})
    C = G.all_mask & ~P
    cycles = [
        c
        for c in five_cycles(G, C)
        if not any(deg[c[i]] >= 3 and deg[c[(i + 1) % 5]] >= 3 for i in range(5))
    ]
    cover = _exact_cover(C, [mask_of(c) for c in cycles])
    if cover is None:
        return Verdict(False, None, "pc", {"reason": "C is not partitioned by basic 5-cycles"})
    chosen = tuple(c for c in cycles if mask_of(c) in cover)
    cert = PCPartition(_vs(G, P), _vs(G, C), tuple(pendant), chosen)
    return Verdict(True, cert, "pc")


def _cycle_through(cycles, v):
    for c in cycles:
        if v in c:
            return c
    raise AssertionError(f"vertex {v} is on no basic cycle")


def shed_girth5_wc(G: Graph, v: int, check_well_covered: bool | None = None) -> Verdict:
    """Shedding in a connected well-covered graph of girth at least five.

    Outside the PC family no vertex is shedding.  Inside it: stems are
    shedding, other leaves are not, a vertex of degree >= 3 on a basic cycle
    is shedding, and a degree-2 cycle vertex ``v`` with neighbours ``v1, v2``
    is shedding exactly when neither ``v1`` nor ``v2`` has a neighbour off
    the cycle.  Well-coveredness is confirmed with the oracle when
    ``check_well_covered`` is true (default: when the graph is small enough).
    """
    G.check_vertex(v)
    GIRTH5_CONNECTED.require(G, "shed_girth5_wc")
    if check_well_covered is None:
        check_well_covered = G.n <= oracle.oracle_max_n()
    if check_well_covered and not oracle.is_well_covered_oracle(G):
        raise PreconditionError("well-covered", "shed_girth5_wc requires a well-covered graph")

    pc = recognize_pc_family(G)
    if not pc:
        witness = oracle.dominating_independent_subset(G, G.second(v), G.adj[v])
        if witness is None:
            raise PreconditionError(
                "well-covered", f"vertex {v} is shedding although G is outside PC; input is not well-covered"
            )
        return Verdict(False, WitnessSet(_vs(G, witness)), "girth5", {"case": "outside PC"})

    cert: PCPartition = pc.certificate
    deg = G.degree
    if any(deg(u) == 1 for u in bits(G.adj[v])):
        return Verdict(True, None, "girth5", {"case": "stem"})
    if deg(v) == 1:
        stem = lowest(G.adj[v])
        return Verdict(False, WitnessSet(_vs(G, 1 << lowest(G.adj[stem] & ~(1 << v)))), "girth5", {"case": "leaf"})
    cycle = _cycle_through(cert.basic_cycles, v)
    if deg(v) >= 3:
        return Verdict(True, None, "girth5", {"case": "cycle, degree >= 3"})
    i = cycle.index(v)
    # cycle order around v: v, v1, a, b, v2
    v1, a, b, v2 = (cycle[(i + k) % 5] for k in (1, 2, 3, 4))
    on_cycle = mask_of(cycle)
    off1 = G.adj[v1] & ~on_cycle
    off2 = G.adj[v2] & ~on_cycle
    if not off1 and not off2:
        return Verdict(True, None, "girth5", {"case": "cycle, degree 2"})
    witness = (1 << lowest(off1) | 1 << b) if off1 else (1 << lowest(off2) | 1 << a)
    return Verdict(False, WitnessSet(_vs(G, witness)), "girth5", {"case": "cycle, degree 2"})


# ---------------------------------------------------------------------------
# bounded independence number


def _check_alpha(G: Graph, k: int, verify: bool | None) -> None:
    if k < 2:
        raise InputError("k must be at least 2")
    if verify is None:
        verify = G.n <= oracle.oracle_max_n()
    if verify:
        alpha = oracle.independence_number(G)
        if alpha != k:
            raise PreconditionError("alpha(G) = k", f"alpha(G) is {alpha}, not {k}")


def _independent_subsets(G: Graph, pool: int, max_size: int):
    """Independent subsets of ``pool`` by size, then lexicographically."""
    verts = list(bits(pool))
    for size in range(max_size + 1):
        for combo in combinations(verts, size):
            mask = mask_of(combo)
            if G.is_independent(mask):
                yield mask


def wc_bounded_alpha(G: Graph, k: int, verify_alpha: bool | None = None) -> Verdict:
    """With ``alpha(G) = k``, ``G`` is well-covered iff no independent
    dominating set has fewer than ``k`` vertices."""
    _check_alpha(G, k, verify_alpha)
    for S in _independent_subsets(G, G.all_mask, k - 1):
        if G.closed_of(S) == G.all_mask:
            return Verdict(False, WitnessSet(_vs(G, S)), "bounded-alpha")
    return Verdict(True, None, "bounded-alpha")


def shed_bounded_alpha(G: Graph, v: int, k: int, verify_alpha: bool | None = None) -> Verdict:
    """With ``alpha(G) = k``, look for an independent set of at most ``k - 1``
    vertices of ``N2(v)`` that dominates ``N(v)``."""
    G.check_vertex(v)
    _check_alpha(G, k, verify_alpha)
    target = G.adj[v]
    for S in _independent_subsets(G, G.second(v), k - 1):
        if target & ~G.closed_of(S) == 0:
            return Verdict(False, WitnessSet(_vs(G, S)), "bounded-alpha")
    return Verdict(True, None, "bounded-alpha")


def w2_bounded_alpha(G: Graph, k: int, verify_alpha: bool | None = None) -> Verdict:
    """With ``alpha(G) = k``: an independent ``S`` of fewer than ``k`` vertices
    leaving nothing undominated refutes well-coveredness, one leaving a single
    vertex ``u`` shows ``u`` is not shedding; if neither occurs, ``G`` is W2."""
    isolated = G.isolated_vertices()
    if isolated:
        return Verdict(False, VertexWitness(isolated[0]), "bounded-alpha", {"reason": "isolated vertex"})
    _check_alpha(G, k, verify_alpha)
    for S in _independent_subsets(G, G.all_mask, k - 1):
        left = G.all_mask & ~G.closed_of(S)
        if not left:
            return Verdict(False, WitnessSet(_vs(G, S)), "bounded-alpha", {"reason": "not well-covered"})
        if popcount(left) == 1:
            cert = VertexWitness(lowest(left), WitnessSet(_vs(G, S)))
            return Verdict(False, cert, "bounded-alpha", {"reason": "non-shedding vertex"})
    return Verdict(True, None, "bounded-alpha")


def bounded_alpha_wc_check(G: Graph) -> Verdict:
    """Well-covered test that computes alpha first, then runs the size-bounded scan."""
    alpha = oracle.independence_number(G)
    if alpha <= 1:
        return Verdict(True, None, "bounded-alpha", {"alpha": alpha})
    return wc_bounded_alpha(G, alpha, verify_alpha=False)


# ---------------------------------------------------------------------------
# hereditary compositions


def _lift(cert: Certificate | None, back: list[int], n: int) -> Certificate | None:
    """Rename a certificate from an induced subgraph back into the parent graph."""

    def up(s: VertexSet) -> VertexSet:
        return VertexSet(n, mask_of(back[i] for i in s))

    if cert is None:
        return None
    if isinstance(cert, WitnessSet):
        return WitnessSet(up(cert.vertices))
    if isinstance(cert, SetPair):
        return SetPair(up(cert.first), up(cert.second))
    if isinstance(cert, SizedSets):
        return SizedSets(tuple((up(s), k) for s, k in cert.sets))
    if isinstance(cert, VertexWitness):
        return VertexWitness(back[cert.vertex], _lift(cert.witness, back, n))
    raise TypeError(f"cannot lift {type(cert).__name__}")


def w2_via_vertex_deletion(G: Graph, wc_check: WCCheck = oracle.is_well_covered_oracle) -> Verdict:
    """W2 iff no isolated vertex, not P3, and every ``G - v`` is well-covered."""
    isolated = G.isolated_vertices()
    if isolated:
        return Verdict(False, VertexWitness(isolated[0]), "vertex-deletion", {"reason": "isolated vertex"})
    if G.n == 3 and is_isomorphic_small(G, "P3"):
        return Verdict(False, None, "vertex-deletion", {"reason": "P3"})
    for v in G.vertices():
        H, back = G.delete(1 << v)
        verdict = wc_check(H)
        if not verdict:
            cert = VertexWitness(v, _lift(verdict.certificate, back, G.n))
            return Verdict(False, cert, "vertex-deletion", {"reason": "G - v not well-covered"})
    return Verdict(True, None, "vertex-deletion")


def w2_via_shedding(G: Graph, shed_check: ShedCheck = oracle.is_shedding_oracle) -> Verdict:
    """For well-covered ``G`` without isolated vertices: W2 iff every vertex sheds."""
    isolated = G.isolated_vertices()
    if isolated:
        return Verdict(False, VertexWitness(isolated[0]), "shedding-all", {"reason": "isolated vertex"})
    for v in G.vertices():
        verdict = shed_check(G, v)
        if not verdict:
            return Verdict(False, VertexWitness(v, verdict.certificate), "shedding-all", {"reason": "non-shedding vertex"})
    return Verdict(True, None, "shedding-all")


# ---------------------------------------------------------------------------
# structural W2 characterisations


def w2_girth5(G: Graph) -> Verdict:
    """A connected graph of girth at least five is W2 iff it is K2 or C5."""
    GIRTH5_CONNECTED.require(G, "w2_girth5")
    if G.n == 0:
        return Verdict(True, None, "girth5")
    return Verdict(is_isomorphic_small(G, "K2") or is_isomorphic_small(G, "C5"), None, "girth5")


def w2_c3c5free(G: Graph) -> Verdict:
    """A connected graph without 3- and 5-cycles is W2 iff it is K2."""
    C3C5_FREE.require(G, "w2_c3c5free")
    if G.n == 0:
        return Verdict(True, None, "c3c5free")
    return Verdict(is_isomorphic_small(G, "K2"), None, "c3c5free")


def triangle_candidates(G: Graph) -> list[tuple[int, int, int]]:
    """Closed neighbourhoods of simplicial degree-2 vertices that contain at
    least two simplicial vertices, deduplicated and sorted."""
    simplicial = {v for v in G.vertices() if G.is_clique(G.adj[v])}
    out = set()
    for x in simplicial:
        if G.degree(x) == 2:
            tri = tuple(bits(G.closed(x)))
            if sum(1 for u in tri if u in simplicial) >= 2:
                out.add(tri)
    return sorted(out)


def w2_c45free(G: Graph) -> Verdict:
    """A connected graph without 4- and 5-cycles is W2 iff it is K2 or its
    vertices split into triangles each having two or more simplicial vertices."""
    C45_FREE.require(G, "w2_c45free")
    if G.n == 0:
        return Verdict(True, None, "c45free")
    if is_isomorphic_small(G, "K2"):
        return Verdict(True, None, "c45free")
    triangles = triangle_candidates(G)
    cover = _exact_cover(G.all_mask, [mask_of(t) for t in triangles])
    if cover is None:
        return Verdict(False, None, "c45free")
    chosen = tuple(sorted(t for t in triangles if mask_of(t) in cover))
    return Verdict(True, TrianglePartition(chosen), "c45free")


# ---------------------------------------------------------------------------
# relating edges


def relating_via_shedding(G: Graph, x: int, y: int) -> Verdict:
    """Without 4-, 5- and 6-cycles, for an edge whose ends have no common
    neighbour and degree >= 2: ``xy`` is relating iff neither end sheds.

    A positive verdict carries the two non-shedding witnesses as a pair.
    """
    G.check_vertex(x)
    G.check_vertex(y)
    if not G.has_edge(x, y):
        raise InputError(f"({x}, {y}) is not an edge")
    for k in (4, 5, 6):
        if contains_cycle_len(G, k):
            raise PreconditionError(f"no C{k} subgraph")
    if G.adj[x] & G.adj[y]:
        raise PreconditionError("N(x) and N(y) disjoint")
    if G.degree(x) < 2:
        raise PreconditionError("d(x) >= 2")
    if G.degree(y) < 2:
        raise PreconditionError("d(y) >= 2")
    sx = shed_c46free(G, x)
    if sx:
        return Verdict(False, VertexWitness(x), "c46free", {"shedding_endpoint": x})
    sy = shed_c46free(G, y)
    if sy:
        return Verdict(False, VertexWitness(y), "c46free", {"shedding_endpoint": y})
    cert = SetPair(sx.certificate.vertices, sy.certificate.vertices)
    return Verdict(True, cert, "c46free")


# ---------------------------------------------------------------------------
# dispatch


def well_covered(G: Graph) -> Verdict:
    """Cheapest sound well-covered test available for ``G``."""
    alpha = oracle.independence_number(G)
    if alpha <= 1:
        return Verdict(True, None, "trivial", {"alpha": alpha})
    if alpha <= 4:
        return wc_bounded_alpha(G, alpha, verify_alpha=False)
    if G.n <= oracle.oracle_max_n():
        return oracle.is_well_covered_oracle(G)
    raise FamilyError(f"no polynomial well-covered test applies (alpha = {alpha}, n = {G.n})")


def _tagged(verdict: Verdict, tag: str, **notes) -> Verdict:
    merged = dict(verdict.notes)
    merged.update(notes)
    return Verdict(verdict.answer, verdict.certificate, tag, merged)


def dispatch_w2(G: Graph) -> Verdict:
    """Decide W2 with the most specific applicable recognizer.

    Disconnected graphs are decided component by component (a disjoint union
    is W2 iff every component is).  The chosen route is the verdict's
    ``algorithm`` field.
    """
    if G.n == 0:
        return Verdict(True, None, "trivial")
    comps = G.components()
    if len(comps) > 1:
        tags = []
        for comp in comps:
            H, back = G.induced(comp)
            verdict = dispatch_w2(H)
            tags.append(verdict.algorithm)
            if not verdict:
                # the certificate speaks about the component, so report it there
                notes = {**verdict.notes, "routes": tags, "component": back}
                notes["component_certificate"] = verdict.certificate
                return Verdict(False, None, "components", notes)
        return Verdict(True, None, "components", {"routes": tags})

    if GIRTH5.admits(G):
        return w2_girth5(G)
    has = {k: contains_cycle_len(G, k) for k in (3, 4, 5, 6)}
    if not has[3] and not has[5]:
        return w2_c3c5free(G)
    if not has[4] and not has[5]:
        return w2_c45free(G)
    if not has[5] or not (has[4] or has[6]):
        wc = well_covered(G)
        route = "c5free" if not has[5] else "c46free"
        if not wc:
            return _tagged(wc, route, well_covered_check=wc.algorithm, reason="not well-covered")
        check = shed_c5free if route == "c5free" else shed_c46free
        return _tagged(w2_via_shedding(G, check), route, well_covered_check=wc.algorithm)
    if CLAW_FREE.admits(G):
        return _tagged(w2_via_vertex_deletion(G, _deletion_wc_check(G)), "clawfree")
    alpha = oracle.independence_number(G)
    if 2 <= alpha <= 4:
        return w2_bounded_alpha(G, alpha, verify_alpha=False)
    if G.n <= oracle.oracle_max_n():
        return oracle.is_w2_oracle(G)
    raise FamilyError(f"no W2 recognizer applies to this graph (n = {G.n}, alpha = {alpha})")


def _deletion_wc_check(G: Graph) -> WCCheck:
    return bounded_alpha_wc_check if oracle.independence_number(G) <= 4 else oracle.is_well_covered_oracle
