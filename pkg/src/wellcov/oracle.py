"""Exponential-time checkers that decide each property straight from its definition.

These are the ground truth the polynomial recognizers are compared against.
Everything here runs on bitsets and is meant for graphs of a dozen or so
vertices; the cap for callers that want one is :func:`oracle_max_n`.
"""

from __future__ import annotations

import os
from itertools import combinations
from typing import Iterator

from .errors import InputError
from .graph import Graph, VertexSet, bits, lowest, popcount
from .verdict import DisjointPair, SetPair, SizedSets, Verdict, VertexWitness, WitnessSet

DEFAULT_MAX_N = 12


def oracle_max_n() -> int:
    """Largest graph the CLI will hand to an exhaustive routine (``WELLCOV_MAX_N``)."""
    return int(os.environ.get("WELLCOV_MAX_N", DEFAULT_MAX_N))


# ---------------------------------------------------------------------------
# enumeration primitives (masks)


def maximal_independent_masks(G: Graph, within: int | None = None) -> Iterator[int]:
    """Maximal independent sets of ``G[within]`` as masks, each exactly once.

    Bron-Kerbosch with pivoting, run on the complement implicitly: a vertex
    ``x`` stays a candidate after picking ``v`` iff ``x`` is outside ``N[v]``.
    """
    adj = G.adj
    P = G.all_mask if within is None else within

    def expand(R: int, P: int, X: int) -> Iterator[int]:
        if not P:
            if not X:
                yield R
            return
        pivot_block = None
        for u in bits(P | X):
            block = P & (adj[u] | 1 << u)
            if pivot_block is None or popcount(block) < popcount(pivot_block):
                pivot_block = block
                if not block:
                    break
        for v in bits(pivot_block):
            keep = ~(adj[v] | 1 << v)
            yield from expand(R | 1 << v, P & keep, X & keep)
            P &= ~(1 << v)
            X |= 1 << v

    yield from expand(0, P, 0)


def independent_masks(G: Graph, within: int | None = None) -> list[int]:
    """Every independent subset of ``within`` (including the empty set)."""
    adj = G.adj
    out = []

    def walk(chosen: int, cand: int) -> None:
        out.append(chosen)
        for v in bits(cand):
            cand &= ~(1 << v)
            walk(chosen | 1 << v, cand & ~adj[v])

    walk(0, G.all_mask if within is None else within)
    return out


def max_independent_mask(G: Graph, within: int | None = None) -> int:
    """One maximum independent set of ``G[within]`` by branch and bound."""
    adj = G.adj
    memo: dict[int, int] = {}

    def solve(P: int) -> int:
        if not P:
            return 0
        hit = memo.get(P)
        if hit is not None:
            return hit
        forced = 0
        rest = P
        # vertices of degree <= 1 inside P belong to some maximum set
        changed = True
        while changed and rest:
            changed = False
            for v in bits(rest):
                if popcount(adj[v] & rest) <= 1:
                    forced |= 1 << v
                    rest &= ~(adj[v] | 1 << v)
                    changed = True
                    break
        if not rest:
            result = forced
        else:
            v = max(bits(rest), key=lambda u: (popcount(adj[u] & rest), -u))
            with_v = solve(rest & ~(adj[v] | 1 << v)) | 1 << v
            without_v = solve(rest & ~(1 << v))
            best = with_v if popcount(with_v) >= popcount(without_v) else without_v
            result = forced | best
        memo[P] = result
        return result

    return solve(G.all_mask if within is None else within)


def alpha_mask(G: Graph, within: int | None = None) -> int:
    return popcount(max_independent_mask(G, within))


def dominating_independent_subset(G: Graph, candidates: int, target: int) -> int | None:
    """An independent ``S`` within ``candidates`` with ``target`` inside ``N[S]``.

    Branches on the lowest undominated target vertex: any valid ``S`` contains
    one of its closed neighbours.  Returns the first hit in ascending-id order.
    """
    adj = G.adj

    def search(cand: int, todo: int, chosen: int) -> int | None:
        if not todo:
            return chosen
        u = lowest(todo)
        for x in bits((adj[u] | 1 << u) & cand):
            closed_x = adj[x] | 1 << x
            found = search(cand & ~closed_x, todo & ~closed_x, chosen | 1 << x)
            if found is not None:
                return found
        return None

    return search(candidates, target, 0)


def _sorted_key(mask: int) -> tuple[int, list[int]]:
    return popcount(mask), list(bits(mask))


# ---------------------------------------------------------------------------
# public oracle operations


def enumerate_maximal_independent_sets(G: Graph) -> Iterator[VertexSet]:
    for mask in maximal_independent_masks(G):
        yield VertexSet(G.n, mask)


def independence_number(G: Graph) -> int:
    return alpha_mask(G)


def maximum_independent_masks(G: Graph) -> list[int]:
    """All maximum independent sets, sorted by their vertex lists."""
    alpha = alpha_mask(G)
    return sorted((s for s in maximal_independent_masks(G) if popcount(s) == alpha), key=_sorted_key)


def is_well_covered_oracle(G: Graph) -> Verdict:
    """Every maximal independent set has size alpha(G).

    A negative verdict carries ``SetPair(small maximal set, a maximum set)``;
    a positive one lists all maximal sets with their common size.
    """
    maximal = sorted(maximal_independent_masks(G), key=_sorted_key)
    alpha = popcount(maximal[-1]) if maximal else 0
    small = maximal[0] if maximal else 0
    if popcount(small) < alpha:
        biggest = min((s for s in maximal if popcount(s) == alpha), key=_sorted_key)
        return Verdict(False, SetPair(VertexSet(G.n, small), VertexSet(G.n, biggest)), "oracle")
    return Verdict(True, SizedSets(tuple((VertexSet(G.n, s), alpha) for s in maximal)), "oracle")


def shedding_witness(G: Graph, v: int) -> int | None:
    """Independent subset of ``V - N[v]`` dominating ``N(v)``, or None."""
    return dominating_independent_subset(G, G.all_mask & ~G.closed(v), G.adj[v])


def is_shedding_oracle(G: Graph, v: int) -> Verdict:
    """``v`` is shedding iff no independent set outside ``N[v]`` dominates ``N(v)``."""
    G.check_vertex(v)
    witness = shedding_witness(G, v)
    if witness is None:
        return Verdict(True, None, "oracle")
    return Verdict(False, WitnessSet(VertexSet(G.n, witness)), "oracle")


def is_relating_oracle(G: Graph, x: int, y: int) -> Verdict:
    """Edge ``xy`` is relating iff some independent ``S`` avoiding ``N[x] | N[y]``
    makes both ``S + x`` and ``S + y`` maximal independent sets."""
    G.check_vertex(x)
    G.check_vertex(y)
    if not G.has_edge(x, y):
        raise InputError(f"({x}, {y}) is not an edge")
    cx, cy = G.closed(x), G.closed(y)
    # S + x is maximal iff S dominates V - N[x]
    target = G.all_mask & ~(cx & cy)
    found = dominating_independent_subset(G, G.all_mask & ~(cx | cy), target)
    if found is None:
        return Verdict(False, None, "oracle")
    return Verdict(True, WitnessSet(VertexSet(G.n, found)), "oracle")


def _matching_condition(G: Graph, size: int) -> tuple[tuple[int, int], ...] | None:
    """A matching with ``size`` edges whose vertex set induces a bipartite graph."""
    edges = G.edges()

    def bipartite(mask: int) -> bool:
        return _two_colouring(G, mask) is not None

    def search(start: int, used: int, chosen: list) -> tuple | None:
        if len(chosen) == size:
            return tuple(chosen) if bipartite(used) else None
        for i in range(start, len(edges)):
            u, v = edges[i]
            if used >> u & 1 or used >> v & 1:
                continue
            if not bipartite(used | 1 << u | 1 << v):
                continue
            chosen.append((u, v))
            hit = search(i + 1, used | 1 << u | 1 << v, chosen)
            chosen.pop()
            if hit is not None:
                return hit
        return None

    return search(0, 0, [])


def _two_colouring(G: Graph, mask: int) -> int | None:
    """Mask of one colour class of a proper 2-colouring of ``G[mask]``, or None."""
    side = 0
    seen = 0
    for root in bits(mask):
        if seen >> root & 1:
            continue
        seen |= 1 << root
        side |= 1 << root
        stack = [root]
        while stack:
            u = stack.pop()
            u_side = side >> u & 1
            for w in bits(G.adj[u] & mask):
                if seen >> w & 1:
                    if (side >> w & 1) == u_side:
                        return None
                    continue
                seen |= 1 << w
                if not u_side:
                    side |= 1 << w
                stack.append(w)
    return side


def _perfect_matching_size(G: Graph, left: int, right: int) -> int:
    """Maximum matching size between colour classes (Kuhn's augmenting paths)."""
    match_of: dict[int, int] = {}

    def augment(u: int, seen: set) -> bool:
        for w in bits(G.adj[u] & right):
            if w in seen:
                continue
            seen.add(w)
            if w not in match_of or augment(match_of[w], seen):
                match_of[w] = u
                return True
        return False

    return sum(1 for u in bits(left) if augment(u, set()))


def _bipartite_deletion_condition(G: Graph, alpha: int) -> bool:
    """Some vertex deletion leaves a bipartite graph with a perfect matching of size alpha."""
    if alpha == 0:
        return True
    for keep in combinations(range(G.n), 2 * alpha):
        mask = 0
        for v in keep:
            mask |= 1 << v
        side = _two_colouring(G, mask)
        if side is None:
            continue
        left, right = side, mask & ~side
        if popcount(left) == alpha and _perfect_matching_size(G, left, right) == alpha:
            return True
    return False


def disjoint_max_independent_sets(G: Graph, check_deletion: bool = True) -> Verdict:
    """Two disjoint maximum independent sets exist.

    The direct search over pairs of maximum sets is cross-checked against the
    matching characterisation (a matching of size alpha spanning a bipartite
    induced subgraph) and, optionally, the bipartite-deletion form.  Any
    disagreement raises ``AssertionError``.
    """
    maxsets = maximum_independent_masks(G)
    alpha = popcount(maxsets[0]) if maxsets else 0
    pair = None
    for i, a in enumerate(maxsets):
        for b in maxsets[i:]:
            if not a & b:
                pair = (a, b)
                break
        if pair:
            break
    matching = _matching_condition(G, alpha)
    notes = {"alpha": alpha, "condition_1": pair is not None, "condition_2": matching is not None}
    if check_deletion:
        notes["condition_3"] = _bipartite_deletion_condition(G, alpha)
    if len({notes[k] for k in notes if k.startswith("condition")}) != 1:
        raise AssertionError(f"disjoint-maximum-set conditions disagree on {G!r}: {notes}")
    if pair is None:
        return Verdict(False, None, "oracle", notes)
    cert = DisjointPair(VertexSet(G.n, pair[0]), VertexSet(G.n, pair[1]), matching)
    return Verdict(True, cert, "oracle", notes)


def is_w2_oracle(G: Graph) -> Verdict:
    """Every two disjoint independent sets lie in two disjoint maximum independent sets.

    Checks all ordered pairs ``(A, B)`` of disjoint independent sets.  A pair
    is extendable iff some maximum set containing ``A`` is disjoint from some
    maximum set containing ``B``; per ``A`` the union of "disjoint partner"
    bitmaps over its supersets is precomputed, so each pair costs one AND.
    The false-certificate is the first unextendable pair, smallest first;
    for a graph that is not well-covered it is the well-covered refutation.
    """
    wc = is_well_covered_oracle(G)
    if not wc:
        return Verdict(False, wc.certificate, "oracle", {"well_covered": False})
    maxsets = [s for s, _ in wc.certificate.sets]
    masks = [s.mask for s in maxsets]
    partners = []
    for a in masks:
        row = 0
        for j, b in enumerate(masks):
            if not a & b:
                row |= 1 << j
        partners.append(row)

    indep = sorted(independent_masks(G), key=_sorted_key)
    support = {}
    reach = {}
    for A in indep:
        sup = 0
        r = 0
        for j, X in enumerate(masks):
            if A & X == A:
                sup |= 1 << j
                r |= partners[j]
        support[A] = sup
        reach[A] = r
    for A in indep:
        rA = reach[A]
        for B in indep:
            if not A & B and not rA & support[B]:
                return Verdict(
                    False,
                    SetPair(VertexSet(G.n, A), VertexSet(G.n, B)),
                    "oracle",
                    {"well_covered": True},
                )
    return Verdict(True, None, "oracle", {"well_covered": True})


def w2_alpha_condition(G: Graph) -> Verdict:
    """For every ``v`` and every maximal independent ``S`` of ``G - N[v]``,
    the vertices of ``N(v)`` outside ``N[S]`` form a non-empty clique
    (independence number exactly one)."""
    for v in range(G.n):
        rest = G.all_mask & ~G.closed(v)
        for S in maximal_independent_masks(G, rest):
            left = G.adj[v] & ~G.closed_of(S)
            if not left or not G.is_clique(left):
                return Verdict(False, VertexWitness(v, WitnessSet(VertexSet(G.n, S))), "oracle")
    return Verdict(True, None, "oracle")
