"""Verdicts and the certificates that back them."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Union

from .graph import VertexSet


@dataclass(frozen=True)
class WitnessSet:
    vertices: VertexSet


@dataclass(frozen=True)
class SetPair:
    first: VertexSet
    second: VertexSet


@dataclass(frozen=True)
class SizedSets:
    sets: tuple[tuple[VertexSet, int], ...]


@dataclass(frozen=True)
class Matching:
    edges: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class Partition:
    blocks: tuple[VertexSet, ...]


@dataclass(frozen=True)
class DisjointPair:
    """Two disjoint maximum independent sets plus the matching built from them."""

    first: VertexSet
    second: VertexSet
    matching: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class VertexWitness:
    """A vertex singled out by a verdict, with the evidence about it."""

    vertex: int
    witness: Certificate | None = None


@dataclass(frozen=True)
class TrianglePartition:
    triangles: tuple[tuple[int, int, int], ...]


@dataclass(frozen=True)
class PCPartition:
    P: VertexSet
    C: VertexSet
    pendant_edges: tuple[tuple[int, int], ...]
    basic_cycles: tuple[tuple[int, ...], ...]


Certificate = Union[
    WitnessSet,
    SetPair,
    SizedSets,
    Matching,
    Partition,
    DisjointPair,
    VertexWitness,
    TrianglePartition,
    PCPartition,
]


@dataclass(frozen=True)
class Verdict:
    answer: bool
    certificate: Certificate | None = None
    algorithm: str = ""
    notes: dict[str, Any] = field(default_factory=dict, compare=False)

    def __bool__(self) -> bool:
        return self.answer


def certificate_to_json(cert: Certificate | None) -> Any:
    """Plain JSON-able form; vertex sets become sorted id arrays."""
    if cert is None:
        return None
    if isinstance(cert, WitnessSet):
        return {"type": "witness_set", "set": cert.vertices.to_list()}
    if isinstance(cert, SetPair):
        return {"type": "set_pair", "first": cert.first.to_list(), "second": cert.second.to_list()}
    if isinstance(cert, SizedSets):
        return {"type": "sized_sets", "sets": [{"set": s.to_list(), "size": k} for s, k in cert.sets]}
    if isinstance(cert, Matching):
        return {"type": "matching", "edges": [list(e) for e in cert.edges]}
    if isinstance(cert, Partition):
        return {"type": "partition", "blocks": [b.to_list() for b in cert.blocks]}
    if isinstance(cert, DisjointPair):
        return {
            "type": "disjoint_pair",
            "first": cert.first.to_list(),
            "second": cert.second.to_list(),
            "matching": [list(e) for e in cert.matching],
        }
    if isinstance(cert, VertexWitness):
        return {"type": "vertex", "vertex": cert.vertex, "witness": certificate_to_json(cert.witness)}
    if isinstance(cert, TrianglePartition):
        return {"type": "triangle_partition", "triangles": [list(t) for t in cert.triangles]}
    if isinstance(cert, PCPartition):
        return {
            "type": "pc_partition",
            "P": cert.P.to_list(),
            "C": cert.C.to_list(),
            "pendant_edges": [list(e) for e in cert.pendant_edges],
            "basic_cycles": [list(c) for c in cert.basic_cycles],
        }
    raise TypeError(f"unknown certificate {cert!r}")
