"""SAT to non-shedding: build the gadget graph whose distinguished vertex is
*not* shedding exactly when the formula is satisfiable.

Literals are signed integers in DIMACS style: ``3`` is x3, ``-3`` its negation.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Mapping

from . import oracle
from .errors import ContractError, GraphFormatError, InputError, SizeLimitError
from .graph import Graph, VertexSet, bits, mask_of

MAX_BRUTE_FORCE_VARS = 12


@dataclass(frozen=True)
class SatInstance:
    n_vars: int
    clauses: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n_vars < 0:
            raise InputError("variable count must be non-negative")
        for i, clause in enumerate(self.clauses):
            problem = clause_problem(clause, self.n_vars)
            if problem:
                raise InputError(f"clause {i + 1}: {problem}")

    def satisfied_by(self, assignment: Mapping[int, bool]) -> bool:
        return all(any(assignment[abs(l)] == (l > 0) for l in c) for c in self.clauses)


def clause_problem(clause, n_vars: int) -> str | None:
    if not clause:
        return "empty clause"
    seen = set()
    for lit in clause:
        if lit == 0 or abs(lit) > n_vars:
            return f"literal {lit} out of range 1..{n_vars}"
        if lit in seen:
            return f"duplicate literal {lit}"
        if -lit in seen:
            return f"tautological clause (contains {abs(lit)} and -{abs(lit)})"
        seen.add(lit)
    return None


def parse_cnf(text: bytes | str) -> SatInstance:
    """Read DIMACS CNF: ``c`` comments, a ``p cnf <vars> <clauses>`` header,
    then whitespace-separated literals with each clause ended by ``0``."""
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    n_vars = n_clauses = None
    clauses: list[tuple[int, ...]] = []
    current: list[int] = []
    clause_line = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("%"):
            break
        if line.startswith("p"):
            if n_vars is not None:
                raise GraphFormatError("second problem line", lineno)
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise GraphFormatError(f"malformed header {line!r}, expected 'p cnf <vars> <clauses>'", lineno)
            try:
                n_vars, n_clauses = int(parts[2]), int(parts[3])
            except ValueError:
                raise GraphFormatError(f"malformed header {line!r}", lineno) from None
            if n_vars < 0 or n_clauses < 0:
                raise GraphFormatError("negative counts in header", lineno)
            continue
        if n_vars is None:
            raise GraphFormatError("clause before 'p cnf' header", lineno)
        for token in line.split():
            try:
                lit = int(token)
            except ValueError:
                raise GraphFormatError(f"bad literal {token!r}", lineno) from None
            if clause_line is None:
                clause_line = lineno
            if lit == 0:
                problem = clause_problem(current, n_vars)
                if problem:
                    raise GraphFormatError(problem, clause_line)
                clauses.append(tuple(current))
                current = []
                clause_line = None
            else:
                if abs(lit) > n_vars:
                    raise GraphFormatError(f"literal {lit} out of range 1..{n_vars}", lineno)
                current.append(lit)
    if n_vars is None:
        raise GraphFormatError("missing 'p cnf' header")
    if current:
        raise GraphFormatError("last clause not terminated by 0", clause_line)
    if len(clauses) != n_clauses:
        raise GraphFormatError(f"header announces {n_clauses} clauses, found {len(clauses)}")
    return SatInstance(n_vars, tuple(clauses))


def format_cnf(inst: SatInstance) -> str:
    lines = [f"p cnf {inst.n_vars} {len(inst.clauses)}"]
    lines += [" ".join(map(str, c)) + " 0" for c in inst.clauses]
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class ReductionOutput:
    """The gadget: ``v = 0``, clause vertex ``i + 1`` for clause ``i`` (0-based),
    then one vertex per literal occurrence in clause order."""

    instance: SatInstance
    gadget: Graph
    v: int
    clause_vertices: dict[int, int]
    literal_vertices: dict[tuple[int, int], int]

    def literal_of(self, vertex: int) -> tuple[int, int]:
        for key, u in self.literal_vertices.items():
            if u == vertex:
                return key
        raise InputError(f"vertex {vertex} is not a literal vertex")

    @property
    def literal_mask(self) -> int:
        return mask_of(self.literal_vertices.values())

    def roles(self) -> dict:
        """JSON-able vertex role table."""
        return {
            "v": self.v,
            "clauses": [{"clause": i + 1, "vertex": u} for i, u in sorted(self.clause_vertices.items())],
            "literals": [
                {"clause": i + 1, "literal": lit, "vertex": u}
                for (i, lit), u in sorted(self.literal_vertices.items(), key=lambda kv: kv[1])
            ],
        }


def sat_to_shed(inst: SatInstance) -> ReductionOutput:
    m = len(inst.clauses)
    clause_vertices = {i: i + 1 for i in range(m)}
    literal_vertices = {}
    nxt = m + 1
    for i, clause in enumerate(inst.clauses):
        for lit in clause:
            literal_vertices[(i, lit)] = nxt
            nxt += 1
    edges = [(0, clause_vertices[i]) for i in range(m)]
    edges += [(clause_vertices[i], u) for (i, _), u in literal_vertices.items()]
    occurrences = sorted(literal_vertices.items(), key=lambda kv: kv[1])
    for a, ((i, lit), u) in enumerate(occurrences):
        for (j, other), w in occurrences[a + 1 :]:
            if other == -lit:
                edges.append((u, w))
    return ReductionOutput(inst, Graph(nxt, edges), 0, clause_vertices, literal_vertices)


def assignment_to_witness(out: ReductionOutput, assignment: Mapping[int, bool]) -> VertexSet:
    """Literal occurrences made true by ``assignment``."""
    missing = [x for x in range(1, out.instance.n_vars + 1) if x not in assignment]
    if missing:
        raise InputError(f"assignment leaves variables {missing} unset")
    chosen = [u for (_, lit), u in out.literal_vertices.items() if assignment[abs(lit)] == (lit > 0)]
    return VertexSet.of(out.gadget.n, chosen)


def witness_to_assignment(out: ReductionOutput, S: VertexSet) -> dict[int, bool]:
    """Read an assignment off an independent literal set dominating every clause vertex.

    Variables not mentioned in ``S`` are set false.
    """
    G = out.gadget
    mask = S.mask
    if mask & ~out.literal_mask:
        raise ContractError("witness contains non-literal vertices")
    if not G.is_independent(mask):
        raise ContractError("witness is not independent")
    if G.adj[out.v] & ~G.closed_of(mask):
        raise ContractError("witness does not dominate every clause vertex")
    assignment = {x: False for x in range(1, out.instance.n_vars + 1)}
    for u in bits(mask):
        _, lit = out.literal_of(u)
        assignment[abs(lit)] = lit > 0
    return assignment


def brute_force_sat(inst: SatInstance) -> dict[int, bool] | None:
    """First satisfying assignment in lexicographic order (False before True), or None."""
    if inst.n_vars > MAX_BRUTE_FORCE_VARS:
        raise SizeLimitError(f"brute force limited to {MAX_BRUTE_FORCE_VARS} variables")
    for values in product((False, True), repeat=inst.n_vars):
        assignment = dict(zip(range(1, inst.n_vars + 1), values))
        if inst.satisfied_by(assignment):
            return assignment
    return None


def verify_reduction(inst: SatInstance) -> bool:
    """Satisfiable by brute force iff the gadget's ``v`` is not shedding by the oracle."""
    satisfiable = brute_force_sat(inst) is not None
    out = sat_to_shed(inst)
    return satisfiable == (not oracle.is_shedding_oracle(out.gadget, out.v))
