"""Graph file formats: plain edge lists, graph6 and DIMACS ``edge``."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import GraphFormatError, InputError
from .graph import Graph

FORMATS = ("edge-list", "graph6", "dimacs-graph")


@dataclass(frozen=True)
class GraphDocument:
    graph: Graph
    labels: tuple[str, ...] | None = None
    format: str = "edge-list"
    comments: tuple[str, ...] = field(default=(), compare=False)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels else str(v)


def _build(n: int, edges: list[tuple[int, int]], lines: list[int]) -> Graph:
    seen = {}
    for (u, v), lineno in zip(edges, lines):
        if u == v:
            raise GraphFormatError(f"loop at vertex {u}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(f"repeated edge {key} (first on line {seen[key]})", lineno)
        seen[key] = lineno
    try:
        return Graph(n, edges)
    except InputError as exc:
        raise GraphFormatError(str(exc)) from None


def parse_edge_list(text: str) -> GraphDocument:
    """One ``u v`` pair per line, an optional ``n <count>`` header, ``#`` comments.

    A line with a single token declares an isolated vertex.  Integer tokens are
    vertex ids; any other token switches to labelled mode where vertices are
    numbered in order of first appearance.
    """
    n_header = None
    rows: list[tuple[list[str], int]] = []
    comments = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line, _, comment = raw.partition("#")
        if comment.strip():
            comments.append(comment.strip())
        parts = line.split()
        if not parts:
            continue
        if parts[0] == "n":
            if len(parts) != 2 or not parts[1].isdigit():
                raise GraphFormatError(f"malformed header {line.strip()!r}", lineno)
            if n_header is not None or rows:
                raise GraphFormatError("'n' header must come first and only once", lineno)
            n_header = int(parts[1])
            continue
        if len(parts) > 2:
            raise GraphFormatError(f"expected 'u v', got {line.strip()!r}", lineno)
        rows.append((parts, lineno))

    numeric = all(tok.isdigit() for parts, _ in rows for tok in parts)
    labels = None
    if numeric:
        ids = [int(tok) for parts, _ in rows for tok in parts]
        n = n_header if n_header is not None else (max(ids) + 1 if ids else 0)
        for parts, lineno in rows:
            for tok in parts:
                if int(tok) >= n:
                    raise GraphFormatError(f"vertex {tok} out of range 0..{n - 1}", lineno)
        edges = [(int(p[0]), int(p[1])) for p, _ in rows if len(p) == 2]
    else:
        index: dict[str, int] = {}
        for parts, _ in rows:
            for tok in parts:
                index.setdefault(tok, len(index))
        n = len(index)
        if n_header is not None and n_header != n:
            raise GraphFormatError(f"header says {n_header} vertices, found {n} labels")
        labels = tuple(index)
        edges = [(index[p[0]], index[p[1]]) for p, _ in rows if len(p) == 2]
    lines = [lineno for p, lineno in rows if len(p) == 2]
    return GraphDocument(_build(n, edges, lines), labels, "edge-list", tuple(comments))


def format_edge_list(G: Graph, labels=None) -> str:
    out = [f"n {G.n}"]
    name = (lambda v: labels[v]) if labels else str
    covered = 0
    for u, v in G.edges():
        out.append(f"{name(u)} {name(v)}")
        covered |= 1 << u | 1 << v
    if labels:
        out += [name(v) for v in range(G.n) if not covered >> v & 1]
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# graph6


def _encode_n(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])


def to_graph6(G: Graph) -> str:
    """graph6 string (no header, no newline)."""
    bitlist = [G.adj[j] >> i & 1 for j in range(1, G.n) for i in range(j)]
    bitlist += [0] * (-len(bitlist) % 6)
    body = bytes(
        sum(bitlist[k + t] << (5 - t) for t in range(6)) + 63 for k in range(0, len(bitlist), 6)
    )
    return (_encode_n(G.n) + body).decode("ascii")


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    data = s.encode("ascii", errors="replace")
    if not data:
        raise GraphFormatError("empty graph6 string")
    if any(not 63 <= c <= 126 for c in data):
        raise GraphFormatError("graph6 bytes must lie in 63..126")
    if data[0] != 126:
        n, pos = data[0] - 63, 1
    elif len(data) > 1 and data[1] == 126:
        if len(data) < 8:
            raise GraphFormatError("truncated graph6 size field")
        n = 0
        for c in data[2:8]:
            n = n << 6 | (c - 63)
        pos = 8
    else:
        if len(data) < 4:
            raise GraphFormatError("truncated graph6 size field")
        n = 0
        for c in data[1:4]:
            n = n << 6 | (c - 63)
        pos = 4
    need = n * (n - 1) // 2
    body = data[pos:]
    if len(body) != (need + 5) // 6:
        raise GraphFormatError(f"graph6 body has {len(body)} bytes, expected {(need + 5) // 6} for n={n}")
    bitstream = [(c - 63) >> (5 - t) & 1 for c in body for t in range(6)]
    if any(bitstream[need:]):
        raise GraphFormatError("non-zero padding bits in graph6 string")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bitstream[k]:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def parse_graph6(text: str) -> GraphDocument:
    lines = [l for l in text.splitlines() if l.strip()]
    if len(lines) != 1:
        raise GraphFormatError(f"expected exactly one graph6 line, found {len(lines)}")
    try:
        return GraphDocument(from_graph6(lines[0]), None, "graph6")
    except GraphFormatError as exc:
        raise GraphFormatError(str(exc), text.splitlines().index(lines[0]) + 1) from None


# ---------------------------------------------------------------------------
# DIMACS edge format


def parse_dimacs_graph(text: str) -> GraphDocument:
    """``p edge <n> <m>`` then ``e <u> <v>`` lines with 1-based vertices; ``c`` comments."""
    n = m = None
    edges, lines, comments = [], [], []
    for lineno, raw in enumerate(text.splitlines(), 1):
        parts = raw.split()
        if not parts:
            continue
        tag = parts[0]
        if tag == "c":
            comments.append(raw[1:].strip())
        elif tag == "p":
            if n is not None:
                raise GraphFormatError("second problem line", lineno)
            if len(parts) != 4 or parts[1] not in ("edge", "col") or not (parts[2].isdigit() and parts[3].isdigit()):
                raise GraphFormatError(f"malformed problem line {raw.strip()!r}", lineno)
            n, m = int(parts[2]), int(parts[3])
        elif tag == "e":
            if n is None:
                raise GraphFormatError("edge before problem line", lineno)
            if len(parts) != 3 or not (parts[1].isdigit() and parts[2].isdigit()):
                raise GraphFormatError(f"malformed edge line {raw.strip()!r}", lineno)
            u, v = int(parts[1]), int(parts[2])
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphFormatError(f"vertex out of range 1..{n}", lineno)
            edges.append((u - 1, v - 1))
            lines.append(lineno)
        else:
            raise GraphFormatError(f"unknown line type {tag!r}", lineno)
    if n is None:
        raise GraphFormatError("missing 'p edge' line")
    if len(edges) != m:
        raise GraphFormatError(f"problem line announces {m} edges, found {len(edges)}")
    return GraphDocument(_build(n, edges, lines), None, "dimacs-graph", tuple(comments))


def format_dimacs_graph(G: Graph) -> str:
    out = [f"p edge {G.n} {G.m}"]
    out += [f"e {u + 1} {v + 1}" for u, v in G.edges()]
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------


def parse_graph(text: bytes | str, format: str = "edge-list") -> GraphDocument:
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise GraphFormatError(f"input is not UTF-8: {exc}") from None
    if format == "edge-list":
        return parse_edge_list(text)
    if format == "graph6":
        return parse_graph6(text)
    if format == "dimacs-graph":
        return parse_dimacs_graph(text)
    raise InputError(f"unknown graph format {format!r}; choose from {FORMATS}")


def format_graph(G: Graph, format: str = "edge-list", labels=None) -> str:
    if format == "edge-list":
        return format_edge_list(G, labels)
    if format == "graph6":
        return to_graph6(G) + "\n"
    if format == "dimacs-graph":
        return format_dimacs_graph(G)
    raise InputError(f"unknown graph format {format!r}; choose from {FORMATS}")


def to_dot(G: Graph, labels=None, highlight: int = 0) -> str:
    name = (lambda v: labels[v]) if labels else str
    out = ["graph G {"]
    for v in range(G.n):
        style = ' [style=filled, fillcolor="lightblue"]' if highlight >> v & 1 else ""
        out.append(f'  {v} [label="{name(v)}"]{style};')
    out += [f"  {u} -- {v};" for u, v in G.edges()]
    out.append("}")
    return "\n".join(out) + "\n"

