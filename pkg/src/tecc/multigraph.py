"""Undirected multigraph data model plus the line-oriented file format.

The graph is deliberately dumb: dense 0-based vertex indices, dense 0-based
edge ids, parallel edges allowed, self-loops rejected (the parser strips and
logs them instead).  Adjacency order is insertion order; the decomposition
engine uses that order as its deterministic tie-break, so it is part of the
contract and never sorted or deduplicated.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field


class ParseError(ValueError):
    """Raised for malformed input files; carries the 1-based line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"{message}, line {line}")
        self.line = line


@dataclass
class NormalizationLog:
    removed_self_loops: int = 0
    isolated_vertices: list[int] = field(default_factory=list)


class Multigraph:
    """Immutable-by-convention multigraph.

    Attributes:
        vertex_count: number of vertices, indexed 0..n-1.
        edges: list of (u, v, edge_id) with edge_id dense 0..m-1.
        adjacency: per vertex, list of (edge_id, other_endpoint) half-edges in
            insertion order.  Every edge appears exactly twice overall.
    """

    def __init__(self, vertex_count: int, edge_pairs=()):
        if vertex_count < 0:
            raise ValueError("vertex_count must be >= 0")
        self.vertex_count = vertex_count
        self.edges: list[tuple[int, int, int]] = []
        self.adjacency: list[list[tuple[int, int]]] = [[] for _ in range(vertex_count)]
        for u, v in edge_pairs:
            self.add_edge(u, v)

    def add_edge(self, u: int, v: int) -> int:
        n = self.vertex_count
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise ValueError(f"self-loop ({u}, {v}) not allowed; normalize first")
        eid = len(self.edges)
        self.edges.append((u, v, eid))
        self.adjacency[u].append((eid, v))
        self.adjacency[v].append((eid, u))
        return eid

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        """Number of incident edges, parallel edges counted with multiplicity."""
        return len(self.adjacency[v])

    def endpoints(self, eid: int) -> tuple[int, int]:
        u, v, _ = self.edges[eid]
        return u, v

    def copy_without_edges(self, removed) -> "Multigraph":
        """New graph minus the given edge ids.  Remaining edges get new dense ids."""
        removed = set(removed)
        g = Multigraph(self.vertex_count)
        for u, v, eid in self.edges:
            if eid not in removed:
                g.add_edge(u, v)
        return g

    def __repr__(self):  # pragma: no cover - debugging aid
        return f"Multigraph(n={self.vertex_count}, m={self.edge_count})"


def normalized(vertex_count: int, edge_pairs) -> tuple[Multigraph, NormalizationLog]:
    """Build a graph from raw pairs, stripping (and counting) self-loops."""
    log = NormalizationLog()
    g = Multigraph(vertex_count)
    for u, v in edge_pairs:
        if u == v:
            log.removed_self_loops += 1
        else:
            g.add_edge(u, v)
    log.isolated_vertices = [v for v in range(vertex_count) if not g.adjacency[v]]
    return g, log


def parse_graph(text) -> tuple[Multigraph, NormalizationLog]:
    """Parse the external format into a normalized graph.

    Format: optional comment lines starting with "c", exactly one header
    "p <n> <m>", then exactly m lines "e <u> <v>" with 1-based endpoints.
    LF or CRLF both fine.  Self-loops are stripped and logged, not rejected.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not ASCII ({exc.reason})", 0) from exc

    n = None
    declared_m = None
    pairs: list[tuple[int, int]] = []
    header_line = 0

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if n is not None:
                raise ParseError("duplicate header", lineno)
            if len(fields) != 3:
                raise ParseError("malformed header, expected 'p <n> <m>'", lineno)
            try:
                n, declared_m = int(fields[1]), int(fields[2])
            except ValueError:
                raise ParseError("malformed header, non-integer counts", lineno)
            if n < 0 or declared_m < 0:
                raise ParseError("malformed header, negative counts", lineno)
            header_line = lineno
        elif fields[0] == "e":
            if n is None:
                raise ParseError("edge before header", lineno)
            if len(fields) != 3:
                raise ParseError("malformed edge, expected 'e <u> <v>'", lineno)
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise ParseError("malformed edge, non-integer endpoint", lineno)
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError("vertex index out of range", lineno)
            if len(pairs) >= declared_m:
                raise ParseError(f"more than {declared_m} edge lines", lineno)
            pairs.append((u - 1, v - 1))
        else:
            raise ParseError(f"unknown line type {fields[0]!r}", lineno)

    if n is None:
        raise ParseError("missing header", 0)
    if len(pairs) != declared_m:
        raise ParseError(
            f"edge count mismatch: header says {declared_m}, got {len(pairs)}",
            header_line,
        )
    return normalized(n, pairs)


def serialize_graph(g: Multigraph) -> str:
    """Inverse of parse_graph (up to stripped self-loops): ids and order kept."""
    lines = [f"p {g.vertex_count} {g.edge_count}"]
    for u, v, _ in g.edges:
        lines.append(f"e {u + 1} {v + 1}")
    return "\n".join(lines) + "\n"


def connected_components(g: Multigraph) -> list[list[int]]:
    """Partition of vertices into maximal connected blocks, sorted by minimum."""
    n = g.vertex_count
    seen = [False] * n
    blocks = []
    for start in range(n):
        if seen[start]:
            continue
        seen[start] = True
        block = [start]
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for _, other in g.adjacency[x]:
                if not seen[other]:
                    seen[other] = True
                    block.append(other)
                    queue.append(other)
        block.sort()
        blocks.append(block)
    return blocks
