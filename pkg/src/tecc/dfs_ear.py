"""DFS annotations and the ear order.

The decomposition engine runs one DFS and leaves behind per-vertex and
per-edge annotations; this module wraps them in a queryable container.  Two
orders matter downstream: ancestry (constant-time via dfs number plus subtree
size) and the lexicographic order on back edges that drives every absorption
decision.  Ears are materialized lazily from the per-vertex ear labels: an
ear is its back edge followed by the maximal tree chunk that carries the same
label.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from . import _core


class Order(enum.Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


TREE = _core.TREE
BACK = _core.BACK

VIRT_BACK = _core.VIRT_BACK
VIRT_TREE = _core.VIRT_TREE
VIRT_SEED = _core.VIRT_SEED


@dataclass
class DfsAnnotations:
    """Snapshot of the engine's per-vertex and per-edge state after a run.

    Vertex arrays are indexed by vertex id; dfs_num is 1-based and 0 means
    unvisited (possible only for vertices outside every requested root's
    component).  parent and parent_edge describe the contracted forest after
    virtual rewiring; the original tree edges are the ones whose edge_kind
    is TREE.  edge_u/edge_v cover real edges first, then minted virtual
    edges, so every edge id downstream resolves here.
    """

    n: int
    dfs_num: list[int]
    parent: list[int]
    parent_edge: list[int]
    lowpt: list[int]
    desc: list[int]
    ear: list[int]
    edge_kind: list[int]
    edge_u: list[int]
    edge_v: list[int]
    m_real: int
    virtuals: list[tuple[int, int]] = field(default_factory=list)
    roots: list[int] = field(default_factory=list)

    def is_virtual(self, e: int) -> bool:
        return e >= self.m_real

    def head(self, e: int) -> int:
        a = self.edge_u[e]
        b = self.edge_v[e]
        return a if self.dfs_num[a] < self.dfs_num[b] else b

    def tail(self, e: int) -> int:
        a = self.edge_u[e]
        b = self.edge_v[e]
        return b if self.dfs_num[a] < self.dfs_num[b] else a

    def entry(self, v: int) -> int:
        """1-based preorder interval start; 0 means unvisited."""
        return self.dfs_num[v]

    def exit(self, v: int) -> int:
        """Interval end: first preorder number past v's subtree."""
        return self.dfs_num[v] + self.desc[v]

    def is_ancestor(self, a: int, b: int) -> bool:
        """True when a is b's ancestor (inclusive) in the DFS forest:
        entry(a) <= entry(b) < exit(a)."""
        da = self.dfs_num[a]
        db = self.dfs_num[b]
        if da == 0 or db == 0:
            raise ValueError("ancestry is defined only for visited vertices")
        return da <= db < da + self.desc[a]

    def ear_label_of_edge(self, e: int) -> int:
        """The ear an edge belongs to: a back edge (real or minted) is its
        own ear; a live tree edge carries the label recorded at its child
        endpoint.  -1 for bridges, seed virtuals, unvisited edges, and tree
        edges replaced by a virtual corridor."""
        if e < self.m_real:
            kind = self.edge_kind[e]
            if kind == BACK:
                return e
            if kind != TREE:
                return -1
        else:
            vkind = next((k for vid, k in self.virtuals if vid == e), None)
            if vkind == VIRT_BACK:
                return e
            if vkind != VIRT_TREE:
                return -1
        a = self.edge_u[e]
        b = self.edge_v[e]
        child = b if self.dfs_num[a] < self.dfs_num[b] else a
        if self.parent_edge[child] != e:
            return -1
        return self.ear[child]

    def compare_lex(self, a: int | None, b: int | None) -> Order:
        """Compare two back-edge ids in the absorption order; None is the
        undefined sentinel, greater than everything.  Parallel edges (and an
        edge against itself) compare EQUAL."""
        ia = -1 if a is None else a
        ib = -1 if b is None else b
        if ia == -1 and ib == -1:
            return Order.EQUAL
        if _core.lex_less(self.dfs_num, self.desc, self.edge_u, self.edge_v, ia, ib):
            return Order.LESS
        if _core.lex_less(self.dfs_num, self.desc, self.edge_u, self.edge_v, ib, ia):
            return Order.GREATER
        return Order.EQUAL

    def materialize_ear(self, e: int) -> tuple[list[int], list[int]]:
        """Expand ear e into its vertex walk and edge sequence.

        The walk starts at the ear's start (the back edge's head), crosses
        the back edge to its tail, then climbs parent edges while they carry
        this ear's label.  Cycle ears end back at the start vertex."""
        verts = [self.head(e)]
        edges = [e]
        v = self.tail(e)
        verts.append(v)
        while self.parent[v] != -1 and self.ear[v] == e:
            edges.append(self.parent_edge[v])
            v = self.parent[v]
            verts.append(v)
        return verts, edges

    def ear_start(self, e: int) -> int:
        return self.head(e)

    def ear_top(self, e: int) -> int:
        """Topmost vertex of the ear's tree chunk."""
        v = self.tail(e)
        while self.parent[v] != -1 and self.ear[v] == e:
            v = self.parent[v]
        return v


def annotations_from_engine(engine: _core.Engine, roots: list[int]) -> DfsAnnotations:
    return DfsAnnotations(
        n=engine.n,
        dfs_num=engine.dfs,
        parent=engine.parent,
        parent_edge=engine.parent_edge,
        lowpt=engine.lowpt,
        desc=engine.desc,
        ear=engine.ear_v,
        edge_kind=engine.edge_kind,
        edge_u=engine.eu,
        edge_v=engine.ev,
        m_real=engine.m_real,
        virtuals=list(engine.virtuals),
        roots=list(roots),
    )
