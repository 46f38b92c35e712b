"""Brute-force ground truth at desk scale.

Two independent routes on purpose: the primary oracles enumerate edge
removals and re-check connectivity; `edge_connectivity_at_least` answers the
same question through flow augmentation.  They share nothing but the graph
type, so a bug in one should not hide in the other.  None of this is meant to
scale past a few dozen edges.
"""

from __future__ import annotations

from collections import deque

from .multigraph import Multigraph


def _components_without(g: Multigraph, removed=()) -> list[int]:
    """Component label per vertex after deleting the given edge ids."""
    removed = set(removed)
    n = g.vertex_count
    label = [-1] * n
    for start in range(n):
        if label[start] != -1:
            continue
        label[start] = start
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for eid, other in g.adjacency[x]:
                if eid not in removed and label[other] == -1:
                    label[other] = start
                    queue.append(other)
    return label


def is_connected(g: Multigraph) -> bool:
    if g.vertex_count <= 1:
        return True
    label = _components_without(g)
    return all(l == label[0] for l in label)


def bridges_bf(g: Multigraph) -> set[int]:
    """Edge ids whose single removal disconnects their component."""
    base = _components_without(g)
    out = set()
    for _, _, eid in g.edges:
        if _components_without(g, (eid,)) != base:
            out.add(eid)
    return out


def cut_pairs_bf(g: Multigraph) -> set[tuple[int, int]]:
    """All unordered pairs of non-bridge edges whose joint removal disconnects.

    O(m^2 (n+m)); fine for m up to a few dozen.
    """
    base = _components_without(g)
    bridges = bridges_bf(g)
    non_bridges = [eid for _, _, eid in g.edges if eid not in bridges]
    pairs = set()
    for i, e1 in enumerate(non_bridges):
        for e2 in non_bridges[i + 1:]:
            if _components_without(g, (e1, e2)) != base:
                pairs.add((e1, e2) if e1 < e2 else (e2, e1))
    return pairs


def three_ecc_bf(g: Multigraph) -> list[list[int]]:
    """3-edge-connected components by exhaustive <=2-edge removal.

    u and v stay together iff no removal of at most two edges separates them.
    Returns sorted classes, sorted by smallest member.  The relation is
    transitive for honest inputs; we assert that instead of assuming it.
    """
    n = g.vertex_count
    if n == 0:
        return []
    separated = [[False] * n for _ in range(n)]

    def mark(label):
        for u in range(n):
            for v in range(u + 1, n):
                if label[u] != label[v]:
                    separated[u][v] = separated[v][u] = True

    mark(_components_without(g))
    m = g.edge_count
    for e1 in range(m):
        mark(_components_without(g, (e1,)))
        for e2 in range(e1 + 1, m):
            mark(_components_without(g, (e1, e2)))

    classes: list[list[int]] = []
    assigned = [False] * n
    for u in range(n):
        if assigned[u]:
            continue
        cls = [u]
        assigned[u] = True
        for v in range(u + 1, n):
            if not assigned[v] and not separated[u][v]:
                cls.append(v)
                assigned[v] = True
        classes.append(cls)

    # Sanity: the together-relation must be transitive or the classes lie.
    for cls in classes:
        for i, u in enumerate(cls):
            for v in cls[i + 1:]:
                if separated[u][v]:
                    raise AssertionError(
                        f"3ecc relation not transitive at ({u}, {v}); oracle bug"
                    )
    return classes


def two_eccs_bf(g: Multigraph) -> list[list[int]]:
    """2-edge-connected components: connected blocks after deleting bridges."""
    label = _components_without(g, bridges_bf(g))
    blocks: dict[int, list[int]] = {}
    for v in range(g.vertex_count):
        blocks.setdefault(label[v], []).append(v)
    return sorted((sorted(b) for b in blocks.values()), key=lambda b: b[0])


def edge_connectivity_at_least(g: Multigraph, s: int, t: int, k: int) -> bool:
    """True iff there are >= k edge-disjoint s-t paths (flow route).

    Unit-capacity augmentation: an edge can be traversed once, or re-traversed
    backwards to cancel a previous use.  Independent of the removal oracles.
    """
    if s == t:
        return True
    used: dict[int, tuple[int, int]] = {}  # eid -> direction it is used in
    flow = 0
    while flow < k:
        prev: dict[int, tuple[int, int]] = {s: (-1, -1)}
        queue = deque([s])
        while queue and t not in prev:
            x = queue.popleft()
            for eid, other in g.adjacency[x]:
                if other in prev:
                    continue
                use = used.get(eid)
                if use is None or use == (other, x):
                    prev[other] = (x, eid)
                    queue.append(other)
        if t not in prev:
            return False
        x = t
        while x != s:
            px, eid = prev[x]
            if used.get(eid) == (x, px):
                del used[eid]  # cancellation
            else:
                used[eid] = (px, x)
            x = px
        flow += 1
    return True


def three_ecc_flow(g: Multigraph) -> list[list[int]]:
    """3ecc partition via pairwise flow tests; cross-check for three_ecc_bf."""
    n = g.vertex_count
    base = _components_without(g)
    classes: list[list[int]] = []
    for u in range(n):
        placed = False
        for cls in classes:
            rep = cls[0]
            if base[rep] == base[u] and edge_connectivity_at_least(g, rep, u, 3):
                cls.append(u)
                placed = True
                break
        if not placed:
            classes.append([u])
    return classes
