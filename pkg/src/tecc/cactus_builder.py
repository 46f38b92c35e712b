"""Cactus assembly from closed cut-edge chains.

Every cactus cycle the engine emits is a closed chain: the components listed
as chain labels, attached at the component of the vertex that closed the
chain.  Grouped by 2-edge-connected block and rendered through the
vertex-to-component map, these cycles form one cactus per block; a pair of
edges is a cut pair exactly when their images are two edges of the same
cactus cycle.  Blocks without any cycle (including isolated vertices) get a
single-node cactus so the negative certificate covers the whole graph.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .multigraph import Multigraph


@dataclass
class Cactus:
    """Cut-pair structure of one 2-edge-connected block.

    nodes are component representatives; every cycle lists distinct nodes in
    cyclic order.  A 2-node cycle encodes a single cut pair (two parallel
    cactus edges); longer cycles encode one pair per edge subset of size two.
    """

    nodes: list[int]
    cycles: list[list[int]] = field(default_factory=list)


def two_ecc_partition(g: Multigraph, bridge_ids: set[int]) -> list[list[int]]:
    """Connected components of the graph minus its bridges, sorted by
    smallest member; these are the 2-edge-connected blocks."""
    seen = [False] * g.vertex_count
    blocks: list[list[int]] = []
    for s in range(g.vertex_count):
        if seen[s]:
            continue
        seen[s] = True
        block = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for eid, other in g.adjacency[v]:
                if eid in bridge_ids or seen[other]:
                    continue
                seen[other] = True
                block.append(other)
                queue.append(other)
        blocks.append(sorted(block))
    blocks.sort(key=lambda b: b[0])
    return blocks


def build_cacti(
    g: Multigraph,
    phi: list[int],
    raw_cycles: list[tuple[int, list[int]]],
    bridge_ids: set[int],
) -> list[Cactus]:
    """Group the engine's closed chains into one cactus per 2ecc block.

    phi maps every vertex to its component representative.  A raw cycle
    (owner, labels) renders as [phi(owner)] followed by the labels, which are
    already representatives of ejected components.
    """
    blocks = two_ecc_partition(g, bridge_ids)
    block_of = [0] * g.vertex_count
    for i, block in enumerate(blocks):
        for v in block:
            block_of[v] = i
    cacti = [
        Cactus(nodes=sorted({phi[v] for v in block}), cycles=[])
        for block in blocks
    ]
    for owner, labels in raw_cycles:
        cycle = [phi[owner]] + list(labels)
        cacti[block_of[owner]].cycles.append(cycle)
    cacti.sort(key=lambda c: c.nodes[0])
    return cacti
