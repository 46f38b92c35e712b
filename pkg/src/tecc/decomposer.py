"""Top-level decomposition: one engine pass, then report assembly.

decompose() runs the engine over every connected component of the input,
materializes certificates for the multi-vertex components, groups the closed
chains into per-block cacti, and returns everything as one report.  The
report orderings are canonical (components by smallest member, bridges by
edge id, cacti by smallest node) so equal inputs produce equal reports.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _core
from .cactus_builder import Cactus, build_cacti
from .dfs_ear import DfsAnnotations, annotations_from_engine
from .mader_cs import CertPath, materialize_certificate
from .multigraph import Multigraph


@dataclass
class Component:
    """One 3-edge-connected component.

    certificate is None exactly for singletons.  virtual_edge is the seed's
    closing edge (u, v, edge id) when the component was cut out by an edge
    pair, else None.
    """

    rep: int
    members: list[int]
    certificate: list[CertPath] | None
    virtual_edge: tuple[int, int, int] | None


@dataclass
class ThreeEccReport:
    components: list[Component]
    bridges: list[tuple[int, int, int]]
    cacti: list[Cactus]
    is_three_edge_connected: bool
    annotations: DfsAnnotations
    phi: list[int]
    events: int

    def component_of(self, v: int) -> Component:
        rep = self.phi[v]
        for comp in self.components:
            if comp.rep == rep:
                return comp
        raise KeyError(f"vertex {v} has no component")


def decompose(g: Multigraph, root: int | None = None, debug: bool = False) -> ThreeEccReport:
    """Decompose g into 3-edge-connected components with certificates.

    root picks the first DFS root; remaining connected components are rooted
    at their smallest unvisited vertex.  debug enables the engine's internal
    invariant checks (quadratic, for small graphs only).
    """
    n = g.vertex_count
    adj_off = [0] * (n + 1)
    adj_eid: list[int] = []
    adj_other: list[int] = []
    for v in range(n):
        for eid, other in g.adjacency[v]:
            adj_eid.append(eid)
            adj_other.append(other)
        adj_off[v + 1] = len(adj_eid)
    eu = [e[0] for e in g.edges]
    ev = [e[1] for e in g.edges]

    engine = _core.Engine(n, adj_off, adj_eid, adj_other, eu, ev, debug=debug)
    roots: list[int] = []
    if root is not None:
        if not 0 <= root < n:
            raise ValueError(f"root {root} out of range")
        engine.run(root)
        roots.append(root)
    for v in range(n):
        if engine.dfs[v] == 0:
            engine.run(v)
            roots.append(v)

    ann = annotations_from_engine(engine, roots)

    phi = list(range(n))
    components: list[Component] = []
    for rep, members, payloads, seed_len, virtual_edge in engine.components:
        for v in members:
            phi[v] = rep
        certificate = None
        if len(members) > 1:
            certificate = materialize_certificate(ann, payloads, seed_len)
        components.append(
            Component(
                rep=rep,
                members=sorted(members),
                certificate=certificate,
                virtual_edge=virtual_edge,
            )
        )
    components.sort(key=lambda c: c.members[0])

    bridges = sorted(((eu[e], ev[e], e) for _, _, e in engine.bridges), key=lambda b: b[2])
    bridge_ids = {b[2] for b in bridges}
    cacti = build_cacti(g, phi, engine.cycles, bridge_ids)

    is_3ec = (
        len(components) == 1
        and not bridges
        and all(not c.cycles for c in cacti)
    )

    return ThreeEccReport(
        components=components,
        bridges=bridges,
        cacti=cacti,
        is_three_edge_connected=is_3ec,
        annotations=ann,
        phi=phi,
        events=engine.events,
    )
