"""Independent certificate checking.

Nothing here reuses engine internals: the positive certificate (construction
sequences) is replayed path by path against the Mader operation rules, and
the negative certificate (cacti) is expanded into the cut pairs it implies
and compared against brute force.  A report that passes verify_report is
correct by replay, not by trust in the decomposition.

The graph a certificate must cover is the component's slice: every input
edge with both endpoints inside the component, plus exactly the virtual
edges the certificate itself declares.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass, field

from .cactus_builder import two_ecc_partition
from .decomposer import Component, ThreeEccReport
from .dfs_ear import BACK
from .mader_cs import K23_SEED, MADER_PATH
from .multigraph import Multigraph
from .oracle import bridges_bf, cut_pairs_bf, three_ecc_bf

DEFAULT_ORACLE_BOUND = 12


@dataclass
class MaderVerdict:
    ok: bool
    reason: str = ""
    path_index: int | None = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass
class ReportVerdict:
    ok: bool
    checks: list[tuple[str, bool, str]] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok

    def failures(self) -> list[tuple[str, bool, str]]:
        return [c for c in self.checks if not c[1]]


class _Replay:
    """Growing multigraph H during certificate replay."""

    def __init__(self) -> None:
        self.adj: dict[int, list[tuple[int, int]]] = {}
        self.edge_count = 0

    def add_edge(self, u: int, v: int, key: int) -> None:
        self.adj.setdefault(u, []).append((key, v))
        self.adj.setdefault(v, []).append((key, u))
        self.edge_count += 1

    def add_vertex(self, v: int) -> None:
        self.adj.setdefault(v, [])

    def degree(self, v: int) -> int:
        return len(self.adj.get(v, ()))

    def has_vertex(self, v: int) -> bool:
        return v in self.adj

    def is_connected(self) -> bool:
        if not self.adj:
            return True
        start = next(iter(self.adj))
        seen = {start}
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for _, other in self.adj[x]:
                if other not in seen:
                    seen.add(other)
                    queue.append(other)
        return len(seen) == len(self.adj)

    def link_edges(self, v: int) -> frozenset[int]:
        """Edge set of the maximal chain of degree-2 vertices through v.

        v must have degree 2.  The chain extends in both directions until a
        branch vertex (degree != 2) or until it closes into a cycle."""
        left_key, left_other = self.adj[v][0]
        right_key, right_other = self.adj[v][1]
        edges = {left_key, right_key}
        for key, cur in ((left_key, left_other), (right_key, right_other)):
            prev_key = key
            while cur != v and self.degree(cur) == 2:
                a, b = self.adj[cur]
                nxt = b if a[0] == prev_key else a
                if nxt[0] in edges:
                    break
                edges.add(nxt[0])
                prev_key = nxt[0]
                cur = nxt[1]
            if cur == v:
                break  # closed cycle: one direction already covered everything
        return frozenset(edges)


def _is_theta(h: _Replay) -> str:
    """Empty string when H is a theta subdivision (two degree-3 vertices
    joined by three internally disjoint paths), else the violation."""
    if not h.adj:
        return "seed is empty"
    if not h.is_connected():
        return "seed is not connected"
    n = len(h.adj)
    if h.edge_count != n + 1:
        return f"seed has {h.edge_count} edges over {n} vertices, not n+1"
    deg3 = [v for v in h.adj if h.degree(v) == 3]
    other = [v for v in h.adj if h.degree(v) not in (2, 3)]
    if other:
        return f"seed vertex {other[0]} has degree {h.degree(other[0])}"
    if len(deg3) != 2:
        return f"seed has {len(deg3)} degree-3 vertices, not 2"
    return ""


def verify_mader_sequence(g: Multigraph, comp: Component) -> MaderVerdict:
    """Replay one component's construction sequence.

    Checks, in order: path well-formedness and edge endpoint consistency
    with the input graph; the tagged seed forms a theta subdivision; every
    later path is a valid Mader addition against the current graph; the
    final graph covers the component's slice exactly and has minimum
    degree 3.  Any valid ordering is accepted; this does not assume the
    engine's emission order.
    """
    members = set(comp.members)
    cert = comp.certificate
    if cert is None:
        return MaderVerdict(False, "component has no certificate")

    # well-formedness and coverage bookkeeping
    seen_ids: dict[int, tuple[int, int]] = {}
    for idx, path in enumerate(cert):
        if len(path.vertices) < 2 or len(path.edges) != len(path.vertices) - 1:
            return MaderVerdict(False, "path shape mismatch", idx)
        if path.tag not in (K23_SEED, MADER_PATH):
            return MaderVerdict(False, f"unknown tag {path.tag!r}", idx)
        for v in path.vertices:
            if v not in members:
                return MaderVerdict(False, f"vertex {v} outside the component", idx)
        for i, (eid, is_virtual) in enumerate(path.edges):
            a, b = path.vertices[i], path.vertices[i + 1]
            if a == b:
                return MaderVerdict(False, "self-loop step", idx)
            if eid in seen_ids:
                return MaderVerdict(False, f"edge {eid} used twice", idx)
            seen_ids[eid] = (a, b)
            if is_virtual:
                if eid < g.edge_count:
                    return MaderVerdict(False, f"edge {eid} tagged virtual but is real", idx)
            else:
                if eid >= g.edge_count:
                    return MaderVerdict(False, f"edge {eid} tagged real but unknown", idx)
                gu, gv, _ = g.edges[eid]
                if {a, b} != {gu, gv}:
                    return MaderVerdict(
                        False, f"edge {eid} endpoints disagree with the input", idx
                    )

    # exact coverage of the component slice
    slice_ids = {
        eid for (gu, gv, eid) in g.edges if gu in members and gv in members
    }
    real_used = {eid for eid in seen_ids if eid < g.edge_count}
    missing = slice_ids - real_used
    if missing:
        return MaderVerdict(False, f"input edge {min(missing)} not covered")
    extra = real_used - slice_ids
    if extra:
        return MaderVerdict(False, f"edge {min(extra)} does not belong to the component")

    seed = [p for p in cert if p.tag == K23_SEED]
    rest = [(i, p) for i, p in enumerate(cert) if p.tag == MADER_PATH]
    if not seed:
        return MaderVerdict(False, "certificate has no seed")

    h = _Replay()
    for path in seed:
        for i, (eid, _) in enumerate(path.edges):
            h.add_edge(path.vertices[i], path.vertices[i + 1], eid)
    theta_problem = _is_theta(h)
    if theta_problem:
        return MaderVerdict(False, theta_problem, cert.index(seed[0]))

    for idx, path in rest:
        p = path.vertices[0]
        q = path.vertices[-1]
        internals = path.vertices[1:-1]
        if not h.has_vertex(p) or not h.has_vertex(q):
            return MaderVerdict(False, "path endpoint not in the graph yet", idx)
        if len(set(internals)) != len(internals):
            return MaderVerdict(False, "repeated internal vertex", idx)
        for v in internals:
            if h.has_vertex(v):
                return MaderVerdict(False, f"internal vertex {v} already present", idx)
        branch_p = h.degree(p) >= 3
        branch_q = h.degree(q) >= 3
        if p == q:
            if not branch_p:
                return MaderVerdict(False, "cycle attached at a degree-2 vertex", idx)
        elif not branch_p and not branch_q:
            # both endpoints subdivide links; the links must differ
            if h.degree(p) != 2 or h.degree(q) != 2:
                return MaderVerdict(False, "endpoint with degree below 2", idx)
            if h.link_edges(p) == h.link_edges(q):
                return MaderVerdict(False, "both endpoints on the same link", idx)
        for i, (eid, _) in enumerate(path.edges):
            h.add_edge(path.vertices[i], path.vertices[i + 1], eid)

    if set(h.adj) != members:
        return MaderVerdict(False, "final graph does not reach every member")
    low = [v for v in h.adj if h.degree(v) < 3]
    if low:
        return MaderVerdict(False, f"final degree of {low[0]} is below 3")
    return MaderVerdict(True)


def cactus_implied_pairs(
    g: Multigraph, report: ThreeEccReport
) -> tuple[set[tuple[int, int]] | None, str]:
    """All cut pairs implied by the report's cacti, or None with a reason
    when some cactus is structurally unsound."""
    members_of = {comp.rep: comp.members for comp in report.components}
    bridge_ids = {b[2] for b in report.bridges}
    implied: set[tuple[int, int]] = set()
    for cactus in report.cacti:
        nodes = cactus.nodes
        node_set = set(nodes)
        if len(node_set) != len(nodes):
            return None, "cactus repeats a node"
        # cactus multigraph: one edge per consecutive cycle position
        adj: dict[int, list[tuple[int, int]]] = {v: [] for v in nodes}
        edge_positions: list[tuple[int, int]] = []
        cycle_edges: list[list[int]] = []
        for cycle in cactus.cycles:
            if len(cycle) < 2:
                return None, "cactus cycle shorter than 2"
            if len(set(cycle)) != len(cycle):
                return None, "cactus cycle repeats a node"
            for v in cycle:
                if v not in node_set:
                    return None, f"cactus cycle uses foreign node {v}"
            ids = []
            for i in range(len(cycle)):
                a = cycle[i]
                b = cycle[(i + 1) % len(cycle)]
                key = len(edge_positions)
                edge_positions.append((a, b))
                adj[a].append((key, b))
                adj[b].append((key, a))
                ids.append(key)
            cycle_edges.append(ids)
        # connectivity of the cactus itself
        if nodes:
            seen = {nodes[0]}
            queue = deque([nodes[0]])
            while queue:
                x = queue.popleft()
                for _, other in adj[x]:
                    if other not in seen:
                        seen.add(other)
                        queue.append(other)
            if len(seen) != len(nodes):
                return None, "cactus is disconnected"
        for ids in cycle_edges:
            for i in range(len(ids)):
                for j in range(i + 1, len(ids)):
                    cut = {ids[i], ids[j]}
                    # split the cactus without the two cycle edges
                    side = {nodes[0]: 0}
                    queue = deque([nodes[0]])
                    while queue:
                        x = queue.popleft()
                        for key, other in adj[x]:
                            if key in cut or other in side:
                                continue
                            side[other] = 0
                            queue.append(other)
                    if len(side) == len(nodes):
                        return None, "removing a cycle edge pair does not split the cactus"
                    # project the split back to input vertices
                    g_side = set()
                    for rep in side:
                        g_side.update(members_of.get(rep, [rep]))
                    crossing = [
                        eid
                        for (gu, gv, eid) in g.edges
                        if eid not in bridge_ids and (gu in g_side) != (gv in g_side)
                    ]
                    if len(crossing) != 2:
                        return (
                            None,
                            f"cactus cut implies {len(crossing)} crossing edges, not 2",
                        )
                    a, b = sorted(crossing)
                    if (a, b) in implied:
                        return None, f"cut pair ({a}, {b}) implied twice"
                    implied.add((a, b))
    return implied, ""


def verify_cactus(g: Multigraph, report: ThreeEccReport) -> MaderVerdict:
    """Check the cacti structurally and against brute-force cut pairs."""
    implied, reason = cactus_implied_pairs(g, report)
    if implied is None:
        return MaderVerdict(False, reason)
    expected = cut_pairs_bf(g)
    if implied != expected:
        missing = expected - implied
        extra = implied - expected
        parts = []
        if missing:
            parts.append(f"missing {sorted(missing)[:3]}")
        if extra:
            parts.append(f"spurious {sorted(extra)[:3]}")
        return MaderVerdict(False, "implied cut pairs disagree: " + ", ".join(parts))
    return MaderVerdict(True)


def _oracle_bound() -> int:
    env = os.environ.get("TECC_ORACLE_MAX_N")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            pass
    return DEFAULT_ORACLE_BOUND


def verify_report(
    g: Multigraph, report: ThreeEccReport, oracle_bound: int | None = None
) -> ReportVerdict:
    """Full verification: structure always, certificate replay always,
    brute-force comparisons when the graph is small enough.

    oracle_bound caps the brute-force part (default 12 vertices, overridable
    via TECC_ORACLE_MAX_N); larger graphs still get every structural and
    replay check.
    """
    if oracle_bound is None:
        oracle_bound = _oracle_bound()
    checks: list[tuple[str, bool, str]] = []

    def add(name: str, ok: bool, detail: str = "") -> None:
        checks.append((name, ok, detail))

    # partition structure
    covered: list[int] = []
    sorted_ok = True
    cert_presence_ok = True
    for comp in report.components:
        covered.extend(comp.members)
        if comp.members != sorted(comp.members):
            sorted_ok = False
        want_cert = len(comp.members) > 1
        if (comp.certificate is not None) != want_cert:
            cert_presence_ok = False
    add(
        "members partition the vertices",
        sorted(covered) == list(range(g.vertex_count)),
        f"{len(covered)} member entries over {g.vertex_count} vertices",
    )
    add("member lists are sorted", sorted_ok)
    add("certificate present exactly for multi-vertex components", cert_presence_ok)

    order_ok = all(
        report.components[i].members[0] < report.components[i + 1].members[0]
        for i in range(len(report.components) - 1)
    )
    add("components ordered by smallest member", order_ok)

    bridge_ok = True
    detail = ""
    seen_bridges = set()
    for u, v, eid in report.bridges:
        if not (0 <= eid < g.edge_count) or eid in seen_bridges:
            bridge_ok, detail = False, f"bad or repeated bridge id {eid}"
            break
        seen_bridges.add(eid)
        gu, gv, _ = g.edges[eid]
        if {u, v} != {gu, gv}:
            bridge_ok, detail = False, f"bridge {eid} endpoints disagree"
            break
    add("bridges reference input edges", bridge_ok, detail)

    flag_ok = report.is_three_edge_connected == (
        len(report.components) == 1
        and not report.bridges
        and all(not c.cycles for c in report.cacti)
    )
    add("connectivity flag matches the report", flag_ok)

    # cacti cover every 2ecc block exactly
    bridge_ids = {b[2] for b in report.bridges}
    blocks = two_ecc_partition(g, bridge_ids)
    cacti_nodes = sorted(tuple(c.nodes) for c in report.cacti)
    block_nodes = sorted(tuple(sorted({report.phi[v] for v in block})) for block in blocks)
    add(
        "one cactus per 2-edge-connected block",
        cacti_nodes == block_nodes,
        f"{len(report.cacti)} cacti over {len(blocks)} blocks",
    )

    # certificate replay
    replay_ok = True
    replay_detail = ""
    for comp in report.components:
        if comp.certificate is None:
            continue
        verdict = verify_mader_sequence(g, comp)
        if not verdict.ok:
            replay_ok = False
            replay_detail = (
                f"component {comp.rep}: {verdict.reason}"
                + (f" (path {verdict.path_index})" if verdict.path_index is not None else "")
            )
            break
    add("construction sequences replay", replay_ok, replay_detail)

    # ear count per block from the annotations
    ann = report.annotations
    ear_ok = True
    ear_detail = ""
    block_index = {}
    for i, block in enumerate(blocks):
        for v in block:
            block_index[v] = i
    back_in_block = [0] * len(blocks)
    edges_in_block = [0] * len(blocks)
    for gu, gv, eid in g.edges:
        if block_index[gu] == block_index[gv] and eid not in bridge_ids:
            edges_in_block[block_index[gu]] += 1
            if ann.edge_kind[eid] == BACK:
                back_in_block[block_index[gu]] += 1
    for i, block in enumerate(blocks):
        want = edges_in_block[i] - len(block) + 1
        if back_in_block[i] != want:
            ear_ok = False
            ear_detail = f"block {block[0]}: {back_in_block[i]} ears, expected {want}"
            break
    add("ear count per block is m'-n'+1", ear_ok, ear_detail)

    if g.vertex_count <= oracle_bound:
        add(
            "partition matches brute force",
            sorted(c.members for c in report.components) == three_ecc_bf(g),
        )
        add("bridges match brute force", bridge_ids == bridges_bf(g))
        cactus_verdict = verify_cactus(g, report)
        add("cactus cut pairs match brute force", cactus_verdict.ok, cactus_verdict.reason)

    return ReportVerdict(all(ok for _, ok, _ in checks), checks)
