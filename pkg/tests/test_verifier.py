import random
from dataclasses import replace

import pytest

from tecc.cactus_builder import Cactus
from tecc.decomposer import Component, decompose
from tecc.mader_cs import K23_SEED, MADER_PATH, CertPath
from tecc.multigraph import Multigraph
from tecc.verifier import (
    cactus_implied_pairs,
    verify_cactus,
    verify_mader_sequence,
    verify_report,
)

from graphs import GOLDEN, build, bridged_triangles, complete, k2_3


def random_graph(rng, n, m):
    pairs = []
    for _ in range(m):
        while True:
            u, v = rng.randrange(n), rng.randrange(n)
            if u != v:
                break
        pairs.append((u, v))
    return Multigraph(n, pairs)


def multi_components(g):
    report = decompose(g)
    return report, [c for c in report.components if len(c.members) > 1]


ALWAYS_CHECKS = [
    "members partition the vertices",
    "member lists are sorted",
    "certificate present exactly for multi-vertex components",
    "components ordered by smallest member",
    "bridges reference input edges",
    "connectivity flag matches the report",
    "one cactus per 2-edge-connected block",
    "construction sequences replay",
    "ear count per block is m'-n'+1",
]
ORACLE_CHECKS = [
    "partition matches brute force",
    "bridges match brute force",
    "cactus cut pairs match brute force",
]


def test_reports_verify_on_goldens():
    for ctor in GOLDEN.values():
        g = ctor()
        verdict = verify_report(g, decompose(g))
        assert verdict, verdict.failures()
        assert [name for name, _, _ in verdict.checks] == ALWAYS_CHECKS + ORACLE_CHECKS


def test_reports_verify_on_randoms():
    rng = random.Random(321)
    for _ in range(25):
        g = random_graph(rng, rng.randint(2, 10), rng.randint(1, 24))
        verdict = verify_report(g, decompose(g))
        assert verdict, verdict.failures()


def test_oracle_bound_zero_skips_brute_force():
    g = complete(4)
    verdict = verify_report(g, decompose(g), oracle_bound=0)
    assert verdict
    assert [name for name, _, _ in verdict.checks] == ALWAYS_CHECKS


def test_mader_accepts_all_golden_components():
    for ctor in GOLDEN.values():
        g = ctor()
        _, comps = multi_components(g)
        for comp in comps:
            verdict = verify_mader_sequence(g, comp)
            assert verdict, (comp.members, verdict.reason)


def tampered(comp, cert):
    return replace(comp, certificate=cert)


def test_reject_missing_certificate():
    g = complete(4)
    _, (comp,) = multi_components(g)
    verdict = verify_mader_sequence(g, tampered(comp, None))
    assert not verdict and "no certificate" in verdict.reason


def test_reject_dropped_path():
    g = complete(4)
    _, (comp,) = multi_components(g)
    verdict = verify_mader_sequence(g, tampered(comp, comp.certificate[:-1]))
    assert not verdict and "not covered" in verdict.reason


def test_reject_duplicate_edge_id():
    g = complete(4)
    _, (comp,) = multi_components(g)
    cert = list(comp.certificate)
    last = cert[-1]
    cert[-1] = replace(last, edges=[cert[0].edges[0]])
    verdict = verify_mader_sequence(g, tampered(comp, cert))
    assert not verdict and "used twice" in verdict.reason


def test_reject_foreign_vertex():
    g = bridged_triangles()
    report = decompose(g)
    comp = report.components[0]
    bad = Component(comp.rep, comp.members, comp.certificate, comp.virtual_edge)
    # claim a vertex of the far triangle
    verdict = verify_mader_sequence(g, replace(bad, members=[0]))
    assert not verdict


def test_reject_seedless_certificate():
    g = complete(4)
    _, (comp,) = multi_components(g)
    cert = [replace(p, tag=MADER_PATH) for p in comp.certificate]
    verdict = verify_mader_sequence(g, tampered(comp, cert))
    assert not verdict and "no seed" in verdict.reason


def test_reject_broken_theta():
    g = k2_3()
    _, (comp,) = multi_components(g)
    cert = list(comp.certificate)
    cert[1] = replace(cert[1], tag=MADER_PATH)  # seed degenerates to a bare cycle
    verdict = verify_mader_sequence(g, tampered(comp, cert))
    assert not verdict


def test_reject_path_shape_mismatch():
    g = complete(4)
    _, (comp,) = multi_components(g)
    cert = list(comp.certificate)
    cert[0] = replace(cert[0], vertices=cert[0].vertices[:-1])
    verdict = verify_mader_sequence(g, tampered(comp, cert))
    assert not verdict and "shape" in verdict.reason


def test_reject_wrong_endpoints():
    g = complete(4)
    _, (comp,) = multi_components(g)
    cert = list(comp.certificate)
    # last path is a single real edge; claim it runs elsewhere
    last = cert[-1]
    u, v = last.vertices[0], last.vertices[-1]
    others = [x for x in comp.members if x not in (u, v)]
    cert[-1] = replace(last, vertices=[others[0], others[1]])
    verdict = verify_mader_sequence(g, tampered(comp, cert))
    assert not verdict and "endpoints disagree" in verdict.reason


def test_reject_misflagged_virtual():
    g = complete(4)
    _, (comp,) = multi_components(g)
    cert = list(comp.certificate)
    eid, _ = cert[-1].edges[0]
    cert[-1] = replace(cert[-1], edges=[(eid, True)])
    verdict = verify_mader_sequence(g, tampered(comp, cert))
    assert not verdict and "tagged virtual but is real" in verdict.reason


def test_reject_unknown_virtual_id():
    g = complete(4)
    _, (comp,) = multi_components(g)
    cert = list(comp.certificate)
    cert[-1] = replace(cert[-1], edges=[(99, False)])
    verdict = verify_mader_sequence(g, tampered(comp, cert))
    assert not verdict and "tagged real but unknown" in verdict.reason


# handcrafted certificates over small multigraphs: the verifier judges the
# sequence on its own terms, not against the engine's emission order

THREE_PLUS_DETOUR = build(3, [(0, 1), (0, 1), (0, 1), (0, 2), (2, 1), (0, 2), (2, 1)])


def seed_k2_3():
    return [
        CertPath([0, 1, 0], [(0, False), (1, False)], K23_SEED),
        CertPath([0, 1], [(2, False)], K23_SEED),
    ]


def test_handcrafted_certificate_accepted():
    cert = seed_k2_3() + [
        CertPath([0, 2, 1], [(3, False), (4, False)], MADER_PATH),
        CertPath([0, 2], [(5, False)], MADER_PATH),
        CertPath([2, 1], [(6, False)], MADER_PATH),
    ]
    comp = Component(0, [0, 1, 2], cert, None)
    assert verify_mader_sequence(THREE_PLUS_DETOUR, comp)


def test_reject_reintroduced_internal_vertex():
    cert = seed_k2_3() + [
        CertPath([0, 2, 1], [(3, False), (4, False)], MADER_PATH),
        CertPath([0, 2, 1], [(5, False), (6, False)], MADER_PATH),
    ]
    comp = Component(0, [0, 1, 2], cert, None)
    verdict = verify_mader_sequence(THREE_PLUS_DETOUR, comp)
    assert not verdict and "already present" in verdict.reason


def test_reject_path_between_same_link():
    g = build(4, [(0, 2), (2, 3), (3, 1), (0, 1), (0, 1), (2, 3)])
    cert = [
        CertPath([0, 2, 3, 1], [(0, False), (1, False), (2, False)], K23_SEED),
        CertPath([0, 1], [(3, False)], K23_SEED),
        CertPath([0, 1], [(4, False)], K23_SEED),
        CertPath([2, 3], [(5, False)], MADER_PATH),
    ]
    comp = Component(0, [0, 1, 2, 3], cert, None)
    verdict = verify_mader_sequence(g, comp)
    assert not verdict and "same link" in verdict.reason


def test_reject_cycle_at_degree_two_vertex():
    g = build(4, [(0, 1), (0, 1), (0, 2), (2, 1), (2, 3), (2, 3)])
    cert = [
        CertPath([0, 2, 1], [(2, False), (3, False)], K23_SEED),
        CertPath([0, 1], [(0, False)], K23_SEED),
        CertPath([0, 1], [(1, False)], K23_SEED),
        CertPath([2, 3, 2], [(4, False), (5, False)], MADER_PATH),
    ]
    comp = Component(0, [0, 1, 2, 3], cert, None)
    verdict = verify_mader_sequence(g, comp)
    assert not verdict and "degree-2" in verdict.reason


def test_cycle_at_branch_vertex_accepted():
    g = build(4, [(0, 1), (0, 1), (0, 2), (2, 1), (2, 3), (2, 3), (0, 2), (2, 3)])
    cert = [
        CertPath([0, 2, 1], [(2, False), (3, False)], K23_SEED),
        CertPath([0, 1], [(0, False)], K23_SEED),
        CertPath([0, 1], [(1, False)], K23_SEED),
        CertPath([0, 2], [(6, False)], MADER_PATH),
        CertPath([2, 3, 2], [(4, False), (5, False)], MADER_PATH),
        CertPath([2, 3], [(7, False)], MADER_PATH),
    ]
    comp = Component(0, [0, 1, 2, 3], cert, None)
    verdict = verify_mader_sequence(g, comp)
    assert verdict, verdict.reason


def test_alternative_path_order_accepted():
    g = build(3, [(0, 1), (1, 2), (2, 0), (0, 1), (1, 2), (2, 0)])
    _, (comp,) = multi_components(g)
    cert = list(comp.certificate)
    assert [p.tag for p in cert[2:]] == [MADER_PATH, MADER_PATH]
    cert[2], cert[3] = cert[3], cert[2]
    verdict = verify_mader_sequence(g, tampered(comp, cert))
    assert verdict, verdict.reason


# cactus tampering


def with_cacti(report, cacti):
    return replace(report, cacti=cacti)


def test_cactus_rejects_reordered_cycle():
    g = GOLDEN["c4"]()
    report = decompose(g)
    bad = with_cacti(report, [Cactus(nodes=[0, 1, 2, 3], cycles=[[0, 2, 3, 1]])])
    implied, reason = cactus_implied_pairs(g, bad)
    assert implied is None and "crossing edges" in reason
    assert not verify_cactus(g, bad)


def test_cactus_rejects_edgeless_shape():
    g = GOLDEN["c4"]()
    report = decompose(g)
    bad = with_cacti(report, [Cactus(nodes=[0, 1, 2, 3], cycles=[])])
    verdict = verify_cactus(g, bad)
    assert not verdict and "disconnected" in verdict.reason


def test_cactus_rejects_dropped_cycle():
    g = GOLDEN["c4"]()
    report = decompose(g)
    bad = with_cacti(report, [Cactus(nodes=[0], cycles=[])])
    verdict = verify_cactus(g, bad)
    assert not verdict and "missing" in verdict.reason


def test_cactus_rejects_unsplittable_pair():
    g = bridged_triangles()
    report = decompose(g)
    first = report.cacti[0]
    bad_first = Cactus(nodes=first.nodes, cycles=first.cycles + [[0, 1]])
    bad = with_cacti(report, [bad_first, report.cacti[1]])
    implied, reason = cactus_implied_pairs(g, bad)
    assert implied is None and "does not split" in reason


def test_cactus_rejects_duplicated_pair():
    g = bridged_triangles()
    report = decompose(g)
    bad = with_cacti(report, [report.cacti[0], report.cacti[0], report.cacti[1]])
    implied, reason = cactus_implied_pairs(g, bad)
    assert implied is None and "twice" in reason


def test_cactus_rejects_foreign_node():
    g = GOLDEN["c3"]()
    report = decompose(g)
    bad = with_cacti(report, [Cactus(nodes=[0, 1, 2], cycles=[[0, 2, 7]])])
    implied, reason = cactus_implied_pairs(g, bad)
    assert implied is None and "foreign" in reason


def test_cactus_rejects_disconnected_shape():
    g = GOLDEN["c4"]()
    report = decompose(g)
    bad = with_cacti(report, [Cactus(nodes=[0, 1, 2, 3], cycles=[[0, 1], [2, 3]])])
    implied, reason = cactus_implied_pairs(g, bad)
    assert implied is None and "disconnected" in reason


def test_report_rejects_shuffled_members():
    g = GOLDEN["c3"]()
    report = decompose(g)
    comps = list(report.components)
    comps[0] = replace(comps[0], members=[1])
    comps[1] = replace(comps[1], members=[0])
    verdict = verify_report(g, replace(report, components=comps))
    assert not verdict
    failed = {name for name, ok, _ in verdict.checks if not ok}
    assert "components ordered by smallest member" in failed


def test_report_rejects_dropped_bridge():
    g = bridged_triangles()
    report = decompose(g)
    verdict = verify_report(g, replace(report, bridges=[]))
    assert not verdict
    failed = {name for name, ok, _ in verdict.checks if not ok}
    assert "bridges match brute force" in failed


def test_report_rejects_wrong_flag():
    g = complete(4)
    report = decompose(g)
    verdict = verify_report(g, replace(report, is_three_edge_connected=False))
    assert not verdict
    failed = {name for name, ok, _ in verdict.checks if not ok}
    assert failed == {"connectivity flag matches the report"}
