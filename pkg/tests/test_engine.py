import importlib.util
import os
import random

import pytest

import tecc
from tecc.decomposer import decompose
from tecc.multigraph import Multigraph, parse_graph
from tecc.oracle import bridges_bf, three_ecc_bf

from graphs import GOLDEN, build, two_k4_cut_pair


def random_graph(rng, n, m):
    pairs = []
    for _ in range(m):
        while True:
            u, v = rng.randrange(n), rng.randrange(n)
            if u != v:
                break
        pairs.append((u, v))
    return Multigraph(n, pairs)


def summarize(report):
    return {
        "components": [c.members for c in report.components],
        "virtual": [c.virtual_edge[:2] if c.virtual_edge else None for c in report.components],
        "bridges": report.bridges,
        "cacti": [(c.nodes, c.cycles) for c in report.cacti],
        "is3ec": report.is_three_edge_connected,
    }


# expected outputs computed with the brute-force oracles and frozen
EXPECTED = {
    "k2_3": {
        "components": [[0, 1]],
        "virtual": [None],
        "bridges": [],
        "cacti": [([0], [])],
        "is3ec": True,
    },
    "c3": {
        "components": [[0], [1], [2]],
        "virtual": [None, None, None],
        "bridges": [],
        "cacti": [([0, 1, 2], [[0, 2, 1]])],
        "is3ec": False,
    },
    "c4": {
        "components": [[0], [1], [2], [3]],
        "virtual": [None, None, None, None],
        "bridges": [],
        "cacti": [([0, 1, 2, 3], [[0, 3, 2, 1]])],
        "is3ec": False,
    },
    "c5": {
        "components": [[0], [1], [2], [3], [4]],
        "virtual": [None] * 5,
        "bridges": [],
        "cacti": [([0, 1, 2, 3, 4], [[0, 4, 3, 2, 1]])],
        "is3ec": False,
    },
    "c6": {
        "components": [[0], [1], [2], [3], [4], [5]],
        "virtual": [None] * 6,
        "bridges": [],
        "cacti": [([0, 1, 2, 3, 4, 5], [[0, 5, 4, 3, 2, 1]])],
        "is3ec": False,
    },
    "k4": {
        "components": [[0, 1, 2, 3]],
        "virtual": [None],
        "bridges": [],
        "cacti": [([0], [])],
        "is3ec": True,
    },
    "k5": {
        "components": [[0, 1, 2, 3, 4]],
        "virtual": [None],
        "bridges": [],
        "cacti": [([0], [])],
        "is3ec": True,
    },
    "petersen": {
        "components": [list(range(10))],
        "virtual": [None],
        "bridges": [],
        "cacti": [([0], [])],
        "is3ec": True,
    },
    "bridged_triangles": {
        "components": [[0], [1], [2], [3], [4], [5]],
        "virtual": [None] * 6,
        "bridges": [(2, 3, 6)],
        "cacti": [([0, 1, 2], [[0, 2, 1]]), ([3, 4, 5], [[3, 5, 4]])],
        "is3ec": False,
    },
    "two_k4_cut_pair": {
        "components": [[0, 1, 2, 3], [4, 5, 6, 7]],
        "virtual": [None, (4, 7)],
        "bridges": [],
        "cacti": [([0, 4], [[0, 4]])],
        "is3ec": False,
    },
    "path5": {
        "components": [[0], [1], [2], [3], [4]],
        "virtual": [None] * 5,
        "bridges": [(0, 1, 0), (1, 2, 1), (2, 3, 2), (3, 4, 3)],
        "cacti": [([0], []), ([1], []), ([2], []), ([3], []), ([4], [])],
        "is3ec": False,
    },
    "star4": {
        "components": [[0], [1], [2], [3], [4]],
        "virtual": [None] * 5,
        "bridges": [(0, 1, 0), (0, 2, 1), (0, 3, 2), (0, 4, 3)],
        "cacti": [([0], []), ([1], []), ([2], []), ([3], []), ([4], [])],
        "is3ec": False,
    },
    "triangle_pendant": {
        "components": [[0], [1], [2], [3]],
        "virtual": [None] * 4,
        "bridges": [(1, 3, 3)],
        "cacti": [([0, 1, 2], [[0, 2, 1]]), ([3], [])],
        "is3ec": False,
    },
    "c5_chord": {
        "components": [[0, 2], [1], [3], [4]],
        "virtual": [None] * 4,
        "bridges": [],
        "cacti": [([0, 1, 3, 4], [[0, 1], [0, 4, 3]])],
        "is3ec": False,
    },
}


@pytest.mark.parametrize("name", sorted(GOLDEN))
def test_golden(name):
    report = decompose(GOLDEN[name](), debug=True)
    assert summarize(report) == EXPECTED[name]


def test_pendant_bridge_leaves_one_cycle():
    # backtracking over a bridge must not split the triangle's cut chain in two
    report = decompose(GOLDEN["triangle_pendant"]())
    triangle = [c for c in report.cacti if len(c.nodes) > 1]
    assert len(triangle) == 1
    assert triangle[0].cycles == [[0, 2, 1]]


def test_two_k4_virtual_edges():
    report = decompose(two_k4_cut_pair())
    rooted, ejected = report.components
    assert rooted.virtual_edge is None
    u, v, eid = ejected.virtual_edge
    assert (u, v) == (4, 7)
    assert eid >= 14  # above the real edge ids
    # the rooted side still rides the corridor replacement inside its seed
    rooted_virtuals = [e for p in rooted.certificate for e, isv in p.edges if isv]
    ejected_virtuals = [e for p in ejected.certificate for e, isv in p.edges if isv]
    assert rooted_virtuals and ejected_virtuals == [eid]


def test_component_of_lookup():
    report = decompose(two_k4_cut_pair())
    assert report.component_of(2).members == [0, 1, 2, 3]
    assert report.component_of(6).members == [4, 5, 6, 7]
    with pytest.raises(IndexError):
        report.component_of(8)


def test_root_choice_changes_nothing_structural():
    g = two_k4_cut_pair()
    base = decompose(g)
    for root in range(g.vertex_count):
        report = decompose(g, root=root, debug=True)
        assert [c.members for c in report.components] == [
            c.members for c in base.components
        ]
        assert [b[2] for b in report.bridges] == [b[2] for b in base.bridges]


def test_root_out_of_range():
    with pytest.raises(ValueError, match="out of range"):
        decompose(Multigraph(3), root=3)


def test_empty_graph():
    report = decompose(Multigraph(0))
    assert report.components == []
    assert report.bridges == []
    assert report.cacti == []
    assert not report.is_three_edge_connected


def test_single_vertex():
    report = decompose(Multigraph(1))
    assert [c.members for c in report.components] == [[0]]
    assert report.is_three_edge_connected
    assert report.components[0].certificate is None


def test_single_edge_is_a_bridge():
    report = decompose(Multigraph(2, [(0, 1)]))
    assert [c.members for c in report.components] == [[0], [1]]
    assert report.bridges == [(0, 1, 0)]
    assert not report.is_three_edge_connected


def test_two_parallel_edges_form_a_cut_pair():
    report = decompose(Multigraph(2, [(0, 1), (0, 1)]))
    assert [c.members for c in report.components] == [[0], [1]]
    assert report.bridges == []
    assert [(c.nodes, c.cycles) for c in report.cacti] == [([0, 1], [[0, 1]])]


def test_self_loops_dropped_by_normalization():
    g, log = parse_graph("p 2 3\ne 1 2\ne 1 1\ne 2 2\n")
    assert log.removed_self_loops == 2
    report = decompose(g)
    assert report.bridges == [(0, 1, 0)]


def test_disconnected_input():
    g = build(7, [(0, 1), (1, 2), (2, 0), (3, 4), (3, 4), (3, 4), (5, 6)])
    report = decompose(g, debug=True)
    assert [c.members for c in report.components] == [[0], [1], [2], [3, 4], [5], [6]]
    assert report.bridges == [(5, 6, 6)]
    assert not report.is_three_edge_connected


def test_isolated_vertices_are_singletons():
    report = decompose(Multigraph(4, [(1, 2)]))
    assert [c.members for c in report.components] == [[0], [1], [2], [3]]


def test_decompose_is_deterministic():
    g = GOLDEN["two_k4_cut_pair"]()
    a = decompose(g)
    b = decompose(g)
    assert summarize(a) == summarize(b)
    assert a.events == b.events


def canon(partition):
    return sorted(tuple(sorted(block)) for block in partition)


@pytest.mark.parametrize("seed", range(60))
def test_random_against_oracle(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 10)
    m = rng.randint(1, 24)
    g = random_graph(rng, n, m)
    report = decompose(g, debug=True)
    assert canon(c.members for c in report.components) == canon(three_ecc_bf(g))
    assert {b[2] for b in report.bridges} == bridges_bf(g)


@pytest.mark.parametrize("seed", range(30))
def test_parallel_heavy_against_oracle(seed):
    rng = random.Random(1000 + seed)
    n = rng.randint(2, 4)
    m = rng.randint(1, 24)
    g = random_graph(rng, n, m)
    report = decompose(g, debug=True)
    assert canon(c.members for c in report.components) == canon(three_ecc_bf(g))
    assert {b[2] for b in report.bridges} == bridges_bf(g)


def test_event_counter_linear_on_goldens():
    for ctor in GOLDEN.values():
        g = ctor()
        report = decompose(g)
        assert 0 < report.events <= 64 * (g.vertex_count + g.edge_count)


def _load_pure_core():
    here = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
    path = os.path.join(here, "src", "tecc", "_core.py")
    spec = importlib.util.spec_from_file_location("tecc_core_pure_copy", path)
    mod = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(mod)
    return mod


def _run_core(core, g, debug=False):
    n = g.vertex_count
    adj_off = [0] * (n + 1)
    for v in range(n):
        adj_off[v + 1] = adj_off[v] + len(g.adjacency[v])
    adj_eid, adj_other = [], []
    for v in range(n):
        for eid, other in g.adjacency[v]:
            adj_eid.append(eid)
            adj_other.append(other)
    eu = [u for u, _, _ in g.edges]
    ev = [v for _, v, _ in g.edges]
    eng = core.Engine(n, adj_off, adj_eid, adj_other, eu, ev, debug=debug)
    for v in range(n):
        if eng.dfs[v] == 0:
            eng.run(v)
    return eng


def test_backend_equivalence():
    """The interpreted source and the active backend produce identical output."""
    pure = _load_pure_core()
    import tecc._core as active

    rng = random.Random(424242)
    cases = [ctor() for ctor in GOLDEN.values()]
    for _ in range(40):
        n = rng.randint(2, 10)
        m = rng.randint(1, 24)
        cases.append(random_graph(rng, n, m))
    for g in cases:
        a = _run_core(pure, g)
        b = _run_core(active, g)
        assert [(r, mem, pay, sl) for r, mem, pay, sl, _ in a.components] == [
            (r, mem, pay, sl) for r, mem, pay, sl, _ in b.components
        ]
        assert a.bridges == b.bridges
        assert a.cycles == b.cycles
        assert a.virtuals == b.virtuals
        assert a.events == b.events


def test_backend_reported():
    assert tecc.engine_backend() in {"pure", "compiled"}
