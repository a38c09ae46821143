import hashlib
from itertools import combinations
from math import comb

import pytest

from gturan.cliques import clique_profile, count_cliques
from gturan.constructions import (
    RNG_ALGORITHM,
    default_probability,
    lower_bound_c2k,
    lower_bound_kab,
    random_c2kfree,
    sample_gnp,
)
from gturan.graph import Graph, complete_graph, cycle, path
from gturan.graph6 import to_graph6
from gturan.norm_graph import norm_graph
from gturan.oracle import extremal_number
from gturan.patterns import CompleteBipartite, DisjointCopies, EvenCycle, is_free, max_disjoint_copies

# first verified run, seed 7, n = 100, k = 2, p = 100^(-2/3)
FIXTURE_SEED7 = dict(edges_before=220, cycles_destroyed=38, edges_after=182)
FIXTURE_SEED7_SHA256 = "e02dd1326c9c868a2a3d42e011246d819cfd7406593d30142464c122a93e2ec4"


def _c4_free(g: Graph) -> bool:
    # a 4-cycle is exactly two vertices with two common neighbours
    return all((g.rows[u] & g.rows[v]).bit_count() < 2 for u, v in combinations(range(g.n), 2))


def test_kab_t0_is_norm_graph():
    assert lower_bound_kab(0, 3, 3) == norm_graph(3, 3)


def test_kab_t2():
    g = lower_bound_kab(2, 3, 3)
    assert g.n == 20
    assert max_disjoint_copies(g, CompleteBipartite(3, 3), 3)[0] < 3


@pytest.mark.parametrize("t,r", [(1, 3), (2, 3), (3, 3), (3, 4)])
def test_kab_join_counts(t, r):
    g = lower_bound_kab(t, 3, 3)
    prof = clique_profile(norm_graph(3, 3), r)
    assert count_cliques(g, r) == sum(comb(t, r - s) * prof[s] for s in range(r + 1))


def test_c2k_examples():
    g = lower_bound_c2k(1, path(6), 2)
    assert g.n == 7
    assert is_free(g, DisjointCopies(2, EvenCycle(4)))
    h = cycle(5)
    assert lower_bound_c2k(0, h, 2) == h
    with pytest.raises(ValueError):
        lower_bound_c2k(1, cycle(4), 2)


def test_c2k_oracle_host():
    h = extremal_number(7, 2, EvenCycle(4)).witness
    g = lower_bound_c2k(3, h, 2)
    assert g.n == 10
    assert count_cliques(g, 3) >= comb(3, 3) + comb(3, 2) * 7 + comb(3, 1) * h.edge_count


def test_deletion_empty():
    g, trace = random_c2kfree(20, 2, 0.0, 5)
    assert g.edge_count == 0
    assert trace.edges_before == trace.edges_after == 0


def test_deletion_fixture():
    g, trace = random_c2kfree(100, 2, default_probability(100, 2), 7)
    assert default_probability(100, 2) == pytest.approx(100 ** (-2 / 3), rel=1e-14)
    assert {k: getattr(trace, k) for k in FIXTURE_SEED7} == FIXTURE_SEED7
    assert hashlib.sha256(to_graph6(g)).hexdigest() == FIXTURE_SEED7_SHA256
    assert trace.rng == RNG_ALGORITHM
    assert _c4_free(g)
    assert trace.edges_after == trace.edges_before - trace.cycles_destroyed


def test_deletion_deterministic():
    a = random_c2kfree(80, 3, 0.05, 123)
    b = random_c2kfree(80, 3, 0.05, 123)
    assert a == b
    assert random_c2kfree(80, 3, 0.05, 124)[0] != a[0]


def test_deletion_keeps_subgraph():
    g0 = sample_gnp(60, 0.08, 3)
    g, _ = random_c2kfree(60, 2, 0.08, 3)
    assert all(g0.has_edge(u, v) for u, v in g.edges())


def test_deletion_certified():
    for seed in range(10):
        g, _ = random_c2kfree(70, 2, None, seed)
        assert _c4_free(g)
        g, _ = random_c2kfree(50, 3, None, seed)
        assert is_free(g, EvenCycle(6))


def test_mean_edges_nonincreasing_in_k():
    n = 60
    p = default_probability(n, 2)
    mean = {
        k: sum(random_c2kfree(n, k, p, s)[1].edges_after for s in range(20)) / 20 for k in (2, 3)
    }
    assert mean[3] <= mean[2]


def test_trace_text():
    _, trace = random_c2kfree(20, 2, 0.3, 1)
    lines = trace.to_text().splitlines()
    assert lines[0] == "n=20"
    assert f"rng={RNG_ALGORITHM}" in lines
    assert dict(line.split("=", 1) for line in lines)["seed"] == "1"


def test_deletion_errors():
    with pytest.raises(ValueError):
        random_c2kfree(3, 2)
    with pytest.raises(ValueError):
        random_c2kfree(20, 1)
    with pytest.raises(ValueError):
        random_c2kfree(20, 2, 1.5)
    with pytest.raises(ValueError):
        random_c2kfree(20, 2, 0.1, -1)
    with pytest.raises(ValueError):
        lower_bound_kab(-1, 3, 3)


def test_complete_graph_join_identity_shape():
    g = lower_bound_c2k(2, complete_graph(3), 2)
    assert g == complete_graph(5)


@pytest.mark.parametrize("t", [1, 2, 3])
def test_kab_packing_is_tight(t):
    # each copy must use an apex vertex, and t copies do fit
    g = lower_bound_kab(t, 3, 3)
    assert max_disjoint_copies(g, CompleteBipartite(3, 3), t + 1)[0] == t
