import importlib
import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

import graphs
from basedfvs import oracle as oracle_mod
from basedfvs.embedding import trace_faces
from basedfvs.errors import TooLarge
from basedfvs.generators import gen_halin_n, gen_random_based, gen_wheel
from basedfvs.oracle import enumerate_cycles, oracle, oracle_cp, oracle_fp, oracle_fvs


def _backends():
    mods = [importlib.import_module("basedfvs._kernels_py")]
    try:
        mods.append(importlib.import_module("basedfvs._kernels"))
    except ImportError:
        pass
    return mods


BACKENDS = _backends()
backend_ids = [m.__name__.rsplit(".", 1)[1] for m in BACKENDS]


def nx_graph(g):
    h = nx.Graph()
    h.add_nodes_from(g.vertices())
    h.add_edges_from(g.edges())
    return h


def brute_fvs(h):
    nodes = list(h.nodes)
    for k in range(len(nodes) + 1):
        for s in itertools.combinations(nodes, k):
            r = h.copy()
            r.remove_nodes_from(s)
            if nx.is_forest(r) or r.number_of_nodes() == 0:
                return k
    raise AssertionError


def brute_packing(sets):
    sets = [frozenset(s) for s in sets]
    best = 0

    def rec(i, used, count):
        nonlocal best
        best = max(best, count)
        for j in range(i, len(sets)):
            if not sets[j] & used:
                rec(j + 1, used | sets[j], count + 1)

    rec(0, frozenset(), 0)
    return best


def random_adj(n, p, rng):
    adj = [0] * n
    for a in range(n):
        for b in range(a + 1, n):
            if rng.random() < p:
                adj[a] |= 1 << b
                adj[b] |= 1 << a
    return adj


def adj_graph(adj):
    h = nx.Graph()
    h.add_nodes_from(range(len(adj)))
    h.add_edges_from((a, b) for a in range(len(adj)) for b in range(a + 1, len(adj)) if adj[a] >> b & 1)
    return h


@pytest.mark.parametrize("kern", BACKENDS, ids=backend_ids)
class TestKernels:
    def test_cycles_match_networkx(self, kern):
        rng = random.Random(4)
        for _ in range(40):
            adj = random_adj(rng.randint(3, 9), 0.45, rng)
            mine = kern.simple_cycles(adj, 10**6)
            ref = sorted(sorted(c) for c in nx.simple_cycles(adj_graph(adj)) if len(c) >= 3)
            assert sorted(sorted(c) for c in mine) == ref
            assert len(set(mine)) == len(mine)
            for c in mine:
                assert c[0] == min(c) and c[1] < c[-1]

    def test_cycle_cap(self, kern):
        k6 = [((1 << 6) - 1) & ~(1 << v) for v in range(6)]
        assert kern.simple_cycles(k6, 10) is None
        # sum over k of C(6,k) (k-1)!/2
        assert len(kern.simple_cycles(k6, 1000)) == 197

    def test_min_fvs_matches_brute_force(self, kern):
        rng = random.Random(8)
        for _ in range(40):
            adj = random_adj(rng.randint(1, 9), 0.4, rng)
            mask = kern.min_fvs(adj)
            h = adj_graph(adj)
            r = h.copy()
            r.remove_nodes_from(i for i in range(len(adj)) if mask >> i & 1)
            assert nx.is_forest(r) or r.number_of_nodes() == 0
            assert bin(mask).count("1") == brute_fvs(h)

    def test_is_forest(self, kern):
        tri = [0b110, 0b101, 0b011]
        assert not kern.is_forest(tri, 0b111)
        assert kern.is_forest(tri, 0b011)
        assert kern.peel(tri, 0b111) == 0b111

    def test_max_packing_matches_brute_force(self, kern):
        rng = random.Random(2)
        for _ in range(60):
            n = rng.randint(3, 14)
            masks = []
            for _ in range(rng.randint(0, 12)):
                vs = rng.sample(range(n), rng.randint(3, min(n, 6)))
                masks.append(sum(1 << v for v in vs))
            chosen = kern.max_packing(masks)
            assert chosen == sorted(chosen)
            used = 0
            for i in chosen:
                assert not masks[i] & used
                used |= masks[i]
            sets = [[v for v in range(n) if m >> v & 1] for m in masks]
            assert len(chosen) == brute_packing(sets)


def test_backends_agree():
    if len(BACKENDS) < 2:
        pytest.skip("compiled kernels not built")
    py, cy = BACKENDS
    rng = random.Random(13)
    for _ in range(50):
        adj = random_adj(rng.randint(3, 12), 0.35, rng)
        assert py.simple_cycles(adj, 10**5) == cy.simple_cycles(adj, 10**5)
        assert py.min_fvs(adj) == cy.min_fvs(adj)
        masks = [m for m in (rng.getrandbits(12) for _ in range(10)) if bin(m).count("1") >= 3]
        assert py.max_packing(masks) == cy.max_packing(masks)


class TestExamples:
    def test_fvs(self):
        assert oracle_fvs(graphs.c5())[0] == 1
        assert oracle_fvs(graphs.k4())[0] == 2
        assert oracle_fvs(graphs.w5())[0] == 2

    def test_cp(self):
        assert oracle_cp(graphs.w5())[0] == 1
        assert oracle_cp(graphs.k4())[0] == 1
        assert oracle_cp(graphs.two_triangles())[0] == 2

    def test_cp_outer_switch(self):
        # the rim covers every rim vertex and every other cycle passes through the hub
        assert oracle_cp(graphs.w5(), exclude_outer=False)[0] == 1
        # triangular prism on a triangle: the outer triangle is only packable when allowed
        g = graphs.triangular_prism_on_triangle()
        assert oracle_cp(g, exclude_outer=True)[0] == 1
        assert oracle_cp(g, exclude_outer=False)[0] == 2

    def test_fp(self):
        assert oracle_fp(graphs.w5())[0] == 1
        assert oracle_fp(graphs.k4())[0] == 1

    def test_hexagonal_prism_fp(self):
        g = graphs.hexagonal_prism()
        inner = [f.vertex_set for f in trace_faces(g) if not f.is_outer]
        assert len(inner) == 7
        expected = brute_packing(inner)
        assert oracle_fp(g)[0] == expected == 3

    def test_witnesses(self):
        for g in (graphs.w5(), graphs.caterpillar_halin(), gen_random_based(12, 6)):
            res = oracle(g)
            h = nx_graph(g)
            h.remove_nodes_from(res.fvs_witness)
            assert nx.is_forest(h) or h.number_of_nodes() == 0
            assert len(res.cp_witness) == res.cp_max
            packed = [v for c in res.cp_witness for v in c]
            assert len(packed) == len(set(packed))


class TestLimits:
    def test_vertex_limit(self):
        with pytest.raises(TooLarge):
            oracle_fvs(gen_wheel(20))
        assert oracle(gen_wheel(20)).n_limit_hit

    def test_env_override(self, monkeypatch):
        monkeypatch.setenv("JONES_ORACLE_LIMIT", "30")
        assert oracle_mod.vertex_limit() == 30
        assert oracle_fvs(gen_wheel(20))[0] == 2

    def test_cycle_cap(self):
        with pytest.raises(TooLarge):
            enumerate_cycles(gen_wheel(8), cap=10)


@settings(max_examples=40, deadline=None)
@given(st.integers(4, 11), st.integers(0, 2**32), st.booleans())
def test_oracle_matches_brute_force(n, seed, halin):
    g = gen_halin_n(n, seed) if halin else gen_random_based(n, seed)
    h = nx_graph(g)
    assert oracle_fvs(g)[0] == brute_fvs(h)
    cycles = [c for c in nx.simple_cycles(h) if len(c) >= 3]
    assert oracle_cp(g, exclude_outer=False)[0] == brute_packing(cycles)
    assert oracle_fvs(g)[0] <= 2 * oracle_cp(g)[0]
