import pytest
from hypothesis import given, settings, strategies as st

import graphs
from basedfvs.embedding import validate
from basedfvs.errors import GenerationFailed
from basedfvs.generators import (
    Family,
    GenSpec,
    gen_fan,
    gen_halin,
    gen_hamiltonian,
    gen_outerplanar,
    gen_prism,
    gen_random_based,
    gen_wheel,
    generate,
    min_vertices,
)
from basedfvs.io import serialize_graph
from basedfvs.oracle import oracle_cp, oracle_fvs
from basedfvs.recognition import is_based_planar, is_halin


class TestHalin:
    def test_one_internal_three_leaves_is_k4(self):
        assert gen_halin(1, seed=5, leaves=3) == graphs.k4()

    @pytest.mark.parametrize("k", range(3, 10))
    def test_one_internal_is_wheel(self, k):
        assert gen_halin(1, seed=k, leaves=k) == gen_wheel(k)

    @pytest.mark.parametrize("seed", range(10))
    def test_two_internal(self, seed):
        g = gen_halin(2, seed)
        assert is_halin(g)[0] and is_based_planar(g)

    def test_too_few_leaves(self):
        with pytest.raises(ValueError):
            gen_halin(3, leaves=4)

    def test_bad_internal_count(self):
        with pytest.raises(ValueError):
            gen_halin(0)


class TestWheel:
    def test_rim3_is_k4(self):
        assert gen_wheel(3) == graphs.k4()

    def test_w4(self):
        g = gen_wheel(4)
        assert g.degree(0) == 4 and all(g.degree(v) == 3 for v in range(1, 5))

    def test_w5_exact_values(self):
        assert oracle_fvs(gen_wheel(5))[0] == 2
        assert oracle_cp(gen_wheel(5))[0] == 1

    def test_rim_too_small(self):
        with pytest.raises(ValueError):
            gen_wheel(2)


class TestRandomBased:
    def test_n3_is_k3(self):
        g = gen_random_based(3, seed=1)
        assert g.edges() == [(0, 1), (0, 2), (1, 2)]

    def test_deterministic(self):
        assert serialize_graph(gen_random_based(10, 42)) == serialize_graph(gen_random_based(10, 42))

    def test_recognition_replay_over_1000_seeds(self):
        for seed in range(1000):
            g = gen_random_based(3 + seed % 14, seed)
            validate(g)
            assert is_based_planar(g), seed

    def test_min_degree_three(self):
        for seed in range(30):
            g = gen_random_based(8 + seed % 8, seed, min_degree=3)
            assert min(g.degree(v) for v in g.vertices()) >= 3

    def test_n_too_small(self):
        with pytest.raises(ValueError):
            gen_random_based(2)

    def test_impossible_request_fails(self):
        # three vertices can never reach minimum degree three
        with pytest.raises(GenerationFailed):
            gen_random_based(3, 0, min_degree=3)


class TestOtherFamilies:
    def test_fan_based(self):
        for n in range(3, 12):
            assert is_based_planar(gen_fan(n))

    def test_outerplanar_based(self):
        for seed in range(30):
            g = gen_outerplanar(4 + seed % 10, seed)
            assert is_based_planar(g)

    def test_prism_is_valid(self):
        for k in range(3, 9):
            g = gen_prism(k)
            assert len(validate(g)) == k + 2

    def test_hamiltonian_is_valid(self):
        for seed in range(20):
            g = gen_hamiltonian(5 + seed % 8, seed)
            validate(g)
            assert all(g.has_edge(i, (i + 1) % len(g)) for i in range(len(g)))

    def test_experimental_flag(self):
        assert {f for f in Family if f.experimental} == {Family.PRISM, Family.HAMILTONIAN}


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([f for f in Family if not f.experimental]), st.integers(0, 26), st.integers(0, 2**64 - 1))
def test_generate_valid_and_based(family, extra, seed):
    spec = GenSpec(family, min_vertices(family) + extra, seed)
    g = generate(spec)
    assert len(g) == spec.n
    validate(g)
    assert is_based_planar(g)
    assert serialize_graph(generate(spec)) == serialize_graph(g)
