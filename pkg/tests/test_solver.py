import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

import graphs
from basedfvs import solver
from basedfvs.embedding import delete_vertex, outer_face, trace_faces
from basedfvs.errors import InvariantViolation, NoGoodTriangle, NotBasedPlanar
from basedfvs.generators import gen_fan, gen_halin_n, gen_outerplanar, gen_random_based, gen_wheel
from basedfvs.recognition import AdjacencyMode, find_base_faces, rebase
from basedfvs.solver import (
    Certificate,
    DropLowDegree,
    GoodTriangleStep,
    Smooth,
    TriangleDeg2,
    canonical_cycle,
    lift_cycle,
    solve,
    step_classify,
    step_from_line,
    verify_certificate,
)
from basedfvs.triangles import find_good_triangle


def nx_graph(g):
    h = nx.Graph()
    h.add_nodes_from(g.vertices())
    h.add_edges_from(g.edges())
    return h


def independent_check(g, cert):
    """Certificate properties recomputed with networkx."""
    h = nx_graph(g)
    h.remove_nodes_from(cert.fvs)
    assert nx.is_forest(h) or h.number_of_nodes() == 0
    seen = set()
    for c in cert.packing:
        assert len(set(c)) == len(c) >= 3
        assert not seen & set(c)
        seen |= set(c)
        assert all(g.has_edge(c[i], c[(i + 1) % len(c)]) for i in range(len(c)))
    assert len(cert.fvs) <= 2 * len(cert.packing)


class TestClassify:
    def test_c5_smooths_smallest(self):
        assert step_classify(graphs.c5()) == Smooth(index=0, u=0, a=4, b=1)

    def test_k3_triangle_step(self):
        step = step_classify(graphs.k3())
        assert isinstance(step, TriangleDeg2) and step.x == 0

    def test_w5_good_triangle(self):
        step = step_classify(graphs.w5())
        t = find_good_triangle(graphs.w5())
        assert isinstance(step, GoodTriangleStep) and (step.x, step.y, step.z) == tuple(t)

    def test_pendant_dropped_first(self):
        g = gen_fan(5)
        g2 = delete_vertex(g, 0)
        assert isinstance(step_classify(rebase(g2, set())), DropLowDegree)


class TestSolve:
    def test_k3(self):
        cert = solve(graphs.k3())
        assert len(cert.fvs) == 2 and cert.packing == ((0, 1, 2),)

    def test_w5(self):
        cert = solve(graphs.w5())
        assert 0 in cert.fvs and len(cert.fvs) == 2
        assert len(cert.packing) == 1 and 0 in cert.packing[0] and len(cert.packing[0]) == 3

    def test_k4(self):
        cert = solve(graphs.k4())
        assert len(cert.fvs) == 2 and len(cert.packing) == 1
        assert [type(s) for s in cert.trace] == [GoodTriangleStep, DropLowDegree, DropLowDegree]

    def test_disconnected(self):
        cert = solve(graphs.two_triangles())
        assert cert.packing == ((0, 1, 2), (3, 4, 5))
        assert len(cert.fvs) == 4

    def test_c5_smoothed_to_triangle(self):
        cert = solve(graphs.c5())
        assert len(cert.fvs) == 2 and cert.packing == ((0, 1, 2, 3, 4),)
        assert [s.kind for s in cert.trace] == ["smooth", "smooth", "triangle_deg2", "drop"]

    def test_cube_not_based(self):
        with pytest.raises(NotBasedPlanar):
            solve(graphs.q3())

    def test_vertex_sharing_mode(self):
        cert = solve(graphs.w5(), AdjacencyMode.VERTEX_SHARING)
        assert verify_certificate(graphs.w5(), cert).valid

    def test_wheels_tight(self):
        for rim in range(3, 13):
            cert = solve(gen_wheel(rim))
            assert (len(cert.fvs), len(cert.packing)) == (2, 1)

    def test_invariant_failure_dumps(self, monkeypatch):
        def broken(*args, **kwargs):
            raise NoGoodTriangle("forced", "dump")

        monkeypatch.setattr(solver, "find_good_triangle", broken)
        with pytest.raises(InvariantViolation) as info:
            solve(graphs.w5())
        assert "# input graph" in info.value.dump and "outer:" in info.value.dump

    def test_caterpillar_rebase_keeps_base_face(self):
        g = graphs.caterpillar_halin()
        step = step_classify(g)
        assert isinstance(step, GoodTriangleStep)
        h = delete_vertex(delete_vertex(g, step.y), step.z)
        h = rebase(h, set(outer_face(g).boundary))
        faces = trace_faces(h)
        assert next(f.face_id for f in faces if f.is_outer) in find_base_faces(h)

    def test_deterministic(self):
        g = gen_random_based(30, 11)
        assert solve(g) == solve(g)


class TestLifting:
    def test_canonical_cycle(self):
        assert canonical_cycle((3, 1, 2)) == (1, 2, 3)
        assert canonical_cycle((5, 9, 2, 7)) == (2, 7, 5, 9)

    def test_lift_through_nested_smoothing(self):
        # 0-2 replaced the path 0 1 2, and 0-1 itself replaced 0 3 1
        prov = {frozenset({0, 2}): 1, frozenset({0, 1}): 3}
        assert lift_cycle((0, 2, 5), prov) == canonical_cycle((0, 3, 1, 2, 5))


class TestVerify:
    def test_solved_k4_valid(self):
        assert verify_certificate(graphs.k4(), solve(graphs.k4())).valid

    def test_empty_fvs(self):
        cert = Certificate(fvs=(), packing=((0, 1, 2),))
        v = verify_certificate(graphs.k4(), cert)
        assert not v.valid and any("residual cyclic" in s for s in v.violations)

    def test_overlapping_packing(self):
        g = gen_wheel(6)
        cert = Certificate(fvs=(0, 1, 4), packing=((0, 1, 2), (0, 3, 4)))
        v = verify_certificate(g, cert)
        assert any("not disjoint" in s for s in v.violations)

    def test_outer_boundary_rejected(self):
        g = graphs.k4()
        cert = Certificate(fvs=(0, 1), packing=((1, 2, 3),))
        v = verify_certificate(g, cert)
        assert any("outer face boundary" in s for s in v.violations)

    def test_bound(self):
        cert = Certificate(fvs=(0, 1, 2), packing=((0, 1, 2),))
        assert any("bound violated" in s for s in verify_certificate(graphs.k4(), cert).violations)

    def test_non_cycle(self):
        cert = Certificate(fvs=(0, 1), packing=((1, 2, 4),))
        assert any("not a cycle" in s for s in verify_certificate(graphs.w5(), cert).violations)

    def test_unknown_and_repeated_fvs(self):
        v = verify_certificate(graphs.k4(), Certificate(fvs=(0, 0, 9), packing=((0, 1, 2),)))
        assert any("twice" in s for s in v.violations)
        assert any("unknown" in s for s in v.violations)

    def test_wrong_face_flag(self):
        g = graphs.k4()
        cert = solve(g)
        forged = Certificate(cert.fvs, cert.packing, cert.trace, not cert.face_packing_flag)
        assert any("face_packing" in s for s in verify_certificate(g, forged).violations)


class TestStepLines:
    @pytest.mark.parametrize("step", [
        DropLowDegree(index=0, u=4),
        TriangleDeg2(index=3, x=1, y=2, z=5),
        Smooth(index=7, u=2, a=1, b=3),
        GoodTriangleStep(index=9, x=1, y=2, z=0),
    ])
    def test_round_trip(self, step):
        assert step_from_line(step.to_line()) == step


@st.composite
def based(draw):
    kind = draw(st.sampled_from(["halin", "random", "outerplanar", "fan"]))
    n = draw(st.integers(4, 30))
    seed = draw(st.integers(0, 2**32))
    return {"halin": gen_halin_n, "random": gen_random_based,
            "outerplanar": gen_outerplanar, "fan": lambda n, s: gen_fan(n)}[kind](n, seed)


@settings(max_examples=150, deadline=None)
@given(based())
def test_certificate_properties(g):
    cert = solve(g)
    independent_check(g, cert)
    assert verify_certificate(g, cert).valid
    forbidden = outer_face(g).edge_set
    inner = {f.edge_set for f in trace_faces(g) if not f.is_outer}
    for c in cert.packing:
        edges = {frozenset((c[i], c[(i + 1) % len(c)])) for i in range(len(c))}
        assert edges != forbidden or edges in inner


@settings(max_examples=80, deadline=None)
@given(based())
def test_trace_replays(g):
    """Each logged step is legal on the graph it was applied to."""
    cert = solve(g)
    removed = set(cert.fvs)
    dropped = {s.u for s in cert.trace if isinstance(s, (DropLowDegree, Smooth))}
    assert removed | dropped == set(g.vertices())
    assert len(cert.trace) <= len(g)
