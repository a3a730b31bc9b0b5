import itertools

import pytest
from hypothesis import given, settings, strategies as st

import graphs
from basedfvs.embedding import (
    PlanarEmbeddedGraph,
    check_euler,
    connected_components,
    delete_vertex,
    edge,
    iter_triangles,
    outer_face,
    smooth_degree2,
    subdivide_edge,
    trace_faces,
    validate,
)
from basedfvs.errors import (
    AnchorMissing,
    EmbeddingInconsistent,
    NotDegreeTwo,
    UnknownVertex,
    WouldCreateMultiEdge,
)
from basedfvs.generators import gen_halin_n, gen_random_based, gen_wheel


def brute_triangles(g):
    return [t for t in itertools.combinations(g.vertices(), 3)
            if all(g.has_edge(a, b) for a, b in itertools.combinations(t, 2))]


class TestFaces:
    def test_k3_two_faces_of_length_three(self):
        faces = validate(graphs.k3())
        assert len(faces) == 2
        assert all(len(f.boundary) == 3 for f in faces)

    def test_k4_four_triangles(self):
        faces = validate(graphs.k4())
        assert sorted(len(f.boundary) for f in faces) == [3, 3, 3, 3]

    def test_cube_six_squares(self):
        g = graphs.q3()
        faces = validate(g)
        assert (len(g), g.num_edges()) == (8, 12)
        assert [len(f.boundary) for f in faces] == [4] * 6

    def test_exactly_one_outer_face(self):
        for g in (graphs.k4(), graphs.w5(), graphs.q3(), graphs.caterpillar_halin()):
            faces = trace_faces(g)
            assert sum(f.is_outer for f in faces) == 1
            assert g.outer_anchor in outer_face(g, faces).boundary

    def test_every_dart_in_exactly_one_face(self):
        g = gen_random_based(15, seed=3)
        darts = [d for f in trace_faces(g) for d in f.boundary]
        assert sorted(darts) == g.darts()

    def test_face_sets_match_boundary(self):
        for f in trace_faces(graphs.caterpillar_halin()):
            assert f.vertex_set == {u for u, _ in f.boundary}
            assert f.edge_set == {edge(u, v) for u, v in f.boundary}

    def test_boundary_follows_rotation(self):
        g = graphs.w5()
        for f in trace_faces(g):
            for i, d in enumerate(f.boundary):
                assert g.next_dart(d) == f.boundary[(i + 1) % len(f.boundary)]

    def test_tree_has_single_face(self):
        g = PlanarEmbeddedGraph({0: (1, 2, 3), 1: (0,), 2: (0,), 3: (0,)}, (0, 1))
        faces = validate(g)
        assert len(faces) == 1 and len(faces[0].boundary) == 6
        assert faces[0].cycle_edges == frozenset()

    def test_isolated_vertex_face(self):
        g = PlanarEmbeddedGraph({0: ()}, None)
        faces = validate(g)
        assert len(faces) == 1 and faces[0].boundary == () and faces[0].is_outer

    def test_disconnected_euler_per_component(self):
        validate(graphs.two_triangles())
        assert connected_components(graphs.two_triangles()) == [[0, 1, 2], [3, 4, 5]]


class TestValidation:
    def test_non_planar_rotation_rejected(self):
        # K4 with one rotation flipped traces only two faces: genus 1
        rot = graphs.k4().rotations()
        rot[0] = tuple(reversed(rot[0]))
        rot[1] = tuple(reversed(rot[1]))
        g = PlanarEmbeddedGraph(rot, (1, 2))
        with pytest.raises(EmbeddingInconsistent):
            check_euler(g)

    def test_asymmetric_rotation_rejected(self):
        with pytest.raises(EmbeddingInconsistent):
            validate(PlanarEmbeddedGraph({0: (1,), 1: ()}, (0, 1)))

    def test_self_loop_rejected(self):
        with pytest.raises(EmbeddingInconsistent):
            validate(PlanarEmbeddedGraph({0: (0, 1), 1: (0,)}, (0, 1)))

    def test_repeated_neighbour_rejected(self):
        with pytest.raises(EmbeddingInconsistent):
            validate(PlanarEmbeddedGraph({0: (1, 1), 1: (0, 0)}, (0, 1)))

    def test_missing_anchor(self):
        with pytest.raises(AnchorMissing):
            validate(graphs.k4().with_anchor((1, 1)))
        with pytest.raises(AnchorMissing):
            validate(graphs.k4().with_anchor(None))


class TestQueries:
    def test_degrees(self):
        g = graphs.w5()
        assert g.degree(0) == 5
        assert g.degree(1) == 3
        assert PlanarEmbeddedGraph({7: ()}, None).degree(7) == 0

    def test_unknown_vertex(self):
        with pytest.raises(UnknownVertex):
            graphs.w5().rotation(99)

    def test_equality_ignores_rotation_start(self):
        g = graphs.k4()
        rot = {v: r[1:] + r[:1] for v, r in g.rotations().items()}
        assert PlanarEmbeddedGraph(rot, g.outer_anchor) == g
        assert hash(PlanarEmbeddedGraph(rot, g.outer_anchor)) == hash(g)

    def test_triangles_match_brute_force(self):
        for g in (graphs.k4(), graphs.w5(), graphs.caterpillar_halin(), gen_random_based(14, 5)):
            assert list(iter_triangles(g)) == brute_triangles(g)


class TestMutations:
    def test_k3_delete_vertex_leaves_edge(self):
        g = delete_vertex(graphs.k3(), 2)
        assert g.edges() == [(0, 1)]
        assert len(validate(g)) == 1

    def test_w5_delete_hub_leaves_rim_cycle(self):
        g = delete_vertex(graphs.w5(), 0)
        faces = validate(g)
        assert len(faces) == 2
        assert all(f.vertex_set == {1, 2, 3, 4, 5} for f in faces)

    def test_k4_delete_vertex_gives_k3(self):
        g = delete_vertex(graphs.k4(), 0)
        assert g.edges() == [(1, 2), (1, 3), (2, 3)]
        validate(g)

    def test_delete_unknown(self):
        with pytest.raises(UnknownVertex):
            delete_vertex(graphs.k4(), 9)

    def test_delete_keeps_anchor_on_old_outer_face(self):
        g = graphs.w5()
        h = delete_vertex(g, 1)
        assert h.outer_anchor in set(outer_face(g).boundary)

    def test_smooth_path_inside_c4(self):
        g = graphs.cycle(4)
        h, created = smooth_degree2(g, 1)
        assert created == (0, 2)
        assert h.edges() == [(0, 2), (0, 3), (2, 3)]
        validate(h)

    def test_smooth_c5_gives_c4(self):
        h, _ = smooth_degree2(graphs.c5(), 0)
        assert len(h) == 4 and h.num_edges() == 4
        assert all(h.degree(v) == 2 for v in h.vertices())

    def test_smooth_rejects_triangle_vertex(self):
        with pytest.raises(WouldCreateMultiEdge):
            smooth_degree2(graphs.k3(), 0)

    def test_smooth_rejects_degree_three(self):
        with pytest.raises(NotDegreeTwo):
            smooth_degree2(graphs.k4(), 1)

    def test_subdivide_then_smooth_restores_k4(self):
        g = graphs.k4()
        sub = subdivide_edge(g, 1, 2, 9)
        validate(sub)
        assert sub.degree(9) == 2 and not sub.has_edge(1, 2)
        back, created = smooth_degree2(sub, 9)
        assert set(created) == {1, 2}
        assert back.canonical_rotations() == g.canonical_rotations()


@st.composite
def based_graphs(draw):
    kind = draw(st.sampled_from(["halin", "random", "wheel"]))
    seed = draw(st.integers(0, 2**32))
    if kind == "halin":
        return gen_halin_n(draw(st.integers(4, 20)), seed)
    if kind == "wheel":
        return gen_wheel(draw(st.integers(3, 12)))
    return gen_random_based(draw(st.integers(3, 20)), seed)


@settings(max_examples=60, deadline=None)
@given(based_graphs(), st.data())
def test_deletion_preserves_valid_embedding(g, data):
    v = data.draw(st.sampled_from(g.vertices()))
    h = delete_vertex(g, v)
    faces = validate(h)
    assert sorted(d for f in faces for d in f.boundary) == h.darts()


@settings(max_examples=60, deadline=None)
@given(based_graphs())
def test_euler_holds_on_generated(g):
    faces = validate(g)
    assert len(g) - g.num_edges() + len(faces) == 2
