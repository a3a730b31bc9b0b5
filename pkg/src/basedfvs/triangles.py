"""Good triangles: a triangle ``xyz`` with ``x`` and ``y`` of degree 3 on the outer face.

Two searches are provided. :func:`find_good_triangle` is the exhaustive
scan used in production. :func:`claim1_find_good_triangle` is the
constructive longest-path search over the interior tree, kept as an
independent cross-check for graphs whose outer vertices all have degree 3.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .embedding import Face, PlanarEmbeddedGraph, edge, outer_face, trace_faces
from .errors import MultipleComponents, NoGoodTriangle, NotAllOuterDegreeThree
from .recognition import forbidden_outer_cycles, outer_cycle_equivalent


@dataclass(frozen=True, order=True)
class GoodTriangle:
    x: int
    y: int
    z: int

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset((self.x, self.y, self.z))

    def edges(self) -> frozenset[frozenset]:
        return frozenset((edge(self.x, self.y), edge(self.y, self.z), edge(self.x, self.z)))

    def __iter__(self):
        return iter((self.x, self.y, self.z))


def _dump(g: PlanarEmbeddedGraph) -> str:
    from .io import serialize_graph

    return serialize_graph(g)


def _canonical(g: PlanarEmbeddedGraph, tri: frozenset[int], outer: frozenset[int]) -> GoodTriangle | None:
    """Lexicographically smallest role assignment, or None if no assignment is good."""
    p, q, r = sorted(tri)
    ok = [v for v in (p, q, r) if v in outer and g.degree(v) == 3]
    if len(ok) < 2:
        return None
    x, y = ok[0], ok[1]
    (z,) = tri - {x, y}
    return GoodTriangle(x, y, z)


def good_triangle_problems(g: PlanarEmbeddedGraph, t: GoodTriangle, faces: list[Face] | None = None) -> list[str]:
    """Invariant checker: empty list iff ``t`` is a good triangle of ``g``."""
    if faces is None:
        faces = trace_faces(g)
    outer = next(f for f in faces if f.is_outer)
    problems = []
    if len(t.vertices) != 3:
        return ["vertices not distinct"]
    for a, b in ((t.x, t.y), (t.y, t.z), (t.x, t.z)):
        if not g.has_edge(a, b):
            problems.append(f"{a}-{b} is not an edge")
    for v in (t.x, t.y):
        if g.degree(v) != 3:
            problems.append(f"degree of {v} is {g.degree(v)}, not 3")
        if v not in outer.vertex_set:
            problems.append(f"{v} is not on the outer face")
    if not problems and outer_cycle_equivalent(g, t.edges(), faces):
        problems.append("triangle is the outer face")
    return problems


def all_good_triangles(g: PlanarEmbeddedGraph, faces: list[Face] | None = None) -> list[GoodTriangle]:
    """Every good triangle once (per vertex set), in lexicographic order.

    A triangle that is itself the outer face boundary is never good.
    """
    if faces is None:
        faces = trace_faces(g)
    outer = next((f for f in faces if f.is_outer), None)
    if outer is None:
        return []
    ov = outer.vertex_set
    found: set[frozenset[int]] = set()
    for x in sorted(ov):
        if g.degree(x) != 3:
            continue
        for a, b in combinations(g.rotation(x), 2):
            if g.has_edge(a, b):
                found.add(frozenset((x, a, b)))
    forbidden = forbidden_outer_cycles(g, faces)
    out = []
    for tri in found:
        t = _canonical(g, tri, ov)
        if t is None or t.edges() in forbidden:
            continue
        out.append(t)
    return sorted(out)


def find_good_triangle(
    g: PlanarEmbeddedGraph, avoid: int | None = None, faces: list[Face] | None = None
) -> GoodTriangle:
    """Smallest good triangle not containing ``avoid``.

    ``avoid`` must lie on the outer face. Raises :class:`NoGoodTriangle`
    with a graph dump when the scan comes up empty.
    """
    if faces is None:
        faces = trace_faces(g)
    if avoid is not None:
        outer = next(f for f in faces if f.is_outer)
        if avoid not in outer.vertex_set:
            raise ValueError(f"avoid vertex {avoid} is not on the outer face")
    for t in all_good_triangles(g, faces):
        if avoid is None or avoid not in t.vertices:
            return t
    raise NoGoodTriangle(
        f"no good triangle avoiding {avoid} in graph with {len(g)} vertices", _dump(g)
    )


def _bfs_far(adj: dict[int, list[int]], src: int) -> tuple[int, dict[int, int | None]]:
    parent: dict[int, int | None] = {src: None}
    dist = {src: 0}
    q = deque([src])
    while q:
        v = q.popleft()
        for w in sorted(adj[v]):
            if w not in dist:
                dist[w] = dist[v] + 1
                parent[w] = v
                q.append(w)
    far = min(dist, key=lambda v: (-dist[v], v))
    return far, parent


def claim1_find_good_triangle(g: PlanarEmbeddedGraph, avoid: int | None = None) -> GoodTriangle:
    """Good triangle from a longest path in the interior tree.

    Drops the outer-boundary edges, takes a longest path of the remaining
    tree and returns a triangle on its penultimate vertex and two of that
    vertex's leaf neighbours. If every such triangle at the near end
    contains ``avoid``, the far end is used.
    """
    faces = trace_faces(g)
    outer = outer_face(g, faces)
    if any(g.degree(v) < 3 for v in g.vertices()):
        raise NotAllOuterDegreeThree("some vertex has degree below 3")
    if any(g.degree(v) != 3 for v in outer.vertex_set):
        raise NotAllOuterDegreeThree("some outer vertex has degree other than 3")
    if avoid is not None and avoid not in outer.vertex_set:
        raise ValueError(f"avoid vertex {avoid} is not on the outer face")

    border = outer.edge_set
    adj: dict[int, list[int]] = {v: [] for v in g.vertices()}
    m = 0
    for u, v in g.edges():
        if edge(u, v) not in border:
            adj[u].append(v)
            adj[v].append(u)
            m += 1
    start = g.vertices()[0]
    end1, parent = _bfs_far(adj, start)
    if len(parent) != len(g):
        raise MultipleComponents("interior forest has more than one component")
    if m != len(g) - 1:
        raise MultipleComponents("interior subgraph is not a tree")
    end2, parent = _bfs_far(adj, end1)
    path = [end2]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    if len(path) < 3:
        raise NoGoodTriangle("interior tree has no path of length 2", _dump(g))

    for p, along in ((path[1], path[2]), (path[-2], path[-3])):
        leaves = [w for w in g.rotation(p) if w != along and len(adj[w]) == 1]
        cands = []
        for a, b in combinations(leaves, 2):
            if g.has_edge(a, b):
                t = _canonical(g, frozenset((a, b, p)), outer.vertex_set)
                if t is not None and (avoid is None or avoid not in t.vertices):
                    cands.append(t)
        if cands:
            return min(cands)
    raise NoGoodTriangle(f"longest-path search found nothing avoiding {avoid}", _dump(g))
