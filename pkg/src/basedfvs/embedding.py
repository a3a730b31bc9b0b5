"""Simple plane graphs stored as rotation systems.

A graph is a mapping ``vertex -> clockwise tuple of neighbours`` plus an
*outer anchor*: a directed edge (dart) whose traced face is the outer face.
Faces are traced with one fixed rule: arriving at ``v`` from ``u`` we leave
along the neighbour that follows ``u`` in ``rotation(v)``.

Graphs are values. Every mutation returns a new graph and leaves the
original untouched.
"""

from __future__ import annotations

import os
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .errors import (
    AnchorMissing,
    EmbeddingInconsistent,
    NotDegreeTwo,
    UnknownVertex,
    WouldCreateMultiEdge,
)

Dart = tuple[int, int]
Edge = frozenset  # frozenset of two vertex ids

#: When true, every mutation re-runs the full embedding validator.
DEBUG = bool(os.environ.get("BASEDFVS_DEBUG"))


def edge(u: int, v: int) -> frozenset:
    return frozenset((u, v))


class PlanarEmbeddedGraph:
    """Simple graph with a clockwise rotation system and an outer anchor dart."""

    __slots__ = ("_rot", "_anchor", "_pos")

    def __init__(
        self,
        rotation: Mapping[int, Iterable[int]],
        outer_anchor: Dart | None = None,
    ) -> None:
        self._rot: dict[int, tuple[int, ...]] = {
            int(v): tuple(int(w) for w in nbrs) for v, nbrs in rotation.items()
        }
        self._anchor: Dart | None = (
            (int(outer_anchor[0]), int(outer_anchor[1])) if outer_anchor is not None else None
        )
        self._pos: dict[Dart, int] | None = None

    # -- basic queries -------------------------------------------------------

    @property
    def outer_anchor(self) -> Dart | None:
        return self._anchor

    @property
    def vertex_ids(self) -> frozenset[int]:
        return frozenset(self._rot)

    def vertices(self) -> list[int]:
        return sorted(self._rot)

    def __contains__(self, v: object) -> bool:
        return v in self._rot

    def __len__(self) -> int:
        return len(self._rot)

    def rotation(self, v: int) -> tuple[int, ...]:
        try:
            return self._rot[v]
        except KeyError:
            raise UnknownVertex(f"vertex {v} is not in the graph") from None

    def rotations(self) -> dict[int, tuple[int, ...]]:
        return dict(self._rot)

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(self.rotation(v))

    def degree(self, v: int) -> int:
        return len(self.rotation(v))

    def has_edge(self, u: int, v: int) -> bool:
        return u in self._rot and v in self._rot[u]

    def edges(self) -> list[tuple[int, int]]:
        return sorted((u, v) for u, nbrs in self._rot.items() for v in nbrs if u < v)

    def num_edges(self) -> int:
        return sum(len(n) for n in self._rot.values()) // 2

    def darts(self) -> list[Dart]:
        return sorted((u, v) for u, nbrs in self._rot.items() for v in nbrs)

    def _positions(self) -> dict[Dart, int]:
        if self._pos is None:
            self._pos = {
                (v, w): i for v, nbrs in self._rot.items() for i, w in enumerate(nbrs)
            }
        return self._pos

    def next_dart(self, dart: Dart) -> Dart:
        """Successor of ``dart`` along its face."""
        u, v = dart
        rot = self._rot[v]
        return v, rot[(self._positions()[v, u] + 1) % len(rot)]

    def with_anchor(self, anchor: Dart | None) -> PlanarEmbeddedGraph:
        g = PlanarEmbeddedGraph.__new__(PlanarEmbeddedGraph)
        g._rot = self._rot
        g._anchor = anchor
        g._pos = self._pos
        return g

    def canonical_rotations(self) -> dict[int, tuple[int, ...]]:
        """Rotations listed from the smallest neighbour, vertices ascending."""
        out = {}
        for v in sorted(self._rot):
            nbrs = self._rot[v]
            if nbrs:
                i = nbrs.index(min(nbrs))
                nbrs = nbrs[i:] + nbrs[:i]
            out[v] = nbrs
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PlanarEmbeddedGraph):
            return NotImplemented
        return (
            self._anchor == other._anchor
            and self.canonical_rotations() == other.canonical_rotations()
        )

    def __hash__(self) -> int:
        return hash((self._anchor, tuple(self.canonical_rotations().items())))

    def __repr__(self) -> str:
        return (
            f"PlanarEmbeddedGraph(n={len(self._rot)}, m={self.num_edges()}, "
            f"outer={self._anchor})"
        )


@dataclass(frozen=True)
class Face:
    face_id: int
    boundary: tuple[Dart, ...]
    vertex_set: frozenset[int]
    edge_set: frozenset[frozenset]
    is_outer: bool = False

    @property
    def walk(self) -> tuple[int, ...]:
        """Vertices in boundary order (cut vertices repeat)."""
        return tuple(u for u, _ in self.boundary)

    @property
    def is_simple_cycle(self) -> bool:
        return len(self.boundary) >= 3 and len(self.vertex_set) == len(self.boundary)

    @property
    def cycle_edges(self) -> frozenset[frozenset]:
        """Boundary edges with a different face on the other side (bridges dropped)."""
        darts = set(self.boundary)
        return frozenset(edge(u, v) for u, v in self.boundary if (v, u) not in darts)


# -- validation --------------------------------------------------------------


def check_simple_symmetric(g: PlanarEmbeddedGraph) -> None:
    rot = g._rot
    for v, nbrs in rot.items():
        if len(set(nbrs)) != len(nbrs):
            raise EmbeddingInconsistent(f"vertex {v} lists a neighbour twice")
        for w in nbrs:
            if w == v:
                raise EmbeddingInconsistent(f"self-loop at vertex {v}")
            if w not in rot:
                raise EmbeddingInconsistent(f"vertex {v} lists unknown neighbour {w}")
            if v not in rot[w]:
                raise EmbeddingInconsistent(f"edge {v}-{w} missing from rotation of {w}")


def _check_anchor(g: PlanarEmbeddedGraph) -> None:
    a = g._anchor
    if a is None:
        if g.num_edges():
            raise AnchorMissing("graph has edges but no outer anchor")
        return
    if not g.has_edge(*a):
        raise AnchorMissing(f"outer anchor {a} is not an edge of the graph")


def _trace_walks(g: PlanarEmbeddedGraph) -> list[list[Dart]]:
    seen: set[Dart] = set()
    walks = []
    for d in g.darts():
        if d in seen:
            continue
        walk = []
        cur = d
        while cur not in seen:
            seen.add(cur)
            walk.append(cur)
            cur = g.next_dart(cur)
        if cur != d:
            raise EmbeddingInconsistent(f"face walk from {d} does not close")
        walks.append(walk)
    return walks


def trace_faces(g: PlanarEmbeddedGraph) -> list[Face]:
    """All faces of ``g``, numbered in order of their smallest dart.

    Isolated vertices contribute one empty-boundary face each. The face
    holding the anchor is flagged outer; an edgeless graph flags the face
    of its smallest vertex.
    """
    check_simple_symmetric(g)
    _check_anchor(g)
    faces = []
    anchor = g._anchor
    for walk in _trace_walks(g):
        faces.append(
            Face(
                face_id=len(faces),
                boundary=tuple(walk),
                vertex_set=frozenset(u for u, _ in walk),
                edge_set=frozenset(edge(u, v) for u, v in walk),
                is_outer=anchor is not None and anchor in walk,
            )
        )
    isolated = [v for v in g.vertices() if not g._rot[v]]
    for v in isolated:
        faces.append(
            Face(
                face_id=len(faces),
                boundary=(),
                vertex_set=frozenset((v,)),
                edge_set=frozenset(),
                is_outer=anchor is None and v == isolated[0],
            )
        )
    return faces


def outer_face(g: PlanarEmbeddedGraph, faces: list[Face] | None = None) -> Face:
    if faces is None:
        faces = trace_faces(g)
    for f in faces:
        if f.is_outer:
            return f
    raise AnchorMissing("graph has no outer face")


def connected_components(g: PlanarEmbeddedGraph) -> list[list[int]]:
    """Vertex lists of the components, each sorted, ordered by smallest vertex."""
    seen: set[int] = set()
    comps = []
    for s in g.vertices():
        if s in seen:
            continue
        seen.add(s)
        stack, comp = [s], []
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in g._rot[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def check_euler(g: PlanarEmbeddedGraph, faces: list[Face] | None = None) -> None:
    """V - E + F = 2 on every component, and darts are covered exactly once."""
    if faces is None:
        faces = trace_faces(g)
    if sum(len(f.boundary) for f in faces) != 2 * g.num_edges():
        raise EmbeddingInconsistent("face boundaries do not cover every dart once")
    comp_of = {}
    for i, comp in enumerate(connected_components(g)):
        for v in comp:
            comp_of[v] = i
    nv: dict[int, int] = defaultdict(int)
    ne: dict[int, int] = defaultdict(int)
    nf: dict[int, int] = defaultdict(int)
    for v, nbrs in g._rot.items():
        nv[comp_of[v]] += 1
        ne[comp_of[v]] += len(nbrs)
    for f in faces:
        nf[comp_of[next(iter(f.vertex_set))]] += 1
    for c in nv:
        chi = nv[c] - ne[c] // 2 + nf[c]
        if chi != 2:
            raise EmbeddingInconsistent(
                f"component {c} has Euler characteristic {chi}; rotation is not planar"
            )


def validate(g: PlanarEmbeddedGraph) -> list[Face]:
    """Full invariant check. Returns the traced faces on success."""
    faces = trace_faces(g)
    check_euler(g, faces)
    if g._anchor is not None and sum(f.is_outer for f in faces) != 1:
        raise EmbeddingInconsistent("expected exactly one outer face")
    return faces


def _debug_check(g: PlanarEmbeddedGraph) -> PlanarEmbeddedGraph:
    if DEBUG:
        validate(g)
    return g


# -- mutations ---------------------------------------------------------------


def delete_vertex(g: PlanarEmbeddedGraph, v: int) -> PlanarEmbeddedGraph:
    """Remove ``v``; neighbours keep their cyclic order with ``v`` spliced out.

    If the anchor touched ``v`` the new anchor is the smallest surviving
    dart of the old outer face (or the smallest dart at all, if none is left).
    The solver re-anchors per component afterwards.
    """
    if v not in g._rot:
        raise UnknownVertex(f"vertex {v} is not in the graph")
    rot = {w: tuple(x for x in nbrs if x != v) for w, nbrs in g._rot.items() if w != v}
    anchor = g._anchor
    if anchor is not None and v in anchor:
        old_outer = [d for d in outer_face(g).boundary if v not in d]
        if old_outer:
            anchor = min(old_outer)
        else:
            rest = sorted((a, b) for a, nbrs in rot.items() for b in nbrs)
            anchor = rest[0] if rest else None
    return _debug_check(PlanarEmbeddedGraph(rot, anchor))


def delete_vertices(g: PlanarEmbeddedGraph, vs: Iterable[int]) -> PlanarEmbeddedGraph:
    for v in vs:
        g = delete_vertex(g, v)
    return g


def smoothing_dart_map(u: int, a: int, b: int) -> dict[Dart, Dart]:
    """Where each dart at ``u`` lands after smoothing ``u`` (rotation ``(a, b)``)."""
    return {(a, u): (a, b), (u, b): (a, b), (b, u): (b, a), (u, a): (b, a)}


def smooth_degree2(g: PlanarEmbeddedGraph, u: int) -> tuple[PlanarEmbeddedGraph, tuple[int, int]]:
    """Suppress degree-2 vertex ``u``; returns the new graph and the created edge."""
    nbrs = g.rotation(u)
    if len(nbrs) != 2:
        raise NotDegreeTwo(f"vertex {u} has degree {len(nbrs)}")
    a, b = nbrs
    if g.has_edge(a, b):
        raise WouldCreateMultiEdge(f"{a} and {b} are already adjacent")
    rot = dict(g._rot)
    del rot[u]
    rot[a] = tuple(b if x == u else x for x in rot[a])
    rot[b] = tuple(a if x == u else x for x in rot[b])
    anchor = g._anchor
    if anchor is not None and u in anchor:
        anchor = smoothing_dart_map(u, a, b)[anchor]
    return _debug_check(PlanarEmbeddedGraph(rot, anchor)), (a, b)


def subdivide_edge(g: PlanarEmbeddedGraph, a: int, b: int, u: int) -> PlanarEmbeddedGraph:
    """Insert new vertex ``u`` on edge ``ab``; inverse of :func:`smooth_degree2`."""
    if not g.has_edge(a, b):
        raise EmbeddingInconsistent(f"{a}-{b} is not an edge")
    if u in g._rot:
        raise EmbeddingInconsistent(f"vertex {u} already exists")
    rot = dict(g._rot)
    rot[a] = tuple(u if x == b else x for x in rot[a])
    rot[b] = tuple(u if x == a else x for x in rot[b])
    rot[u] = (a, b)
    anchor = g._anchor
    if anchor == (a, b):
        anchor = (a, u)
    elif anchor == (b, a):
        anchor = (b, u)
    return _debug_check(PlanarEmbeddedGraph(rot, anchor))


def induced_component(
    g: PlanarEmbeddedGraph, vertices: Iterable[int], anchor: Dart | None = None
) -> PlanarEmbeddedGraph:
    """Restrict ``g`` to a union of whole components (rotations are kept verbatim)."""
    vs = set(vertices)
    return PlanarEmbeddedGraph({v: g._rot[v] for v in vs}, anchor)


def iter_triangles(g: PlanarEmbeddedGraph) -> Iterator[tuple[int, int, int]]:
    """Every triangle once, as a sorted triple, in lexicographic order."""
    for a in g.vertices():
        higher = sorted(w for w in g._rot[a] if w > a)
        for i, b in enumerate(higher):
            nb = g._rot[b]
            for c in higher[i + 1 :]:
                if c in nb:
                    yield a, b, c
