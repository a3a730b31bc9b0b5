"""Based-planar and Halin recognition on an embedded graph."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

from .embedding import (
    Dart,
    Face,
    PlanarEmbeddedGraph,
    connected_components,
    edge,
    induced_component,
    trace_faces,
)
from .errors import NoBaseFace


class AdjacencyMode(enum.Enum):
    EDGE_SHARING = "edge"
    VERTEX_SHARING = "vertex"


DEFAULT_MODE = AdjacencyMode.EDGE_SHARING


def faces_adjacent(f1: Face, f2: Face, mode: AdjacencyMode = DEFAULT_MODE) -> bool:
    if mode is AdjacencyMode.EDGE_SHARING:
        return not f1.edge_set.isdisjoint(f2.edge_set)
    return not f1.vertex_set.isdisjoint(f2.vertex_set)


def _base_ids(faces: list[Face], mode: AdjacencyMode) -> list[int]:
    return [
        f.face_id
        for f in faces
        if all(faces_adjacent(f, h, mode) for h in faces if h.face_id != f.face_id)
    ]


def find_base_faces(
    g: PlanarEmbeddedGraph,
    mode: AdjacencyMode = DEFAULT_MODE,
    faces: list[Face] | None = None,
) -> list[int]:
    """Ids of faces adjacent to every other face of ``g``."""
    if faces is None:
        faces = trace_faces(g)
    return _base_ids(faces, mode)


def is_base_face(face: Face, faces: list[Face], mode: AdjacencyMode = DEFAULT_MODE) -> bool:
    return all(faces_adjacent(face, h, mode) for h in faces if h.face_id != face.face_id)


def split_components(
    g: PlanarEmbeddedGraph,
    mode: AdjacencyMode = DEFAULT_MODE,
    preferred: Iterable[Dart] = (),
) -> list[PlanarEmbeddedGraph]:
    """One anchored graph per connected component, ordered by smallest vertex.

    The component holding ``g``'s anchor keeps it. Every other component is
    anchored with :func:`rebase` using the ``preferred`` darts.
    """
    comps = connected_components(g)
    if len(comps) == 1:
        return [g]
    preferred = tuple(preferred)
    out = []
    for comp in comps:
        cset = set(comp)
        anchor = g.outer_anchor
        if anchor is not None and anchor[0] in cset:
            out.append(induced_component(g, comp, anchor))
        else:
            out.append(rebase(induced_component(g, comp), preferred, mode))
    return out


def rebase(
    g: PlanarEmbeddedGraph,
    previous_outer: Iterable[Dart],
    mode: AdjacencyMode = DEFAULT_MODE,
) -> PlanarEmbeddedGraph:
    """Re-anchor a connected graph after a mutation.

    Prefers the face of the smallest surviving previously-outer dart that
    is a base face; otherwise the base face with the smallest dart.
    Raises :class:`NoBaseFace` when no face qualifies.
    """
    darts = g.darts()
    if not darts:
        return g.with_anchor(None)
    probe = g.with_anchor(darts[0])
    faces = trace_faces(probe)
    face_of = {d: f for f in faces for d in f.boundary}
    for d in sorted(d for d in set(previous_outer) if d in face_of):
        if is_base_face(face_of[d], faces, mode):
            return g.with_anchor(d)
    base = [faces[i] for i in _base_ids(faces, mode)]
    if not base:
        raise NoBaseFace(f"no base face in component of {g.vertices()[0]}")
    return g.with_anchor(min(min(f.boundary) for f in base))


def is_based_planar(g: PlanarEmbeddedGraph, mode: AdjacencyMode = DEFAULT_MODE) -> bool:
    """True iff the designated outer face is a base face.

    For a disconnected graph each component is judged on its own; components
    without the anchor only need some base face.
    """
    comps = connected_components(g)
    if len(comps) <= 1:
        faces = trace_faces(g)
        return any(f.is_outer and is_base_face(f, faces, mode) for f in faces)
    try:
        parts = split_components(g, mode)
    except NoBaseFace:
        return False
    return all(is_based_planar(p, mode) for p in parts)


def forbidden_outer_cycles(
    g: PlanarEmbeddedGraph, faces: list[Face] | None = None
) -> frozenset[frozenset]:
    """Edge sets of cycles that *are* an outer face and so may never be packed.

    Per component: the outer face's cycle part (boundary minus bridges),
    unless some inner face has the same cycle part. A lone cycle is both
    outer and inner face and is accepted as the inner one.
    """
    if len(connected_components(g)) == 1:
        parts = [(g, faces if faces is not None else trace_faces(g))]
    else:
        parts = [(p, trace_faces(p)) for p in split_components(g)]
    out = set()
    for _, fs in parts:
        outer = next((f for f in fs if f.is_outer), None)
        if outer is None or not outer.cycle_edges:
            continue
        ce = outer.cycle_edges
        if not any(not f.is_outer and f.cycle_edges == ce for f in fs):
            out.add(ce)
    return frozenset(out)


def outer_cycle_equivalent(
    g: PlanarEmbeddedGraph, cycle_edges: frozenset, faces: list[Face] | None = None
) -> bool:
    """Whether a cycle, given by its edge set, is an outer face of ``g``."""
    return frozenset(cycle_edges) in forbidden_outer_cycles(g, faces)


def inner_faces(g: PlanarEmbeddedGraph) -> list[Face]:
    """Faces that are not the outer face of their component."""
    if len(connected_components(g)) == 1:
        return [f for f in trace_faces(g) if not f.is_outer]
    out = []
    for part in split_components(g):
        out.extend(f for f in trace_faces(part) if not f.is_outer)
    return out


@dataclass(frozen=True)
class HalinWitness:
    cycle: tuple[int, ...]
    tree_edges: frozenset[frozenset]
    face_id: int


def is_halin(g: PlanarEmbeddedGraph) -> tuple[bool, HalinWitness | None]:
    """Decide whether ``g`` is a tree plus a cycle through its leaves.

    Some face boundary must be a simple cycle whose removal leaves a
    spanning tree with exactly that cycle as leaf set and every internal
    vertex of tree degree at least 3.
    """
    n = len(g)
    if n < 4:
        return False, None
    all_edges = {edge(u, v) for u, v in g.edges()}
    for f in trace_faces(g):
        if not f.is_simple_cycle:
            continue
        tree = all_edges - f.edge_set
        if len(tree) != n - 1:
            continue
        deg = {v: 0 for v in g.vertices()}
        adj: dict[int, list[int]] = {v: [] for v in g.vertices()}
        for e in tree:
            a, b = tuple(e)
            deg[a] += 1
            deg[b] += 1
            adj[a].append(b)
            adj[b].append(a)
        leaves = {v for v, d in deg.items() if d == 1}
        if leaves != f.vertex_set:
            continue
        if any(d < 3 for v, d in deg.items() if v not in leaves):
            continue
        # n - 1 edges plus connectivity makes it a tree
        start = g.vertices()[0]
        seen = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != n:
            continue
        return True, HalinWitness(f.walk, frozenset(tree), f.face_id)
    return False, None
