"""Reduction loop producing a checkable (feedback vertex set, cycle packing) pair.

Four moves are tried in a fixed order on the current component:

1. drop a vertex of degree at most 1;
2. a triangle ``xyz`` with ``deg(x) == 2``: put ``y, z`` in the FVS, pack ``xyz``;
3. smooth a degree-2 vertex that lies on no triangle;
4. a good triangle ``xyz``: put ``y, z`` in the FVS, pack ``xyz``.

Moves 2 and 4 each add two vertices and one cycle, which gives
``|fvs| <= 2 * |packing|``. Packed triangles may use edges created by
smoothing; they are lifted back to cycles of the input graph through the
recorded provenance of every created edge.
"""

from __future__ import annotations

import heapq
import logging
from dataclasses import dataclass, field
from typing import ClassVar, Union

from .embedding import (
    Dart,
    Face,
    PlanarEmbeddedGraph,
    check_euler,
    connected_components,
    delete_vertex,
    edge,
    induced_component,
    smooth_degree2,
    smoothing_dart_map,
    trace_faces,
    validate,
)
from .errors import (
    EmbeddingInconsistent,
    InvariantViolation,
    NoBaseFace,
    NoGoodTriangle,
    NoStep,
    NotBasedPlanar,
)
from .recognition import (
    DEFAULT_MODE,
    AdjacencyMode,
    forbidden_outer_cycles,
    inner_faces,
    is_based_planar,
    rebase,
    split_components,
)
from .triangles import find_good_triangle

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class DropLowDegree:
    index: int
    u: int
    kind: ClassVar[str] = "drop"

    def to_line(self) -> str:
        return f"{self.index} drop u={self.u}"


@dataclass(frozen=True)
class TriangleDeg2:
    index: int
    x: int
    y: int
    z: int
    kind: ClassVar[str] = "triangle_deg2"

    def to_line(self) -> str:
        return f"{self.index} triangle_deg2 x={self.x} y={self.y} z={self.z}"


@dataclass(frozen=True)
class Smooth:
    index: int
    u: int
    a: int
    b: int
    kind: ClassVar[str] = "smooth"

    @property
    def created_edge(self) -> tuple[int, int]:
        return self.a, self.b

    def to_line(self) -> str:
        return f"{self.index} smooth u={self.u} a={self.a} b={self.b}"


@dataclass(frozen=True)
class GoodTriangleStep:
    index: int
    x: int
    y: int
    z: int
    kind: ClassVar[str] = "good_triangle"

    def to_line(self) -> str:
        return f"{self.index} good_triangle x={self.x} y={self.y} z={self.z}"


ReductionStep = Union[DropLowDegree, TriangleDeg2, Smooth, GoodTriangleStep]
STEP_TYPES = {cls.kind: cls for cls in (DropLowDegree, TriangleDeg2, Smooth, GoodTriangleStep)}


def step_from_line(line: str) -> ReductionStep:
    parts = line.split()
    index, kind = int(parts[0]), parts[1]
    fields = {}
    for p in parts[2:]:
        k, _, v = p.partition("=")
        fields[k] = int(v)
    return STEP_TYPES[kind](index=index, **fields)


@dataclass(frozen=True)
class Certificate:
    fvs: tuple[int, ...]
    packing: tuple[tuple[int, ...], ...]
    trace: tuple[ReductionStep, ...] = ()
    face_packing_flag: bool = False

    @property
    def bound_holds(self) -> bool:
        return len(self.fvs) <= 2 * len(self.packing)


@dataclass
class Verdict:
    violations: list[str] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.valid


# -- classification ------------------------------------------------------------


def step_classify(
    g: PlanarEmbeddedGraph, faces: list[Face] | None = None, index: int = 0
) -> ReductionStep:
    """First applicable move on ``g``, smallest vertex ids first within a move."""
    if len(g) == 0:
        raise NoStep("empty graph")
    verts = g.vertices()
    for u in verts:
        if g.degree(u) <= 1:
            return DropLowDegree(index, u)
    if faces is None:
        faces = trace_faces(g)
    deg2 = [u for u in verts if g.degree(u) == 2]
    forbidden = None
    for x in deg2:
        y, z = sorted(g.rotation(x))
        if g.has_edge(y, z):
            if forbidden is None:
                forbidden = forbidden_outer_cycles(g, faces)
            if frozenset((edge(x, y), edge(y, z), edge(x, z))) in forbidden:
                continue
            return TriangleDeg2(index, x, y, z)
    for u in deg2:
        a, b = g.rotation(u)
        if not g.has_edge(a, b):
            return Smooth(index, u, a, b)
    if deg2:
        raise InvariantViolation(
            f"degree-2 vertices {deg2} admit no move (only outer-face triangles)"
        )
    t = find_good_triangle(g, faces=faces)
    return GoodTriangleStep(index, t.x, t.y, t.z)


# -- lifting -------------------------------------------------------------------


def expand_edge(a: int, b: int, provenance: dict[frozenset, int]) -> list[int]:
    """Path ``a .. b`` in the input graph realising the (possibly created) edge ``ab``."""
    path = [a]
    stack = [(a, b)]
    while stack:
        p, q = stack.pop()
        u = provenance.get(edge(p, q))
        if u is None:
            path.append(q)
        else:
            stack.append((u, q))
            stack.append((p, u))
    return path


def canonical_cycle(cycle: list[int] | tuple[int, ...]) -> tuple[int, ...]:
    """Rotate to start at the smallest vertex, walking towards its smaller neighbour."""
    c = list(cycle)
    i = c.index(min(c))
    c = c[i:] + c[:i]
    if len(c) > 2 and c[-1] < c[1]:
        c = [c[0]] + c[:0:-1]
    return tuple(c)


def lift_cycle(cycle: tuple[int, ...], provenance: dict[frozenset, int]) -> tuple[int, ...]:
    out: list[int] = []
    n = len(cycle)
    for i in range(n):
        out.extend(expand_edge(cycle[i], cycle[(i + 1) % n], provenance)[:-1])
    return canonical_cycle(out)


# -- solver --------------------------------------------------------------------


def _dump(original: PlanarEmbeddedGraph, trace: list, current: PlanarEmbeddedGraph | None) -> str:
    from .io import serialize_graph

    parts = ["# input graph", serialize_graph(original), "# trace"]
    parts.extend(s.to_line() for s in trace)
    if current is not None:
        parts += ["# current component", serialize_graph(current, canonical=False)]
    return "\n".join(parts) + "\n"


def _simple_face_cycles(g: PlanarEmbeddedGraph) -> set[frozenset]:
    return {f.edge_set for f in inner_faces(g) if f.is_simple_cycle}


def cycle_edges(cycle: tuple[int, ...]) -> frozenset:
    n = len(cycle)
    return frozenset(edge(cycle[i], cycle[(i + 1) % n]) for i in range(n))


def solve(
    g: PlanarEmbeddedGraph,
    mode: AdjacencyMode = DEFAULT_MODE,
    verify: bool = True,
) -> Certificate:
    """Run the reduction loop on a based planar graph and return a certificate.

    After every move each resulting component is re-anchored, re-validated
    and re-checked for based planarity. Any failure, and any defect found by
    the final certificate check, raises :class:`InvariantViolation`.
    """
    validate(g)
    if not is_based_planar(g, mode):
        raise NotBasedPlanar("outer face is not adjacent to every other face")

    provenance: dict[frozenset, int] = {}
    fvs: set[int] = set()
    packing: list[tuple[int, ...]] = []
    trace: list[ReductionStep] = []
    heap = [(h.vertices()[0], h) for h in split_components(g, mode) if len(h)]
    heapq.heapify(heap)
    budget = len(g)

    while heap:
        _, h = heapq.heappop(heap)
        faces = trace_faces(h)
        try:
            step = step_classify(h, faces, index=len(trace))
        except (NoGoodTriangle, InvariantViolation) as exc:
            raise InvariantViolation(f"step {len(trace)}: {exc}", _dump(g, trace, h)) from exc
        trace.append(step)
        if len(trace) > budget:
            raise InvariantViolation("more steps than vertices", _dump(g, trace, h))

        prev_outer: set[Dart] = set(next(f for f in faces if f.is_outer).boundary)
        if isinstance(step, DropLowDegree):
            h2 = delete_vertex(h, step.u)
        elif isinstance(step, Smooth):
            h2, created = smooth_degree2(h, step.u)
            provenance[edge(*created)] = step.u
            moved = smoothing_dart_map(step.u, step.a, step.b)
            prev_outer = {moved.get(d, d) for d in prev_outer}
        else:
            fvs.update((step.y, step.z))
            packing.append(lift_cycle((step.x, step.y, step.z), provenance))
            h2 = delete_vertex(delete_vertex(h, step.y), step.z)
        log.debug("%s", step.to_line())

        if not len(h2):
            continue
        try:
            parts = [
                rebase(induced_component(h2, comp), prev_outer, mode)
                for comp in connected_components(h2)
            ]
        except NoBaseFace as exc:
            raise InvariantViolation(
                f"after step {step.index}: {exc}", _dump(g, trace, h2)
            ) from exc
        for p in parts:
            try:
                check_euler(p)
            except EmbeddingInconsistent as exc:
                raise InvariantViolation(
                    f"after step {step.index}: {exc}", _dump(g, trace, p)
                ) from exc
            if not is_based_planar(p, mode):
                raise InvariantViolation(
                    f"after step {step.index}: component is no longer based planar",
                    _dump(g, trace, p),
                )
            heapq.heappush(heap, (p.vertices()[0], p))

    faces_ok = _simple_face_cycles(g)
    cert = Certificate(
        fvs=tuple(sorted(fvs)),
        packing=tuple(packing),
        trace=tuple(trace),
        face_packing_flag=all(cycle_edges(c) in faces_ok for c in packing),
    )
    if verify:
        verdict = verify_certificate(g, cert)
        if not verdict.valid:
            raise InvariantViolation(
                "certificate check failed: " + "; ".join(verdict.violations),
                _dump(g, trace, None),
            )
    return cert


# -- verification --------------------------------------------------------------


def _residual_is_forest(g: PlanarEmbeddedGraph, removed: set[int]) -> bool:
    parent = {v: v for v in g.vertices() if v not in removed}

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for u, v in g.edges():
        if u in removed or v in removed:
            continue
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def verify_certificate(g: PlanarEmbeddedGraph, cert: Certificate) -> Verdict:
    """Re-check a certificate against the input graph from scratch."""
    out: list[str] = []
    vs = g.vertex_ids
    fvs = set(cert.fvs)
    if len(fvs) != len(cert.fvs):
        out.append("fvs lists a vertex twice")
    unknown = fvs - vs
    if unknown:
        out.append(f"fvs has unknown vertices {sorted(unknown)}")
    if len(fvs) > 2 * len(cert.packing):
        out.append(f"bound violated: {len(fvs)} > 2*{len(cert.packing)}")
    if not unknown and not _residual_is_forest(g, fvs):
        out.append("residual cyclic: graph minus fvs contains a cycle")

    used: set[int] = set()
    edge_sets = []
    for i, c in enumerate(cert.packing):
        if len(c) < 3 or len(set(c)) != len(c):
            out.append(f"cycle {i} is not simple")
            continue
        missing = [
            (c[j], c[(j + 1) % len(c)])
            for j in range(len(c))
            if not g.has_edge(c[j], c[(j + 1) % len(c)])
        ]
        if missing:
            out.append(f"cycle {i} is not a cycle of the graph (missing {missing[0]})")
            continue
        if used & set(c):
            out.append(f"cycle {i} is not disjoint from earlier cycles")
        used |= set(c)
        edge_sets.append(cycle_edges(c))

    if edge_sets:
        forbidden = forbidden_outer_cycles(g)
        for i, es in enumerate(edge_sets):
            if es in forbidden:
                out.append(f"cycle {i} is the outer face boundary")
    if len(edge_sets) == len(cert.packing):
        faces_ok = _simple_face_cycles(g)
        flag = all(es in faces_ok for es in edge_sets)
        if flag != cert.face_packing_flag:
            out.append(f"face_packing flag is {cert.face_packing_flag}, recomputed {flag}")
    return Verdict(out)
