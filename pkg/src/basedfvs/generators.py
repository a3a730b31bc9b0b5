"""Seeded constructions of embedded test graphs.

Every family returns a :class:`PlanarEmbeddedGraph` with a valid rotation
system and an outer anchor. The based families (Halin, wheel, fan,
outerplanar, random based) are checked with :func:`is_based_planar`
before they are returned. Prisms and hamiltonian graphs are experimental:
they are planar but usually not based.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from typing import Sequence

from .embedding import Face, PlanarEmbeddedGraph, edge, outer_face, trace_faces, validate
from .errors import GenerationFailed
from .recognition import is_based_planar, is_halin

MAX_RETRIES = 200


class Family(enum.Enum):
    HALIN = "halin"
    WHEEL = "wheel"
    FAN = "fan"
    OUTERPLANAR = "outerplanar"
    RANDOM_BASED = "random"
    PRISM = "prism"
    HAMILTONIAN = "hamiltonian"

    @property
    def experimental(self) -> bool:
        return self in (Family.PRISM, Family.HAMILTONIAN)


@dataclass(frozen=True)
class GenSpec:
    family: Family
    n: int
    seed: int = 0


# -- embedding surgery ---------------------------------------------------------


def _anchor_on(rot: dict[int, tuple[int, ...]], pick) -> PlanarEmbeddedGraph:
    """Anchor on the smallest dart of the first face (in ``pick`` order) chosen."""
    g = PlanarEmbeddedGraph(rot, min((u, v) for u in rot for v in rot[u]))
    faces = trace_faces(g)
    f = pick(faces)
    return g.with_anchor(min(f.boundary))


def insert_chord(g: PlanarEmbeddedGraph, face: Face, i: int, j: int) -> PlanarEmbeddedGraph:
    """Join the corners at walk positions ``i`` and ``j`` of ``face`` through its interior."""
    walk = face.boundary
    p, q = walk[i][0], walk[j][0]
    rot = g.rotations()
    for corner, other in ((i, q), (j, p)):
        prev_v, v = walk[corner - 1]
        r = list(rot[v])
        r.insert(r.index(prev_v) + 1, other)
        rot[v] = tuple(r)
    return PlanarEmbeddedGraph(rot, g.outer_anchor)


def insert_vertex(
    g: PlanarEmbeddedGraph, face: Face, corners: Sequence[int], w: int
) -> PlanarEmbeddedGraph:
    """Place new vertex ``w`` inside ``face`` joined to the given walk positions."""
    walk = face.boundary
    rot = g.rotations()
    targets = []
    for c in sorted(corners):
        prev_v, v = walk[c - 1]
        r = list(rot[v])
        r.insert(r.index(prev_v) + 1, w)
        rot[v] = tuple(r)
        targets.append(v)
    rot[w] = tuple(reversed(targets))
    return PlanarEmbeddedGraph(rot, g.outer_anchor)


def _cycle(m: int) -> PlanarEmbeddedGraph:
    rot = {i: ((i - 1) % m, (i + 1) % m) for i in range(m)}
    return PlanarEmbeddedGraph(rot, (0, 1))


def _inner(g: PlanarEmbeddedGraph) -> list[Face]:
    return [f for f in trace_faces(g) if not f.is_outer]


# -- based families --------------------------------------------------------------


def gen_wheel(rim: int) -> PlanarEmbeddedGraph:
    """Hub 0 joined to the rim cycle 1..rim; anchored on the rim face."""
    if rim < 3:
        raise ValueError("a wheel needs at least 3 rim vertices")
    rot = {0: tuple(range(1, rim + 1))}
    for i in range(1, rim + 1):
        prev_v = rim if i == 1 else i - 1
        next_v = 1 if i == rim else i + 1
        rot[i] = (0, prev_v, next_v)
    return _anchor_on(rot, lambda fs: next(f for f in fs if 0 not in f.vertex_set))


def gen_fan(n: int) -> PlanarEmbeddedGraph:
    """Hub 0 joined to every vertex of the path 1..n-1."""
    if n < 3:
        raise ValueError("a fan needs at least 3 vertices")
    k = n - 1
    rot = {0: tuple(range(1, k + 1))}
    for i in range(1, k + 1):
        nb = [0]
        if i > 1:
            nb.append(i - 1)
        if i < k:
            nb.append(i + 1)
        rot[i] = tuple(nb)
    return _anchor_on(rot, lambda fs: min(fs, key=lambda f: (-len(f.boundary), min(f.boundary))))


def _random_plane_tree(internal: int, leaves: int | None, rng: random.Random) -> list[list[int]]:
    """Children lists (ordered) of a plane tree with every internal degree >= 3.

    Internal vertices are built first as a random recursive tree; leaf
    quotas then top every internal vertex up to degree 3, and any extra
    leaves are scattered at random. Returns children indexed by preorder id.
    """
    if leaves is not None and leaves < internal + 2:
        raise ValueError(f"{internal} internal vertices need at least {internal + 2} leaves")
    while True:
        parent = [-1] + [rng.randrange(i) for i in range(1, internal)]
        kids: list[list[object]] = [[] for _ in range(internal)]
        for i in range(1, internal):
            kids[parent[i]].append(("int", i))
        need = [max(0, (3 if i == 0 else 2) - len(kids[i])) for i in range(internal)]
        minimum = sum(need)
        if leaves is None:
            leaves = minimum + rng.randint(0, internal + 1)
        if leaves >= minimum:
            break
    for i in range(internal):
        kids[i].extend(("leaf", None) for _ in range(need[i]))
    for _ in range(leaves - minimum):
        kids[rng.randrange(internal)].append(("leaf", None))
    for k in kids:
        rng.shuffle(k)

    children: list[list[int]] = []

    def visit(node: int) -> int:
        vid = len(children)
        children.append([])
        for kind, ref in kids[node]:
            if kind == "int":
                children[vid].append(visit(ref))
            else:
                children[vid].append(len(children))
                children.append([])
        return vid

    visit(0)
    return children


def halin_from_tree(children: list[list[int]]) -> PlanarEmbeddedGraph:
    """Join the leaves of a plane tree (root 0, preorder ids) into a cycle."""
    n = len(children)
    parent = {c: v for v in range(n) for c in children[v]}
    leaves = [v for v in range(n) if not children[v] and v != 0]
    rot: dict[int, tuple[int, ...]] = {}
    for v in range(n):
        if v == 0:
            rot[v] = tuple(children[v])
        elif children[v]:
            rot[v] = (parent[v], *children[v])
    L = len(leaves)
    for i, leaf in enumerate(leaves):
        rot[leaf] = (parent[leaf], leaves[i - 1], leaves[(i + 1) % L])
    leafset = frozenset(leaves)
    return _anchor_on(rot, lambda fs: next(f for f in fs if f.vertex_set == leafset))


def gen_halin(internal_nodes: int, seed: int = 0, leaves: int | None = None) -> PlanarEmbeddedGraph:
    """Random Halin graph; ``leaves`` fixes the leaf count (default: random)."""
    if internal_nodes < 1:
        raise ValueError("need at least one internal vertex")
    rng = random.Random(seed)
    g = halin_from_tree(_random_plane_tree(internal_nodes, leaves, rng))
    ok, _ = is_halin(g)
    if not ok or not is_based_planar(g):
        raise GenerationFailed("generated Halin graph failed recognition")
    return g


def gen_halin_n(n: int, seed: int = 0) -> PlanarEmbeddedGraph:
    """Random Halin graph with exactly ``n`` vertices."""
    if n < 4:
        raise ValueError("Halin graphs have at least 4 vertices")
    rng = random.Random(seed)
    internal = rng.randint(1, (n - 2) // 2)
    return gen_halin(internal, rng.getrandbits(64), leaves=n - internal)


def gen_outerplanar(n: int, seed: int = 0) -> PlanarEmbeddedGraph:
    """Cycle ``0..n-1`` plus random inner chords that keep the outer face a base face."""
    if n < 3:
        raise ValueError("need at least 3 vertices")
    rng = random.Random(seed)
    g = _cycle(n)
    for _ in range(rng.randint(0, n)):
        g = _try_chord(g, rng) or g
    return _finish(g)


def _try_chord(
    g: PlanarEmbeddedGraph, rng: random.Random, at: int | None = None, prefer_low: bool = False
) -> PlanarEmbeddedGraph | None:
    faces = [f for f in _inner(g) if len(f.boundary) >= 4]
    if at is not None:
        faces = [f for f in faces if at in f.vertex_set]
    if not faces:
        return None
    f = rng.choice(faces)
    k = len(f.boundary)
    walk = f.walk
    pairs = [
        (i, j)
        for i in range(k)
        for j in range(i + 2, k)
        if walk[i] != walk[j] and not g.has_edge(walk[i], walk[j])
        and (at is None or at in (walk[i], walk[j]))
    ]
    if prefer_low and pairs:
        low = min(g.degree(walk[i]) + g.degree(walk[j]) for i, j in pairs)
        pairs = [(i, j) for i, j in pairs if g.degree(walk[i]) + g.degree(walk[j]) == low]
    if not pairs:
        return None
    i, j = rng.choice(pairs)
    h = insert_chord(g, f, i, j)
    return h if is_based_planar(h) else None


def _try_vertex(
    g: PlanarEmbeddedGraph, rng: random.Random, w: int, prefer_low: bool = False
) -> PlanarEmbeddedGraph | None:
    """Put ``w`` inside a random inner face so that every new face keeps an outer edge.

    Chosen outer darts ``p1 < ... < pk`` of the face walk each get a corner
    in ``(p(i-1), pi]``; the arc between two consecutive corners then
    contains an outer dart.
    """
    outer_edges = outer_face(g).edge_set
    faces = [f for f in _inner(g) if sum(edge(*d) in outer_edges for d in f.boundary) >= 3]
    if prefer_low and faces:
        most = max(sum(g.degree(v) == 2 for v in f.vertex_set) for f in faces)
        faces = [f for f in faces if sum(g.degree(v) == 2 for v in f.vertex_set) == most]
    if not faces:
        return None
    f = rng.choice(faces)
    walk = f.walk
    m = len(walk)
    marks = [i for i, d in enumerate(f.boundary) if edge(*d) in outer_edges]
    picks = sorted(rng.sample(marks, rng.randint(3, min(len(marks), 5))))
    corners = []
    for i, p in enumerate(picks):
        lo = picks[i - 1] + 1 if i else picks[-1] + 1 - m
        span = [c % m for c in range(lo, p + 1)]
        if prefer_low:
            low = min(g.degree(walk[c]) for c in span)
            span = [c for c in span if g.degree(walk[c]) == low]
        corners.append(rng.choice(span))
    if len({walk[c] for c in corners}) < len(corners):
        return None
    h = insert_vertex(g, f, corners, w)
    return h if is_based_planar(h) else None


def _finish(g: PlanarEmbeddedGraph) -> PlanarEmbeddedGraph:
    validate(g)
    if not is_based_planar(g):
        raise GenerationFailed("generated graph is not based planar")
    return g


def gen_random_based(n: int, seed: int = 0, min_degree: int = 0) -> PlanarEmbeddedGraph:
    """Random based planar graph on ``n`` vertices.

    Starts from an outer cycle and applies moves that keep every inner face
    adjacent to the outer face: interior vertices joined to 3-5 corners of a
    face, and chords. Every inner face owns at least one outer edge, so the
    outer cycle gets at least about 2n/3 vertices.

    With ``min_degree=3`` corners and chords go to degree-2 vertices first,
    moves that shut a degree-2 vertex inside a triangle are refused, and the
    attempt is retried until every degree is at least 3.
    """
    if n < 3:
        raise ValueError("need at least 3 vertices")
    strict = min_degree >= 3
    rng = random.Random(seed)
    for _ in range(MAX_RETRIES):
        if strict:
            # measured sweet spot: shorter cycles run out of faces, longer ones keep degree-2 vertices
            outer = rng.randint(max(3, round(0.75 * n)), max(3, round(0.85 * n)))
        else:
            outer = rng.randint(max(3, -(-(2 * n + 1) // 3)), n)
        g = _cycle(outer)
        w = outer
        stalls = 0
        while w < n and stalls < 50:
            h = _try_vertex(g, rng, w, prefer_low=strict)
            if h is None or (strict and _trapped(h)):
                stalls += 1
                continue
            g, w = h, w + 1
        if w < n:
            continue
        if strict:
            g = _raise_degrees(g, rng)
            if min(g.degree(v) for v in g.vertices()) < 3:
                continue
        else:
            for _ in range(rng.randint(0, n // 2)):
                g = _try_chord(g, rng) or g
        return _finish(g)
    raise GenerationFailed(f"no based planar graph after {MAX_RETRIES} attempts")


def _trapped(g: PlanarEmbeddedGraph) -> bool:
    """A degree-2 vertex whose neighbours are adjacent can never reach degree 3."""
    return len(g) > 3 and any(
        g.degree(v) == 2 and g.has_edge(*g.rotation(v)) for v in g.vertices()
    )


def _raise_degrees(g: PlanarEmbeddedGraph, rng: random.Random) -> PlanarEmbeddedGraph:
    for _ in range(4 * len(g)):
        low = [v for v in g.vertices() if g.degree(v) < 3]
        if not low:
            break
        h = _try_chord(g, rng, at=rng.choice(low), prefer_low=True)
        if h is not None and not _trapped(h):
            g = h
    return g


# -- experimental families -------------------------------------------------------


def gen_prism(k: int) -> PlanarEmbeddedGraph:
    """Cycle ``0..k-1`` inside cycle ``k..2k-1`` with spokes; anchored on a square face."""
    if k < 3:
        raise ValueError("a prism needs k >= 3")
    rot = {}
    for i in range(k):
        o, inn = k + i, i
        rot[inn] = ((i - 1) % k, o, (i + 1) % k)
        rot[o] = (k + (i + 1) % k, inn, k + (i - 1) % k)
    return _anchor_on(rot, lambda fs: next(f for f in fs if len(f.boundary) == 4))


def gen_hamiltonian(n: int, seed: int = 0) -> PlanarEmbeddedGraph:
    """Hamiltonian cycle ``0..n-1`` with random chords on both sides."""
    if n < 3:
        raise ValueError("need at least 3 vertices")
    rng = random.Random(seed)
    g = _cycle(n)
    for _ in range(rng.randint(1, n)):
        faces = [f for f in trace_faces(g) if len(f.boundary) >= 4]
        if not faces:
            break
        f = rng.choice(faces)
        walk = f.walk
        pairs = [
            (i, j)
            for i in range(len(walk))
            for j in range(i + 2, len(walk))
            if not g.has_edge(walk[i], walk[j])
        ]
        if pairs:
            g = insert_chord(g, f, *rng.choice(pairs))
    validate(g)
    return g


# -- dispatch --------------------------------------------------------------------


def generate(spec: GenSpec) -> PlanarEmbeddedGraph:
    """Build the graph described by ``spec``; ``n`` is the vertex count."""
    fam, n, seed = spec.family, spec.n, spec.seed
    if fam is Family.HALIN:
        return gen_halin_n(n, seed)
    if fam is Family.WHEEL:
        return gen_wheel(n - 1)
    if fam is Family.FAN:
        return gen_fan(n)
    if fam is Family.OUTERPLANAR:
        return gen_outerplanar(n, seed)
    if fam is Family.RANDOM_BASED:
        return gen_random_based(n, seed)
    if fam is Family.PRISM:
        return gen_prism(max(3, n // 2))
    if fam is Family.HAMILTONIAN:
        return gen_hamiltonian(n, seed)
    raise ValueError(f"unknown family {fam}")


def min_vertices(family: Family) -> int:
    return {Family.HALIN: 4, Family.WHEEL: 4, Family.PRISM: 6}.get(family, 3)
