"""Exponential-time exact values of fvs, cp and fp for small graphs.

These are the ground truth the solver is checked against. The search
itself runs in :mod:`basedfvs.kernels` on bitmasks.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from . import kernels
from .embedding import PlanarEmbeddedGraph, edge, trace_faces
from .errors import TooLarge
from .recognition import forbidden_outer_cycles, inner_faces

DEFAULT_LIMIT = 16
CYCLE_CAP = 10_000


def vertex_limit() -> int:
    """Vertex cap, overridable through ``JONES_ORACLE_LIMIT``."""
    raw = os.environ.get("JONES_ORACLE_LIMIT")
    return int(raw) if raw else DEFAULT_LIMIT


@dataclass(frozen=True)
class OracleResult:
    fvs_min: int | None
    fvs_witness: frozenset[int]
    cp_max: int | None
    cp_witness: tuple[tuple[int, ...], ...]
    fp_max: int | None
    fp_witness: tuple[tuple[int, ...], ...]
    n_limit_hit: bool = False


def _index(g: PlanarEmbeddedGraph, limit: int | None) -> tuple[list[int], list[int]]:
    limit = vertex_limit() if limit is None else limit
    if len(g) > limit:
        raise TooLarge(f"{len(g)} vertices exceeds oracle limit {limit}")
    verts = g.vertices()
    pos = {v: i for i, v in enumerate(verts)}
    adj = [0] * len(verts)
    for v in verts:
        m = 0
        for w in g.rotation(v):
            m |= 1 << pos[w]
        adj[pos[v]] = m
    return verts, adj


def _mask(vs, pos: dict[int, int]) -> int:
    m = 0
    for v in vs:
        m |= 1 << pos[v]
    return m


def oracle_fvs(g: PlanarEmbeddedGraph, limit: int | None = None) -> tuple[int, frozenset[int]]:
    """Size and one witness of a minimum feedback vertex set."""
    verts, adj = _index(g, limit)
    m = kernels.backend_for(len(verts)).min_fvs(adj)
    witness = frozenset(verts[i] for i in range(len(verts)) if (m >> i) & 1)
    return len(witness), witness


def enumerate_cycles(
    g: PlanarEmbeddedGraph, cap: int = CYCLE_CAP, limit: int | None = None
) -> list[tuple[int, ...]]:
    """All simple cycles as vertex tuples; :class:`TooLarge` past ``cap`` cycles."""
    verts, adj = _index(g, limit)
    raw = kernels.backend_for(len(verts)).simple_cycles(adj, cap)
    if raw is None:
        raise TooLarge(f"more than {cap} cycles")
    return [tuple(verts[i] for i in c) for c in raw]


def _cycle_edges(c: tuple[int, ...]) -> frozenset:
    return frozenset(edge(c[i], c[(i + 1) % len(c)]) for i in range(len(c)))


def _pack(g: PlanarEmbeddedGraph, cycles: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    pos = {v: i for i, v in enumerate(g.vertices())}
    order = sorted(range(len(cycles)), key=lambda i: (len(cycles[i]), i))
    masks = [_mask(cycles[i], pos) for i in order]
    chosen = kernels.backend_for(len(pos)).max_packing(masks)
    return sorted(cycles[order[j]] for j in chosen)


def oracle_cp(
    g: PlanarEmbeddedGraph, exclude_outer: bool = True, limit: int | None = None
) -> tuple[int, list[tuple[int, ...]]]:
    """Maximum number of vertex-disjoint cycles, with one witness packing."""
    cycles = enumerate_cycles(g, limit=limit)
    if exclude_outer and cycles:
        forbidden = forbidden_outer_cycles(g)
        if forbidden:
            sizes = {len(f) for f in forbidden}
            cycles = [
                c for c in cycles if len(c) not in sizes or _cycle_edges(c) not in forbidden
            ]
    witness = _pack(g, cycles)
    return len(witness), witness


def face_cycles(g: PlanarEmbeddedGraph, exclude_outer: bool = True) -> list[tuple[int, ...]]:
    """Face boundaries that are simple cycles, one per distinct edge set."""
    faces = inner_faces(g) if exclude_outer else trace_faces(g)
    seen = set()
    out = []
    for f in faces:
        if f.is_simple_cycle and f.edge_set not in seen:
            seen.add(f.edge_set)
            out.append(f.walk)
    return out


def oracle_fp(
    g: PlanarEmbeddedGraph, exclude_outer: bool = True, limit: int | None = None
) -> tuple[int, list[tuple[int, ...]]]:
    """Maximum number of vertex-disjoint faces, with one witness."""
    _index(g, limit)
    witness = _pack(g, face_cycles(g, exclude_outer))
    return len(witness), witness


def oracle(
    g: PlanarEmbeddedGraph, exclude_outer: bool = True, limit: int | None = None
) -> OracleResult:
    """All three exact values; ``n_limit_hit`` instead of raising on large input."""
    try:
        fvs, fw = oracle_fvs(g, limit)
        cp, cw = oracle_cp(g, exclude_outer, limit)
        fp, pw = oracle_fp(g, exclude_outer, limit)
    except TooLarge:
        return OracleResult(None, frozenset(), None, (), None, (), n_limit_hit=True)
    return OracleResult(fvs, fw, cp, tuple(cw), fp, tuple(pw))
