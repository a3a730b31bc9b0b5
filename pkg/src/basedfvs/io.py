"""Text formats for embedded graphs and certificates.

Graph file::

    # comment
    n m
    v: n1 n2 ... nk      one line per vertex, clockwise rotation
    outer: u v           outer anchor dart ("outer: none" when edgeless)

Certificate file::

    fvs: [ids]
    packing: [[cycle ids], ...]
    bound: |fvs| <= 2*|packing|
    face_packing: true|false
    trace:
      <index> <kind> key=value ...
"""

from __future__ import annotations

import json
from pathlib import Path

from .embedding import PlanarEmbeddedGraph, check_euler, outer_face, trace_faces
from .errors import AnchorMissing, EmbeddingInconsistent, ParseError
from .solver import Certificate, step_from_line


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if body.strip():
            yield lineno, raw, body


def _int(tok: str, lineno: int, raw: str, what: str) -> int:
    try:
        val = int(tok)
    except ValueError:
        raise ParseError(f"expected integer {what}, got {tok!r}", lineno, raw.find(tok) + 1) from None
    if val < 0:
        raise ParseError(f"{what} must be non-negative", lineno, raw.find(tok) + 1)
    return val


def parse_graph(text: str) -> PlanarEmbeddedGraph:
    """Parse and fully validate a graph file."""
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty graph file", 1, 1)
    lineno, raw, body = lines[0]
    toks = body.split()
    if len(toks) != 2:
        raise ParseError("header must be 'n m'", lineno, 1)
    n = _int(toks[0], lineno, raw, "vertex count")
    m = _int(toks[1], lineno, raw, "edge count")
    header_line = lineno

    rot: dict[int, tuple[int, ...]] = {}
    line_of: dict[int, int] = {}
    for lineno, raw, body in lines[1 : n + 1]:
        head, sep, rest = body.partition(":")
        if not sep:
            raise ParseError("vertex line must look like 'v: n1 n2 ...'", lineno, 1)
        if head.strip() == "outer":
            raise ParseError(f"found outer line after {len(rot)} of {n} vertices", lineno, 1)
        v = _int(head.strip(), lineno, raw, "vertex id")
        if v in rot:
            raise ParseError(f"vertex {v} listed twice", lineno, 1)
        rot[v] = tuple(_int(t, lineno, raw, "neighbour id") for t in rest.split())
        line_of[v] = lineno
    if len(lines) < n + 2:
        raise ParseError(f"expected {n} vertex lines and an outer line", lines[-1][0], 1)

    lineno, raw, body = lines[n + 1]
    head, sep, rest = body.partition(":")
    if head.strip() != "outer" or not sep:
        raise ParseError("expected 'outer: u v'", lineno, 1)
    toks = rest.split()
    if toks == ["none"]:
        anchor = None
    elif len(toks) == 2:
        anchor = (_int(toks[0], lineno, raw, "vertex id"), _int(toks[1], lineno, raw, "vertex id"))
    else:
        raise ParseError("outer line needs two vertex ids or 'none'", lineno, len(head) + 2)
    outer_line = lineno
    if len(lines) > n + 2:
        raise ParseError("unexpected content after outer line", lines[n + 2][0], 1)

    for v, nbrs in rot.items():
        for w in nbrs:
            if w == v:
                raise ParseError(f"self-loop at vertex {v}", line_of[v], 1)
            if w not in rot:
                raise ParseError(f"unknown neighbour {w}", line_of[v], 1)
            if v not in rot[w]:
                raise ParseError(f"edge {v}-{w} missing from rotation of {w}", line_of[v], 1)
        if len(set(nbrs)) != len(nbrs):
            raise ParseError(f"vertex {v} lists a neighbour twice", line_of[v], 1)
    g = PlanarEmbeddedGraph(rot, anchor)
    if g.num_edges() != m:
        raise ParseError(f"header says {m} edges, rotations give {g.num_edges()}", header_line, 1)
    try:
        faces = trace_faces(g)
    except AnchorMissing as exc:
        raise ParseError(str(exc), outer_line, 1) from None
    try:
        check_euler(g, faces)
    except EmbeddingInconsistent as exc:
        raise ParseError(str(exc), header_line, 1) from None
    return g


def read_graph(path: str | Path) -> PlanarEmbeddedGraph:
    return parse_graph(Path(path).read_text(encoding="utf-8"))


def serialize_graph(g: PlanarEmbeddedGraph, canonical: bool = True) -> str:
    """Graph file text. Canonical form also moves the anchor to the outer face's smallest dart."""
    rot = g.canonical_rotations()
    anchor = g.outer_anchor
    if canonical and anchor is not None:
        anchor = min(outer_face(g).boundary)
    lines = [f"{len(g)} {g.num_edges()}"]
    for v, nbrs in rot.items():
        lines.append(f"{v}: {' '.join(map(str, nbrs))}".rstrip())
    lines.append("outer: none" if anchor is None else f"outer: {anchor[0]} {anchor[1]}")
    return "\n".join(lines) + "\n"


def write_graph(g: PlanarEmbeddedGraph, path: str | Path) -> None:
    Path(path).write_text(serialize_graph(g), encoding="utf-8")


# -- certificates --------------------------------------------------------------


def serialize_certificate(cert: Certificate) -> str:
    lines = [
        f"fvs: {json.dumps(list(cert.fvs))}",
        f"packing: {json.dumps([list(c) for c in cert.packing])}",
        f"bound: {len(cert.fvs)} <= 2*{len(cert.packing)}",
        f"face_packing: {'true' if cert.face_packing_flag else 'false'}",
        "trace:",
    ]
    lines.extend("  " + s.to_line() for s in cert.trace)
    return "\n".join(lines) + "\n"


def parse_certificate(text: str) -> Certificate:
    fields: dict[str, str] = {}
    field_line: dict[str, int] = {}
    trace = []
    in_trace = False
    for lineno, raw, body in _content_lines(text):
        if in_trace:
            try:
                trace.append(step_from_line(body.strip()))
            except (KeyError, ValueError, TypeError, IndexError):
                raise ParseError(f"bad trace step {body.strip()!r}", lineno, 1) from None
            continue
        key, sep, value = body.partition(":")
        key = key.strip()
        if not sep or key not in ("fvs", "packing", "bound", "face_packing", "trace"):
            raise ParseError(f"unknown certificate line {body.strip()!r}", lineno, 1)
        if key == "trace":
            in_trace = True
            continue
        fields[key] = value.strip()
        field_line[key] = lineno
    for key in ("fvs", "packing", "face_packing"):
        if key not in fields:
            raise ParseError(f"certificate lacks '{key}'", 1, 1)
    try:
        fvs = json.loads(fields["fvs"])
        if not all(isinstance(v, int) for v in fvs):
            raise ValueError
    except (ValueError, TypeError):
        raise ParseError("fvs must be a list of integers", field_line["fvs"], 1) from None
    try:
        packing = json.loads(fields["packing"])
        if not all(isinstance(c, list) and all(isinstance(v, int) for v in c) for c in packing):
            raise ValueError
    except (ValueError, TypeError):
        raise ParseError("packing must be a list of integer lists", field_line["packing"], 1) from None
    flag = fields["face_packing"]
    if flag not in ("true", "false"):
        raise ParseError("face_packing must be true or false", field_line["face_packing"], 1)
    return Certificate(
        fvs=tuple(fvs),
        packing=tuple(tuple(c) for c in packing),
        trace=tuple(trace),
        face_packing_flag=flag == "true",
    )


def read_certificate(path: str | Path) -> Certificate:
    return parse_certificate(Path(path).read_text(encoding="utf-8"))
