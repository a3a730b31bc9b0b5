"""``basedfvs`` command line.

Exit codes: 0 ok, 1 parse or usage error, 2 precondition not met,
3 internal invariant violated, 4 invalid certificate.
"""

from __future__ import annotations

import argparse
import json
import sys
import tempfile

from .embedding import trace_faces, validate
from .errors import (
    BasedFvsError,
    Claim1Precondition,
    GenerationFailed,
    InvariantViolation,
    NoGoodTriangle,
    NotBasedPlanar,
    ParseError,
    TooLarge,
)
from .generators import Family, GenSpec, generate
from .io import read_certificate, read_graph, serialize_certificate, serialize_graph
from .oracle import oracle_cp, oracle_fp, oracle_fvs
from .recognition import AdjacencyMode, find_base_faces, is_based_planar, is_halin
from .solver import solve, verify_certificate
from .stress import run_stress
from .triangles import all_good_triangles, claim1_find_good_triangle, find_good_triangle

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_PRECONDITION = 2
EXIT_INVARIANT = 3
EXIT_INVALID_CERT = 4


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad flags; 2 is reserved for precondition failures here
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def _err(msg: str) -> None:
    print(msg, file=sys.stderr)


def _write_dump(dump: str) -> str:
    with tempfile.NamedTemporaryFile(
        "w", prefix="basedfvs-dump-", suffix=".txt", delete=False, encoding="utf-8"
    ) as fh:
        fh.write(dump)
    return fh.name


def cmd_solve(args) -> int:
    g = read_graph(args.graph)
    try:
        cert = solve(g, AdjacencyMode(args.adjacency))
    except NotBasedPlanar as exc:
        _err(f"not based planar: {exc}")
        return EXIT_PRECONDITION
    except InvariantViolation as exc:
        path = _write_dump(exc.dump)
        _err(f"internal invariant violated: {exc}\ndump written to {path}")
        return EXIT_INVARIANT
    if args.quiet:
        print(f"fvs={len(cert.fvs)} packing={len(cert.packing)}")
    else:
        sys.stdout.write(serialize_certificate(cert))
    return EXIT_OK


def cmd_verify(args) -> int:
    g = read_graph(args.graph)
    cert = read_certificate(args.certificate)
    verdict = verify_certificate(g, cert)
    if verdict.valid:
        print("valid")
        return EXIT_OK
    print("invalid")
    for v in verdict.violations:
        print(f"  {v}")
    return EXIT_INVALID_CERT


def cmd_check(args) -> int:
    g = read_graph(args.graph)
    faces = validate(g)
    mode = AdjacencyMode(args.adjacency)
    halin, _ = is_halin(g)
    print(f"vertices: {len(g)}")
    print(f"edges: {g.num_edges()}")
    print(f"faces: {len(faces)}")
    print("euler: ok")
    print(f"base faces: {json.dumps(find_base_faces(g, mode, faces))}")
    print(f"based planar: {str(is_based_planar(g, mode)).lower()}")
    print(f"halin: {str(halin).lower()}")
    return EXIT_OK


def cmd_oracle(args) -> int:
    g = read_graph(args.graph)
    exclude = not args.include_outer
    try:
        fvs, fw = oracle_fvs(g)
        cp, cw = oracle_cp(g, exclude_outer=exclude)
        fp, pw = oracle_fp(g, exclude_outer=exclude)
    except TooLarge as exc:
        _err(f"too large for the exact oracle: {exc}")
        return EXIT_PRECONDITION
    print(f"fvs: {fvs} {json.dumps(sorted(fw))}")
    print(f"cp: {cp} {json.dumps([list(c) for c in cw])}")
    print(f"fp: {fp} {json.dumps([list(c) for c in pw])}")
    print(f"fvs <= 2*cp: {str(fvs <= 2 * cp).lower()}")
    return EXIT_OK


def cmd_gen(args) -> int:
    try:
        g = generate(GenSpec(Family(args.family), args.n, args.seed))
    except (ValueError, GenerationFailed) as exc:
        _err(str(exc))
        return EXIT_PRECONDITION
    sys.stdout.write(serialize_graph(g))
    return EXIT_OK


def cmd_triangles(args) -> int:
    g = read_graph(args.graph)
    try:
        if args.claim1:
            found = [claim1_find_good_triangle(g, args.avoid)]
        elif args.avoid is not None:
            found = [find_good_triangle(g, args.avoid)]
        else:
            found = all_good_triangles(g, trace_faces(g))
    except (NoGoodTriangle, Claim1Precondition, ValueError) as exc:
        _err(f"{type(exc).__name__}: {exc}")
        return EXIT_PRECONDITION
    for t in found:
        print(f"{t.x} {t.y} {t.z}")
    return EXIT_OK


def cmd_stress(args) -> int:
    try:
        report = run_stress(Family(args.family), args.n_min, args.n_max, args.iters, args.seed)
    except ValueError as exc:
        _err(str(exc))
        return EXIT_PARSE
    sys.stdout.write(report.format())
    return EXIT_OK if report.ok else EXIT_INVARIANT


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="basedfvs", description="Certified fvs <= 2*cp on based planar graphs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    adjacency = {"choices": [m.value for m in AdjacencyMode], "default": AdjacencyMode.EDGE_SHARING.value}
    families = [f.value for f in Family]

    s = sub.add_parser("solve", help="solve a graph file and print its certificate")
    s.add_argument("graph")
    s.add_argument("--adjacency", **adjacency)
    s.add_argument("--quiet", action="store_true", help="print sizes only")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("verify", help="check a certificate against a graph")
    s.add_argument("graph")
    s.add_argument("certificate")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("check", help="validate a graph file and report its structure")
    s.add_argument("graph")
    s.add_argument("--adjacency", **adjacency)
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("oracle", help="exact fvs, cp and fp for a small graph")
    s.add_argument("graph")
    s.add_argument("--include-outer", action="store_true", help="allow the outer face cycle in packings")
    s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("gen", help="print a generated graph")
    s.add_argument("--family", choices=families, required=True)
    s.add_argument("--n", type=int, required=True, help="vertex count")
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("triangles", help="list good triangles")
    s.add_argument("graph")
    s.add_argument("--avoid", type=int, help="outer vertex the triangle must miss")
    s.add_argument("--claim1", action="store_true", help="use the longest-path construction")
    s.set_defaults(func=cmd_triangles)

    s = sub.add_parser("stress", help="generate a corpus and cross-check everything")
    s.add_argument("--family", choices=families, default=Family.RANDOM_BASED.value)
    s.add_argument("--n-min", type=int, default=3)
    s.add_argument("--n-max", type=int, default=12)
    s.add_argument("--iters", type=int, default=100)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_stress)
    return p


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_PARSE
    try:
        return args.func(args)
    except ParseError as exc:
        _err(f"parse error: {exc}")
        return EXIT_PARSE
    except OSError as exc:
        _err(str(exc))
        return EXIT_PARSE
    except InvariantViolation as exc:
        path = _write_dump(exc.dump)
        _err(f"internal invariant violated: {exc}\ndump written to {path}")
        return EXIT_INVARIANT
    except BasedFvsError as exc:
        _err(f"{type(exc).__name__}: {exc}")
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
