"""Corpus-level stress runs: generate, solve, verify, and compare with the oracles."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .embedding import PlanarEmbeddedGraph, outer_face, validate
from .errors import BasedFvsError
from .generators import Family, GenSpec, generate, min_vertices
from .oracle import oracle
from .recognition import is_based_planar
from .solver import Certificate, solve, verify_certificate
from .triangles import find_good_triangle

ORACLE_MAX_N = 14


@dataclass
class Failure:
    spec: GenSpec
    reason: str
    dump: str


@dataclass
class StressReport:
    family: Family
    instances: int = 0
    solved: int = 0
    oracle_checked: int = 0
    avoidance_checked: int = 0
    tight: int = 0
    face_flag_true: int = 0
    face_flag_false: list[GenSpec] = field(default_factory=list)
    failures: list[Failure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def format(self) -> str:
        lines = [
            f"family: {self.family.value}",
            f"instances: {self.instances}",
            f"solved+verified: {self.solved}",
            f"oracle sandwich checked: {self.oracle_checked}",
            f"avoiding-triangle graphs checked: {self.avoidance_checked}",
            f"face_packing true: {self.face_flag_true}/{self.solved}",
        ]
        if self.family is Family.WHEEL:
            lines.append(f"tight |fvs| = 2*|packing|: {self.tight}/{self.solved}")
        for spec in self.face_flag_false:
            lines.append(f"face_packing false: n={spec.n} seed={spec.seed}")
        lines.append(f"passed: {self.instances - len(self.failures)}")
        lines.append(f"failed: {len(self.failures)}")
        for f in self.failures:
            lines.append(f"FAIL n={f.spec.n} seed={f.spec.seed}: {f.reason}")
            lines.extend("  " + row for row in f.dump.splitlines())
        return "\n".join(lines) + "\n"


def _dump(g: PlanarEmbeddedGraph | None) -> str:
    from .io import serialize_graph

    return serialize_graph(g) if g is not None else "(generation failed)"


def sandwich_problems(g: PlanarEmbeddedGraph, cert: Certificate | None, exclude_outer: bool = True) -> list[str]:
    """Oracle comparison for one instance; empty when everything holds."""
    res = oracle(g, exclude_outer=exclude_outer)
    if res.n_limit_hit:
        return []
    out = []
    if res.fvs_min > 2 * res.cp_max:
        out.append(f"fvs_exact {res.fvs_min} > 2*cp_exact {res.cp_max}")
    if cert is not None:
        f, p = len(cert.fvs), len(cert.packing)
        if not res.fvs_min <= f <= 2 * p <= 2 * res.cp_max:
            out.append(f"sandwich broken: fvs_exact={res.fvs_min} fvs={f} packing={p} cp_exact={res.cp_max}")
        if cert.face_packing_flag and f > 2 * res.fp_max:
            out.append(f"face packing flag set but |fvs|={f} > 2*fp_exact={res.fp_max}")
    return out


def avoidance_problems(g: PlanarEmbeddedGraph) -> list[str]:
    out = []
    for u in sorted(outer_face(g).vertex_set):
        try:
            t = find_good_triangle(g, avoid=u)
        except BasedFvsError as exc:
            out.append(f"no good triangle avoiding {u}: {exc}")
            continue
        if u in t.vertices:
            out.append(f"good triangle {t} contains avoided vertex {u}")
    return out


def check_instance(spec: GenSpec, report: StressReport) -> None:
    g = None
    try:
        g = generate(spec)
        validate(g)
        problems: list[str] = []
        cert = None
        based = is_based_planar(g)
        if based:
            cert = solve(g)
            problems += [str(v) for v in verify_certificate(g, cert).violations]
        elif not spec.family.experimental:
            problems.append("generated graph is not based planar")
        if len(g) <= ORACLE_MAX_N:
            # experimental families are usually not based, so there is no outer face to exclude
            problems += sandwich_problems(g, cert, exclude_outer=based)
            report.oracle_checked += 1
        if based and len(g) and min(g.degree(v) for v in g.vertices()) >= 3:
            problems += avoidance_problems(g)
            report.avoidance_checked += 1
    except BasedFvsError as exc:
        problems = [f"{type(exc).__name__}: {exc}"]
    if problems:
        report.failures.append(Failure(spec, "; ".join(problems), _dump(g)))
        return
    if cert is not None:
        report.solved += 1
        if len(cert.fvs) == 2 * len(cert.packing):
            report.tight += 1
        if cert.face_packing_flag:
            report.face_flag_true += 1
        else:
            report.face_flag_false.append(spec)


def corpus(family: Family, n_min: int, n_max: int, iters: int, seed: int) -> list[GenSpec]:
    """Deterministic list of instance specs for one stress run."""
    lo = max(n_min, min_vertices(family))
    if n_max < lo:
        raise ValueError(f"n-max {n_max} is below the smallest {family.value} graph ({lo} vertices)")
    rng = random.Random(seed)
    return [GenSpec(family, rng.randint(lo, n_max), rng.getrandbits(63)) for _ in range(iters)]


def run_stress(family: Family, n_min: int = 3, n_max: int = 12, iters: int = 100, seed: int = 0) -> StressReport:
    report = StressReport(family)
    for spec in corpus(family, n_min, n_max, iters, seed):
        report.instances += 1
        check_instance(spec, report)
    return report
