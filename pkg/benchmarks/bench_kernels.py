"""Compare the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--sizes 10 12 14 16]

Each kernel runs on the same bitmask inputs built from generated based
planar graphs. Outputs of the two backends are compared before timing.
"""

import argparse
import sys
import time

from basedfvs import _kernels_py
from basedfvs.generators import gen_halin_n, gen_random_based
from basedfvs.oracle import CYCLE_CAP

try:
    from basedfvs import _kernels
except ImportError:
    _kernels = None


def adjacency(g) -> list[int]:
    pos = {v: i for i, v in enumerate(g.vertices())}
    adj = [0] * len(pos)
    for v in g.vertices():
        for w in g.rotation(v):
            adj[pos[v]] |= 1 << pos[w]
    return adj


def workload(sizes, per_size=5):
    out = []
    for n in sizes:
        for seed in range(per_size):
            out.append(adjacency(gen_halin_n(n, seed)))
            out.append(adjacency(gen_random_based(n, seed)))
    return out


def packing_masks(mod, adj):
    cycles = mod.simple_cycles(adj, CYCLE_CAP) or []
    masks = []
    for c in sorted(cycles, key=len):
        m = 0
        for i in c:
            m |= 1 << i
        masks.append(m)
    return masks


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[10, 12, 14, 16])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if _kernels is None:
        print("compiled extension not built; run `pip install -e . --no-build-isolation`")
        return 1

    adjs = workload(args.sizes)
    masks = [packing_masks(_kernels_py, a) for a in adjs]
    for a, m in zip(adjs, masks):
        assert _kernels.simple_cycles(a, CYCLE_CAP) == _kernels_py.simple_cycles(a, CYCLE_CAP)
        assert bin(_kernels.min_fvs(a)).count("1") == bin(_kernels_py.min_fvs(a)).count("1")
        assert len(_kernels.max_packing(m)) == len(_kernels_py.max_packing(m))

    cases = {
        "simple_cycles": lambda mod: [mod.simple_cycles(a, CYCLE_CAP) for a in adjs],
        "min_fvs": lambda mod: [mod.min_fvs(a) for a in adjs],
        "max_packing": lambda mod: [mod.max_packing(m) for m in masks],
    }
    print(f"{len(adjs)} graphs, n in {args.sizes}, best of {args.repeat}")
    print(f"{'kernel':<14} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for name, fn in cases.items():
        py = best_of(lambda: fn(_kernels_py), args.repeat)
        cy = best_of(lambda: fn(_kernels), args.repeat)
        print(f"{name:<14} {py:>10.4f} {cy:>10.4f} {py / cy:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
