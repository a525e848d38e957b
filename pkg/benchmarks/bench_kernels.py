"""Time the compiled kernels against the pure-Python fallback.

Two levels: the raw kernels on random generator sets, and the edge
primitivity test on a few catalog graphs (the heaviest kernel consumer).

    python3 benchmarks/bench_kernels.py --repeat 3
"""

from __future__ import annotations

import argparse
import random
import timeit

from edgeprim import cosetgraph as cg
from edgeprim import kernels
from edgeprim.catalog import find_entry
from edgeprim.catalog.verify import load_triple

ENTRIES = ("PSL2(19)-D20", "J1-d8", "Sz8", "PSL43.2-d13")


def random_gens(n, k, seed):
    rng = random.Random(seed)
    return [tuple(rng.sample(range(n), n)) for _ in range(k)]


def kernel_cases(n):
    gens = random_gens(n, 2, n)
    return {
        "orbit_labels": lambda: kernels.orbit_labels(gens, n),
        "minimal_block": lambda: kernels.minimal_block(gens, n, 0, 1),
        "block_size": lambda: kernels.block_size(gens, n, 0, 1),
        "orbit_with_schreier": lambda: kernels.orbit_with_schreier(gens, n, 0),
    }


def best_of(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--degree", type=int, default=20000)
    ap.add_argument("--entries", nargs="*", default=list(ENTRIES))
    args = ap.parse_args(argv)

    graphs = {}
    for eid in args.entries:
        graphs[eid] = cg.build(*load_triple(find_entry(eid)))

    rows = []
    for name, fn in kernel_cases(args.degree).items():
        rows.append((f"{name} (n={args.degree})", fn))
    for eid, g in graphs.items():
        rows.append((f"is_edge_primitive {eid} (|E|={g.edge_count})",
                     lambda g=g: cg.is_edge_primitive(g)))

    print(f"{'case':<48} {'python':>10} {'compiled':>10} {'speedup':>8}")
    for label, fn in rows:
        times = {}
        for backend in ("python", "compiled"):
            kernels.use_backend(backend)
            times[backend] = best_of(fn, args.repeat)
        ratio = times["python"] / times["compiled"] if times["compiled"] else float("inf")
        print(f"{label:<48} {times['python']:>9.4f}s {times['compiled']:>9.4f}s {ratio:>7.1f}x")


if __name__ == "__main__":
    main()
