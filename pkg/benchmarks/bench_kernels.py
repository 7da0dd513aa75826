"""Compare the compiled and pure-Python kernels on representative workloads.

    python benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import sys
import timeit

from posetkit import _pykernels
from posetkit.gen import GenSpec, boolean_lattice, generate, total_order

try:
    from posetkit import _ckernels
except ImportError:
    _ckernels = None


def workloads():
    dags = [generate(GenSpec("random_dag", 20, s, "0.15")) for s in range(20)]
    yield "max_clique  (antichains, 20 random n=20)", "max_clique", [(list(P.incomparability), P.full_mask) for P in dags]
    yield "first_clique(antichains, 20 random n=20)", "first_clique_of_size", [
        (list(P.incomparability), P.full_mask, _pykernels.max_clique(list(P.incomparability), P.full_mask).bit_count(), 0, 0)
        for P in dags
    ]
    small = [generate(GenSpec("random_dag", 13, s, "0.3")) for s in range(5)] + [total_order(13), boolean_lattice(3)]
    yield "partition DP (chains, n<=13)", "min_clique_partition", [(list(P.comparability), P.n) for P in small]
    rows = [[(1 << (i + 1)) | (1 << ((i * 7 + 3) % 64)) if i < 63 else 0 for i in range(64)]]
    yield "closure     (n=64)", "transitive_closure", [(r, 64) for r in rows * 50]


def run(module, fn, cases):
    f = getattr(module, fn)
    for args in cases:
        f(*args)


def main(argv=None):
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if _ckernels is None:
        print("compiled kernels not built; only the Python backend is available", file=sys.stderr)
    print(f"{'workload':44s} {'python':>10s} {'cython':>10s} {'speedup':>8s}")
    for name, fn, cases in workloads():
        py = min(timeit.repeat(lambda: run(_pykernels, fn, cases), number=1, repeat=args.repeat))
        if _ckernels is None:
            print(f"{name:44s} {py:10.4f} {'-':>10s} {'-':>8s}")
            continue
        cy = min(timeit.repeat(lambda: run(_ckernels, fn, cases), number=1, repeat=args.repeat))
        print(f"{name:44s} {py:10.4f} {cy:10.4f} {py / cy:7.1f}x")


if __name__ == "__main__":
    main()
