"""Compiled kernels against the numpy fallback.

    python benchmarks/bench_kernels.py [--repeat N]

Times the exhaustive subset search on two_cliques_bridged(n) and all-source
BFS on a polarity graph, checks both backends return the same answer and
prints the speedup.
"""
import argparse
import time

import numpy as np

from lowdiam import constructions as cons
from lowdiam import kernels


def best_of(fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--sizes", type=int, nargs="+", default=[18, 20, 22, 24])
    parser.add_argument("--q", type=int, default=31, help="prime order of the polarity graph for BFS")
    args = parser.parse_args()

    if kernels.compiled is None:
        raise SystemExit("compiled extension not built; run pip install -e . --no-build-isolation")

    print(f"{'kernel':<28}{'cython s':>12}{'python s':>12}{'speedup':>10}")
    for n in args.sizes:
        g = cons.gen_two_cliques_bridged(n)
        masks = g.neighbor_masks()
        tc, rc = best_of(lambda: kernels.compiled.subset_expansion(masks, n), args.repeat)
        tp, rp = best_of(lambda: kernels.fallback.subset_expansion(masks, n), args.repeat)
        assert tuple(map(int, rc)) == tuple(map(int, rp)), (rc, rp)
        print(f"{'subset_expansion n=' + str(n):<28}{tc:>12.4f}{tp:>12.4f}{tp / tc:>10.1f}")

    g = cons.gen_polarity(args.q)
    indptr, indices = g.csr()
    tc, rc = best_of(lambda: kernels.compiled.bfs_eccentricities(indptr, indices, g.n), args.repeat)
    tp, rp = best_of(lambda: kernels.fallback.bfs_eccentricities(indptr, indices, g.n), args.repeat)
    assert np.array_equal(np.asarray(rc), np.asarray(rp))
    print(f"{'bfs polarity n=' + str(g.n):<28}{tc:>12.4f}{tp:>12.4f}{tp / tc:>10.1f}")


if __name__ == "__main__":
    main()
