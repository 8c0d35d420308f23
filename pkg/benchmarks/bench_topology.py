#!/usr/bin/env python3
"""Benchmark the relay-tree kernels: numba @njit vs the pure-numpy path.

The tree build is the package's one O(N^2) inner loop; everything else
is closed-form math.  Run after `pip install -e .`:

    python benchmarks/bench_topology.py
"""
import time

import numpy as np

from wbackhaul import _kernels, topology


def _sorted_inputs(n: int, seed: int):
    # mirror build_relay_tree's preprocessing
    pl = topology.place_uniform(n, 500.0, seed=seed)
    pts = pl.positions
    d2 = (pts ** 2).sum(axis=1)
    g = int(np.argmin(d2))
    d_gw = np.hypot(pts[:, 0] - pts[g, 0], pts[:, 1] - pts[g, 1])
    d_gw[g] = -1.0
    order = np.lexsort((np.arange(n), d_gw))
    return pts[order], order.astype(np.int64)


def _time(fn, *args, repeats=3):
    best = float("inf")
    result = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    if _kernels.parent_ranks_numba is None:
        print("numba not installed; only the numpy path is available")
        return
    # compile outside the timed region
    warm_pos, warm_idx = _sorted_inputs(64, seed=0)
    _kernels.subtree_sizes_numba(_kernels.parent_ranks_numba(warm_pos, warm_idx))

    print(f"{'n':>7} {'numpy [s]':>12} {'numba [s]':>12} {'speedup':>9}")
    for n in (500, 2000, 8000):
        pos, idx = _sorted_inputs(n, seed=1)
        t_np, ranks_np = _time(_kernels.parent_ranks_numpy, pos, idx)
        t_nb, ranks_nb = _time(_kernels.parent_ranks_numba, pos, idx)
        assert np.array_equal(ranks_np, ranks_nb), "backend mismatch"
        s_np, sizes_np = _time(_kernels.subtree_sizes_numpy, ranks_np)
        s_nb, sizes_nb = _time(_kernels.subtree_sizes_numba, ranks_nb)
        assert np.array_equal(sizes_np, sizes_nb), "backend mismatch"
        total_np, total_nb = t_np + s_np, t_nb + s_nb
        print(f"{n:>7} {total_np:>12.4f} {total_nb:>12.4f} "
              f"{total_np / total_nb:>8.1f}x")
    print(f"\nactive backend: {_kernels.backend()} "
          f"(set WBACKHAUL_NUMBA=0 to force the numpy path)")


if __name__ == "__main__":
    main()
