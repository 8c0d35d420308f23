"""Hot numeric kernels for relay-tree construction.

Both kernels exist in a numba @njit variant and a pure-numpy variant
that compute bit-identical results (same IEEE operations, same
tie-breaks).  The active backend is chosen at import time: numba when
importable, unless the environment variable WBACKHAUL_NUMBA is set to
"0", in which case the numpy path is used.  benchmarks/bench_topology.py
compares the two.
"""
from __future__ import annotations

import os

import numpy as np

_env = os.environ.get("WBACKHAUL_NUMBA", "1")
try:
    from numba import njit
    _HAVE_NUMBA = True
except ImportError:
    njit = None
    _HAVE_NUMBA = False

_USE_NUMBA = _HAVE_NUMBA and _env != "0"


def parent_ranks_numpy(pos: np.ndarray, node_idx: np.ndarray) -> np.ndarray:
    """Parent rank for each rank: nearest strictly-lower-ranked node.

    pos is (n, 2) float64 in rank order (gateway at rank 0, gateway
    distance non-decreasing); node_idx maps rank -> original node index
    and breaks exact distance ties (smaller index wins).  Rank 0 gets
    parent -1.
    """
    n = pos.shape[0]
    out = np.empty(n, dtype=np.int64)
    out[0] = -1
    for k in range(1, n):
        diff = pos[:k] - pos[k]
        d2 = diff[:, 0] * diff[:, 0] + diff[:, 1] * diff[:, 1]
        best = d2.min()
        ties = np.nonzero(d2 == best)[0]
        out[k] = ties[np.argmin(node_idx[ties])]
    return out


def _parent_ranks_scalar(pos, node_idx):
    n = pos.shape[0]
    out = np.empty(n, dtype=np.int64)
    out[0] = -1
    for k in range(1, n):
        xk = pos[k, 0]
        yk = pos[k, 1]
        dx = pos[0, 0] - xk
        dy = pos[0, 1] - yk
        best_d2 = dx * dx + dy * dy
        best = 0
        for j in range(1, k):
            dx = pos[j, 0] - xk
            dy = pos[j, 1] - yk
            d2 = dx * dx + dy * dy
            if d2 < best_d2 or (d2 == best_d2 and node_idx[j] < node_idx[best]):
                best_d2 = d2
                best = j
        out[k] = best
    return out


def _subtree_sizes_scalar(parent):
    """Subtree node counts (incl. self) from parent pointers (-1 = root).

    Leaf peeling: accumulate a node into its parent once all of its own
    children are done, so one O(n) pass suffices for any acyclic parent
    array.
    """
    n = parent.shape[0]
    sizes = np.ones(n, dtype=np.int64)
    pending = np.zeros(n, dtype=np.int64)
    for i in range(n):
        if parent[i] != -1:
            pending[parent[i]] += 1
    stack = np.empty(n, dtype=np.int64)
    top = 0
    for i in range(n):
        if pending[i] == 0:
            stack[top] = i
            top += 1
    while top > 0:
        top -= 1
        i = stack[top]
        p = parent[i]
        if p != -1:
            sizes[p] += sizes[i]
            pending[p] -= 1
            if pending[p] == 0:
                stack[top] = p
                top += 1
    return sizes


subtree_sizes_numpy = _subtree_sizes_scalar

if _HAVE_NUMBA:
    parent_ranks_numba = njit(cache=True)(_parent_ranks_scalar)
    subtree_sizes_numba = njit(cache=True)(_subtree_sizes_scalar)
else:
    parent_ranks_numba = None
    subtree_sizes_numba = None

if _USE_NUMBA:
    parent_ranks = parent_ranks_numba
    subtree_sizes = subtree_sizes_numba
else:
    parent_ranks = parent_ranks_numpy
    subtree_sizes = subtree_sizes_numpy


def backend() -> str:
    """Name of the active kernel backend: 'numba' or 'numpy'."""
    return "numba" if _USE_NUMBA else "numpy"
