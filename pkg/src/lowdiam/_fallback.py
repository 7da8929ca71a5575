"""Pure-Python (numpy-vectorised) versions of the compiled kernels."""
from __future__ import annotations

from collections import deque

import numpy as np

_CHUNK = 1 << 20


def _better(num, den, mask, best):
    if best is None:
        return True
    b_num, b_den, b_mask = best
    lhs, rhs = num * b_den, b_num * den
    return lhs < rhs or (lhs == rhs and mask < b_mask)


def _chunk_min(values, sizes, masks):
    i = int(np.argmin(values / sizes))
    num, den = int(values[i]), int(sizes[i])
    ties = values * den == num * sizes
    return num, den, int(masks[ties].min())


def subset_expansion(nbr, n):
    """Same contract as ``lowdiam._kernels.subset_expansion``."""
    if n < 2 or n > 62:
        raise ValueError("subset_expansion needs 2 <= n <= 62")
    nbr = np.asarray(nbr, dtype=np.uint64)
    half = n // 2
    best_e = best_v = None
    for start in range(1, 1 << n, _CHUNK):
        masks = np.arange(start, min(start + _CHUNK, 1 << n), dtype=np.uint64)
        sizes = np.bitwise_count(masks).astype(np.int64)
        keep = sizes <= half
        masks, sizes = masks[keep], sizes[keep]
        if masks.size == 0:
            continue
        outside = ~masks
        cut = np.zeros(masks.size, dtype=np.int64)
        nb = np.zeros(masks.size, dtype=np.uint64)
        for v in range(n):
            bit = ((masks >> np.uint64(v)) & np.uint64(1)).astype(bool)
            cut[bit] += np.bitwise_count(nbr[v] & outside[bit]).astype(np.int64)
            nb[bit] |= nbr[v]
        bnd = np.bitwise_count(nb & outside).astype(np.int64)
        cand = _chunk_min(cut, sizes, masks)
        if _better(*cand, best_e):
            best_e = cand
        cand = _chunk_min(bnd, sizes, masks)
        if _better(*cand, best_v):
            best_v = cand
    return (*best_e, *best_v)


def bfs_eccentricities(indptr, indices, n):
    """Same contract as ``lowdiam._kernels.bfs_eccentricities``."""
    adj = [indices[indptr[u]:indptr[u + 1]].tolist() for u in range(n)]
    ecc = np.empty(n, dtype=np.int64)
    for src in range(n):
        dist = [-1] * n
        dist[src] = 0
        queue = deque([src])
        seen = 1
        far = 0
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if dist[w] < 0:
                    dist[w] = far = dist[u] + 1
                    seen += 1
                    queue.append(w)
        ecc[src] = far if seen == n else -1
    return ecc
