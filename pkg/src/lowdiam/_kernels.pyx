# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops: exhaustive subset expansion and all-pairs BFS.

Both functions mirror :mod:`lowdiam._fallback` exactly, including the
tie-breaking rule, so either backend yields identical results.
"""
import numpy as np

from libc.stdint cimport int64_t, uint64_t


cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


def subset_expansion(const uint64_t[::1] nbr, int n):
    """Minimise cut/|S| and boundary/|S| over all S with 1 <= |S| <= n // 2.

    ``nbr[v]`` is the out-neighbour bitmask of ``v``. Returns
    ``(cut, size, mask, boundary, size, mask)``; ties go to the smallest mask.
    """
    if n < 2 or n > 62:
        raise ValueError("subset_expansion needs 2 <= n <= 62")
    cdef uint64_t limit = (<uint64_t>1) << n
    cdef uint64_t mask, m, nb, c, r
    cdef int64_t s, cut, bnd, v
    cdef int64_t e_num = -1, e_den = 1, v_num = -1, v_den = 1
    cdef uint64_t e_mask = 0, v_mask = 0
    with nogil:
        for s in range(1, n // 2 + 1):
            mask = (((<uint64_t>1) << s) - 1)
            while mask < limit:
                cut = 0
                nb = 0
                m = mask
                while m:
                    v = __builtin_ctzll(m)
                    cut += __builtin_popcountll(nbr[v] & ~mask)
                    nb |= nbr[v]
                    m &= m - 1
                bnd = __builtin_popcountll(nb & ~mask)
                if (e_num < 0 or cut * e_den < e_num * s
                        or (cut * e_den == e_num * s and mask < e_mask)):
                    e_num = cut
                    e_den = s
                    e_mask = mask
                if (v_num < 0 or bnd * v_den < v_num * s
                        or (bnd * v_den == v_num * s and mask < v_mask)):
                    v_num = bnd
                    v_den = s
                    v_mask = mask
                # Gosper's hack: next mask with the same popcount.
                c = mask & (~mask + 1)
                r = mask + c
                mask = (((r ^ mask) >> 2) // c) | r
    return e_num, e_den, int(e_mask), v_num, v_den, int(v_mask)


def bfs_eccentricities(const int64_t[::1] indptr, const int64_t[::1] indices, int n):
    """Out-eccentricity of every vertex; -1 where some vertex is unreachable."""
    ecc_arr = np.empty(n, dtype=np.int64)
    dist_arr = np.empty(n, dtype=np.int64)
    queue_arr = np.empty(n, dtype=np.int64)
    cdef int64_t[::1] ecc = ecc_arr
    cdef int64_t[::1] dist = dist_arr
    cdef int64_t[::1] queue = queue_arr
    cdef int64_t src, head, tail, u, w, j, far
    with nogil:
        for src in range(n):
            for j in range(n):
                dist[j] = -1
            dist[src] = 0
            queue[0] = src
            head = 0
            tail = 1
            far = 0
            while head < tail:
                u = queue[head]
                head += 1
                for j in range(indptr[u], indptr[u + 1]):
                    w = indices[j]
                    if dist[w] < 0:
                        dist[w] = dist[u] + 1
                        far = dist[w]
                        queue[tail] = w
                        tail += 1
            ecc[src] = far if tail == n else -1
    return ecc_arr
