# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot loops in ``_pykernels``."""

import numpy as np
cimport numpy as cnp

cnp.import_array()


cdef inline Py_ssize_t _find(int[::1] parent, Py_ssize_t x) noexcept nogil:
    cdef Py_ssize_t root = x, nxt
    while parent[root] != root:
        root = parent[root]
    while parent[x] != root:
        nxt = parent[x]
        parent[x] = <int>root
        x = nxt
    return root


cdef inline Py_ssize_t _union(int[::1] parent, int[::1] size, Py_ssize_t a,
                              Py_ssize_t b, int[:, ::1] stack, Py_ssize_t *top) noexcept nogil:
    cdef Py_ssize_t t
    a = _find(parent, a)
    b = _find(parent, b)
    if a == b:
        return 0
    if size[a] < size[b] or (size[a] == size[b] and b < a):
        t = a
        a = b
        b = t
    parent[b] = <int>a
    size[a] += size[b]
    stack[top[0], 0] = <int>a
    stack[top[0], 1] = <int>b
    top[0] += 1
    return size[a]


cdef cnp.ndarray _labels(int[::1] parent, Py_ssize_t n):
    cdef cnp.ndarray[cnp.int32_t, ndim=1] out = np.empty(n, dtype=np.int32)
    cdef cnp.ndarray[cnp.int32_t, ndim=1] least = np.full(n, -1, dtype=np.int32)
    cdef Py_ssize_t x, r
    for x in range(n):
        r = _find(parent, x)
        if least[r] < 0:
            least[r] = <int>x
        out[x] = least[r]
    return out


def orbit_labels(gens, Py_ssize_t n):
    cdef int[:, ::1] g = np.ascontiguousarray(gens, dtype=np.int32).reshape(-1, n)
    cdef int[::1] parent = np.arange(n, dtype=np.int32)
    cdef int[::1] size = np.ones(n, dtype=np.int32)
    cdef int[:, ::1] stack = np.empty((max(n, 1), 2), dtype=np.int32)
    cdef Py_ssize_t top = 0, k, x
    with nogil:
        for k in range(g.shape[0]):
            for x in range(n):
                _union(parent, size, x, g[k, x], stack, &top)
                top = 0
    return _labels(parent, n)


def minimal_block(gens, Py_ssize_t n, Py_ssize_t p, Py_ssize_t q):
    cdef int[:, ::1] g = np.ascontiguousarray(gens, dtype=np.int32).reshape(-1, n)
    cdef int[::1] parent = np.arange(n, dtype=np.int32)
    cdef int[::1] size = np.ones(n, dtype=np.int32)
    cdef int[:, ::1] stack = np.empty((max(n, 1), 2), dtype=np.int32)
    cdef Py_ssize_t top = 0, k, a0, b0
    with nogil:
        _union(parent, size, p, q, stack, &top)
        while top > 0:
            top -= 1
            a0 = stack[top, 0]
            b0 = stack[top, 1]
            for k in range(g.shape[0]):
                _union(parent, size, g[k, a0], g[k, b0], stack, &top)
    return _labels(parent, n)


def block_size(gens, Py_ssize_t n, Py_ssize_t p, Py_ssize_t q):
    cdef int[:, ::1] g = np.ascontiguousarray(gens, dtype=np.int32).reshape(-1, n)
    cdef int[::1] parent = np.arange(n, dtype=np.int32)
    cdef int[::1] size = np.ones(n, dtype=np.int32)
    cdef int[:, ::1] stack = np.empty((max(n, 1), 2), dtype=np.int32)
    cdef Py_ssize_t top = 0, k, a0, b0, half = n // 2
    cdef Py_ssize_t result = -1
    with nogil:
        if _union(parent, size, p, q, stack, &top) > half:
            result = n
        while result < 0 and top > 0:
            top -= 1
            a0 = stack[top, 0]
            b0 = stack[top, 1]
            for k in range(g.shape[0]):
                if _union(parent, size, g[k, a0], g[k, b0], stack, &top) > half:
                    result = n
                    break
        if result < 0:
            result = size[_find(parent, p)]
    return result


def orbit_with_schreier(gens, Py_ssize_t n, Py_ssize_t root):
    cdef int[:, ::1] g = np.ascontiguousarray(gens, dtype=np.int32).reshape(-1, n)
    cdef cnp.ndarray[cnp.int32_t, ndim=1] pg = np.full(n, -1, dtype=np.int32)
    cdef cnp.ndarray[cnp.int32_t, ndim=1] pp = np.full(n, -1, dtype=np.int32)
    cdef cnp.ndarray[cnp.int32_t, ndim=1] orb = np.empty(n, dtype=np.int32)
    cdef cnp.ndarray[cnp.uint8_t, ndim=1] seen = np.zeros(n, dtype=np.uint8)
    cdef Py_ssize_t head = 0, tail = 1, k, x, y
    orb[0] = <int>root
    seen[root] = 1
    while head < tail:
        x = orb[head]
        head += 1
        for k in range(g.shape[0]):
            y = g[k, x]
            if not seen[y]:
                seen[y] = 1
                pg[y] = <int>k
                pp[y] = <int>x
                orb[tail] = <int>y
                tail += 1
    return orb[:tail].tolist(), pg.tolist(), pp.tolist()


def map_pairs(perm, a, b, keys, Py_ssize_t nv):
    cdef int[::1] pm = np.ascontiguousarray(perm, dtype=np.int32)
    cdef int[::1] av = np.ascontiguousarray(a, dtype=np.int32)
    cdef int[::1] bv = np.ascontiguousarray(b, dtype=np.int32)
    cdef long long[::1] kv = np.ascontiguousarray(keys, dtype=np.int64)
    cdef Py_ssize_t m = av.shape[0], i, lo, hi, mid
    cdef long long x, y, t, key
    cdef cnp.ndarray[cnp.int64_t, ndim=1] out = np.empty(m, dtype=np.int64)
    cdef Py_ssize_t bad = -1
    with nogil:
        for i in range(m):
            x = pm[av[i]]
            y = pm[bv[i]]
            if x > y:
                t = x
                x = y
                y = t
            key = x * nv + y
            lo = 0
            hi = kv.shape[0]
            while lo < hi:
                mid = (lo + hi) >> 1
                if kv[mid] < key:
                    lo = mid + 1
                else:
                    hi = mid
            if lo == kv.shape[0] or kv[lo] != key:
                bad = i
                break
            out[i] = lo
    if bad >= 0:
        raise KeyError(f"pair image of index {bad} is not in the edge set")
    return out
