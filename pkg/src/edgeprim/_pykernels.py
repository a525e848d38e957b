"""Pure-Python versions of the hot loops.

Same signatures and results as the compiled ``_kernels`` module. ``gens`` is
a sequence of image sequences over ``range(n)``.
"""

from __future__ import annotations


def _find(parent, x):
    root = x
    while parent[root] != root:
        root = parent[root]
    while parent[x] != root:
        parent[x], x = root, parent[x]
    return root


def _canonical_labels(parent, n):
    # relabel every class by its least point
    least = {}
    out = [0] * n
    for x in range(n):
        r = _find(parent, x)
        if r not in least:
            least[r] = x
        out[x] = least[r]
    return out


def orbit_labels(gens, n):
    """Label each point by the least point of its orbit."""
    parent = list(range(n))
    size = [1] * n
    for g in gens:
        for x in range(n):
            a = _find(parent, x)
            b = _find(parent, g[x])
            if a != b:
                if size[a] < size[b] or (size[a] == size[b] and b < a):
                    a, b = b, a
                parent[b] = a
                size[a] += size[b]
    return _canonical_labels(parent, n)


def minimal_block(gens, n, p, q):
    """Atkinson's algorithm: the finest block system in which ``p`` and ``q``
    share a block. Returns class labels (least point of each class)."""
    parent = list(range(n))
    size = [1] * n
    pending = []

    def union(a, b):
        a = _find(parent, a)
        b = _find(parent, b)
        if a == b:
            return
        if size[a] < size[b] or (size[a] == size[b] and b < a):
            a, b = b, a
        parent[b] = a
        size[a] += size[b]
        pending.append((a, b))

    union(p, q)
    while pending:
        a0, b0 = pending.pop()
        for g in gens:
            union(g[a0], g[b0])
    return _canonical_labels(parent, n)


def block_size(gens, n, p, q):
    """Size of the minimal block containing ``p`` and ``q``.

    Stops as soon as the class of ``p`` exceeds ``n // 2``; block sizes divide
    ``n``, so the answer is then ``n``.
    """
    parent = list(range(n))
    size = [1] * n
    pending = []
    half = n // 2

    def union(a, b):
        a = _find(parent, a)
        b = _find(parent, b)
        if a == b:
            return 0
        if size[a] < size[b] or (size[a] == size[b] and b < a):
            a, b = b, a
        parent[b] = a
        size[a] += size[b]
        pending.append((a, b))
        return size[a]

    if union(p, q) > half:
        return n
    while pending:
        a0, b0 = pending.pop()
        for g in gens:
            if union(g[a0], g[b0]) > half:
                return n
    return size[_find(parent, p)]


def orbit_with_schreier(gens, n, root):
    """BFS orbit of ``root``. Returns ``(orbit, parent_gen, parent_point)``
    where ``parent_gen[x] = -1`` for points outside the orbit and for root."""
    parent_gen = [-1] * n
    parent_pt = [-1] * n
    seen = [False] * n
    seen[root] = True
    orbit = [root]
    i = 0
    while i < len(orbit):
        x = orbit[i]
        i += 1
        for k, g in enumerate(gens):
            y = g[x]
            if not seen[y]:
                seen[y] = True
                parent_gen[y] = k
                parent_pt[y] = x
                orbit.append(y)
    return orbit, parent_gen, parent_pt


def map_pairs(perm, a, b, keys, nv):
    """Image indices of unordered pairs ``(a[i], b[i])`` under a point
    permutation; ``keys`` are the sorted pair keys ``min * nv + max``."""
    import bisect

    out = [0] * len(a)
    for i in range(len(a)):
        x = perm[a[i]]
        y = perm[b[i]]
        if x > y:
            x, y = y, x
        k = x * nv + y
        j = bisect.bisect_left(keys, k)
        if j == len(keys) or keys[j] != k:
            raise KeyError(f"pair ({x}, {y}) is not in the edge set")
        out[i] = j
    return out
