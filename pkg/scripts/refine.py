"""Find a graph automorphism with prescribed images by individualization
and colour refinement (enough for very symmetric graphs of a few hundred
vertices)."""

from __future__ import annotations


def refine(adj, colours):
    """Coarsest equitable refinement; colour names are canonical, so two
    graphs refined in parallel stay comparable."""
    n = len(adj)
    while True:
        sig = [(colours[v], tuple(sorted(colours[u] for u in adj[v]))) for v in range(n)]
        names = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [names[s] for s in sig]
        if len(names) == len(set(colours)):
            return new
        colours = new


def _histogram(c):
    out = {}
    for x in c:
        out[x] = out.get(x, 0) + 1
    return sorted(out.items())


def automorphism(adj, fixed):
    """An automorphism mapping ``a -> b`` for each pair in ``fixed``, as an
    image tuple, or None."""
    n = len(adj)
    adjset = [set(x) for x in adj]

    def individualize(c, v):
        c = list(c)
        c[v] = max(c) + 1
        return c

    def search(c1, c2):
        c1, c2 = refine(adj, c1), refine(adj, c2)
        hist = _histogram(c1)
        if hist != _histogram(c2):
            return None
        # singleton cells are forced and must already preserve adjacency
        single = {c1.index(col): c2.index(col) for col, k in hist if k == 1}
        for a, b in single.items():
            for u in adj[a]:
                if u in single and single[u] not in adjset[b]:
                    return None
        if len(single) == n:
            return tuple(single[v] for v in range(n))
        cell = next(col for col, k in hist if k > 1)
        v = c1.index(cell)
        for w in (u for u in range(n) if c2[u] == cell):
            found = search(individualize(c1, v), individualize(c2, w))
            if found is not None:
                return found
        return None

    c1, c2 = [0] * n, [0] * n
    for a, b in fixed:
        c1, c2 = individualize(c1, a), individualize(c2, b)
    return search(c1, c2)
