"""Coset graphs ``Cos(G, H, K)`` and the invariants checked on them.

Vertices are the right cosets of ``H`` (vertex 0 is ``H``), labeled by
minimal-image representatives. The neighbourhood of ``H`` is the
``H``-orbit of ``Hx`` for a fixed ``x`` in ``K`` outside ``H``; the
neighbourhood of any other vertex is transported along the Schreier tree of
the coset enumeration, so the edge set is exactly the ``G``-orbit of the
base edge.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .actions import (Action, CosetTable, coset_table, extend_by_orbits,
                      is_primitive)
from .config import DEFAULT_LIMITS, BoundExceeded, Limits
from .groups import PermGroup, _inv, _mul
from .numtheory import factorize, is_prime


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class Shape:
    kind: str  # "complete", "complete_bipartite" or "other"
    n: int | None = None

    def __str__(self):
        return self.kind if self.n is None else f"{self.kind}({self.n})"

    @classmethod
    def parse(cls, text: str) -> Shape:
        text = text.strip()
        if "(" in text:
            kind, _, rest = text.partition("(")
            return cls(kind.strip(), int(rest.rstrip(")")))
        return cls(text)


@dataclass(eq=False)
class CosetGraph:
    group: PermGroup
    h_ref: PermGroup
    k_ref: PermGroup
    table: CosetTable
    x: tuple
    base_vertex: int
    w: int
    adjacency: list[list[int]]
    edge_a: np.ndarray
    edge_b: np.ndarray
    edge_keys: np.ndarray
    h_cap_k: PermGroup
    _vstab: dict = field(default_factory=dict, repr=False)

    @property
    def vertex_count(self) -> int:
        return len(self.adjacency)

    @property
    def edge_count(self) -> int:
        return len(self.edge_keys)

    @property
    def base_edge(self) -> tuple[int, int]:
        return (self.base_vertex, self.w)

    @property
    def vertex_action(self) -> Action:
        return Action(self.group, self.table.images, self.table.reps)

    def vertex_image(self, i: int, g) -> int:
        return self.table.act(i, g)

    def vertex_permutation(self, g) -> tuple[int, ...]:
        return self.table.permutation_of(g)

    def neighbours(self, i: int) -> list[int]:
        return self.adjacency[i]

    def has_edge(self, u: int, v: int) -> bool:
        a, b = min(u, v), max(u, v)
        key = a * self.vertex_count + b
        j = np.searchsorted(self.edge_keys, key)
        return j < len(self.edge_keys) and self.edge_keys[j] == key

    def vertex_stabilizer(self, i: int) -> PermGroup:
        """``G_{Hr} = r^-1 H r`` for the representative ``r`` of vertex i."""
        if i == 0:
            return self.h_ref
        got = self._vstab.get(i)
        if got is None:
            got = self.h_ref.conjugate(self.table.reps[i])
            self._vstab[i] = got
        return got


def build(G: PermGroup, H: PermGroup, K: PermGroup, limits: Limits = DEFAULT_LIMITS) -> CosetGraph:
    """Construct ``Cos(G, H, K)``; requires ``|K : H & K| = 2``."""
    if not G.is_subgroup(H):
        raise GraphError("H is not a subgroup of G")
    if not G.is_subgroup(K):
        raise GraphError("K is not a subgroup of G")
    nv = G.order() // H.order()
    if nv > limits.vertices:
        raise BoundExceeded("vertices", limits.vertices, nv)
    hc = H.chain
    # H & K is the stabilizer in K of the coset H
    ident = G.chain.identity
    ext = extend_by_orbits(K, [hc.canonical_coset_rep(ident)],
                           lambda c, g: hc.canonical_coset_rep(_mul(c, g)),
                           base_objects=[hc.canonical_coset_rep(ident)])
    if len(ext.objects) != 2:
        raise GraphError(f"|K : H & K| = {len(ext.objects)}, not 2")
    hk = ext.pointwise_stabilizer([ext.objects[0]])
    table = coset_table(G, H, bound=limits.vertices)
    x = next(g for g in K.chain.elements() if not hc.contains(g))
    w = table.locate(x)
    base_nbrs = [w]
    seen = {w}
    for j in base_nbrs:
        for h in H.gens:
            y = table.act(j, h)
            if y not in seen:
                seen.add(y)
                base_nbrs.append(y)
    d = len(base_nbrs)
    ne = nv * d // 2
    if ne > limits.edges:
        raise BoundExceeded("edges", limits.edges, ne)
    adjacency: list[list[int]] = [[] for _ in range(nv)]
    adjacency[0] = base_nbrs
    for i in range(1, nv):
        img = table.images[table.via[i]]
        adjacency[i] = [img[j] for j in adjacency[table.parent[i]]]
    for i in range(nv):
        adjacency[i].sort()
    a_list, b_list = [], []
    for i, nb in enumerate(adjacency):
        for j in nb:
            if j == i:
                raise AssertionError("loop in coset graph")
            if i < j:
                a_list.append(i)
                b_list.append(j)
    a = np.asarray(a_list, dtype=np.int64)
    b = np.asarray(b_list, dtype=np.int64)
    keys = a * nv + b
    order = np.argsort(keys, kind="stable")
    a, b, keys = a[order], b[order], keys[order]
    if 2 * len(keys) != sum(len(nb) for nb in adjacency):
        raise AssertionError("adjacency is not symmetric")
    return CosetGraph(G, H, K, table, x, 0, w, adjacency,
                      a.astype(np.int32), b.astype(np.int32), keys, hk)


# ---------------------------------------------------------------- basic invariants

def valency(g: CosetGraph) -> int:
    degs = {len(nb) for nb in g.adjacency}
    if len(degs) != 1:
        raise AssertionError(f"non-regular adjacency: degrees {sorted(degs)}")
    return degs.pop()


def components(g: CosetGraph) -> list[list[int]]:
    nv = g.vertex_count
    comp = [-1] * nv
    out = []
    for s in range(nv):
        if comp[s] >= 0:
            continue
        comp[s] = len(out)
        part = [s]
        for x in part:
            for y in g.adjacency[x]:
                if comp[y] < 0:
                    comp[y] = comp[s]
                    part.append(y)
        out.append(sorted(part))
    return out


def is_connected(g: CosetGraph) -> bool:
    seen = {g.base_vertex}
    queue = deque([g.base_vertex])
    while queue:
        x = queue.popleft()
        for y in g.adjacency[x]:
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return len(seen) == g.vertex_count


def generated_by_h_and_k(g: CosetGraph) -> bool:
    """Whether ``<H, K> = G``; equivalent to connectivity."""
    return g.h_ref.join(g.k_ref).order() == g.group.order()


def bipartition(g: CosetGraph) -> tuple[list[int], list[int]] | None:
    colour = [-1] * g.vertex_count
    for s in range(g.vertex_count):
        if colour[s] >= 0:
            continue
        colour[s] = 0
        queue = [s]
        for x in queue:
            for y in g.adjacency[x]:
                if colour[y] < 0:
                    colour[y] = 1 - colour[x]
                    queue.append(y)
                elif colour[y] == colour[x]:
                    return None
    return ([i for i, c in enumerate(colour) if c == 0],
            [i for i, c in enumerate(colour) if c == 1])


def is_bipartite(g: CosetGraph) -> bool:
    return bipartition(g) is not None


def classify_shape(g: CosetGraph) -> Shape:
    d = valency(g)
    nv = g.vertex_count
    if d == nv - 1:
        return Shape("complete", nv)
    parts = bipartition(g)
    if parts is not None and len(parts[0]) == len(parts[1]) == d:
        return Shape("complete_bipartite", d)
    return Shape("other")


# ---------------------------------------------------------------- stabilizers

def _neighbour_ext(g: CosetGraph, C: PermGroup, seeds, base_objects=()):
    return extend_by_orbits(C, seeds, g.vertex_image, base_objects=base_objects)


def arc_stabilizer(g: CosetGraph, u: int, v: int) -> PermGroup:
    Gu = g.vertex_stabilizer(u)
    ext = _neighbour_ext(g, Gu, [v], base_objects=[v])
    return ext.pointwise_stabilizer([v])


def edge_stabilizer(g: CosetGraph, edge: tuple[int, int] | None = None) -> PermGroup:
    """Setwise stabilizer of an edge ``{u, v}``: the arc stabilizer plus an
    element swapping ``u`` and ``v`` found inside ``G_u``."""
    u, v = edge if edge is not None else g.base_edge
    if not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    Gu = g.vertex_stabilizer(u)
    ext = _neighbour_ext(g, Gu, [v], base_objects=[v])
    Guv = ext.pointwise_stabilizer([v])
    reps = g.table.reps
    t = _mul(_inv(reps[u]), reps[v])
    wpt = g.vertex_image(u, _inv(t))
    if wpt not in ext.position:
        return Guv
    n = ext.degree
    trans = ext.group.orbit_transversal(n + ext.position[v])
    h = trans[n + ext.position[wpt]].images[:n]
    swap = _mul(h, t)
    if g.vertex_image(u, swap) != v or g.vertex_image(v, swap) != u:
        raise AssertionError("swap element does not interchange the edge ends")
    return PermGroup(Guv.gens + [swap], g.group.degree, order=2 * Guv.order())


def edge_action(g: CosetGraph) -> Action:
    """Action of ``G`` on edges; edge ``i`` is the i-th smallest pair."""
    imgs = [tuple(int(t) for t in kernels.map_pairs(
        np.asarray(p, dtype=np.int32), g.edge_a, g.edge_b, g.edge_keys, g.vertex_count))
        for p in g.table.images]
    return Action(g.group, imgs)


def edge_index(g: CosetGraph, u: int, v: int) -> int:
    a, b = min(u, v), max(u, v)
    key = a * g.vertex_count + b
    j = int(np.searchsorted(g.edge_keys, key))
    if j >= g.edge_count or g.edge_keys[j] != key:
        raise GraphError(f"({u}, {v}) is not an edge")
    return j


def is_edge_primitive(g: CosetGraph, edge_stab: PermGroup | None = None) -> bool:
    """Primitivity of ``G`` on edges, with the stabilizer of the first edge
    supplied from an independent computation."""
    act = edge_action(g)
    e0 = (int(g.edge_a[0]), int(g.edge_b[0]))
    S = edge_stabilizer(g, e0) if edge_stab is None else edge_stab
    stab = [tuple(int(t) for t in kernels.map_pairs(
        np.asarray(g.vertex_permutation(s), dtype=np.int32),
        g.edge_a, g.edge_b, g.edge_keys, g.vertex_count)) for s in S.gens]
    return is_primitive(act, stabilizer_gens=stab)


# ---------------------------------------------------------------- arc transitivity

def max_arc_transitivity(g: CosetGraph, s_max: int = 5) -> int:
    """Largest ``s <= s_max`` such that ``G`` is s-arc-transitive.

    Walks a fixed path ``v_0 v_1 ...`` (each step to the least admissible
    neighbour) and checks that the pointwise stabilizer of ``v_0..v_k`` is
    transitive on the neighbours of ``v_k`` other than ``v_{k-1}``.
    """
    d = valency(g)
    if d < 3:
        raise GraphError("valency below 3")
    if not is_connected(g):
        raise GraphError("graph is not connected")
    path = [g.base_vertex]
    S = g.vertex_stabilizer(g.base_vertex)
    for k in range(s_max):
        vk = path[-1]
        cand = [y for y in g.adjacency[vk] if k == 0 or y != path[-2]]
        nxt = cand[0]
        ext = _neighbour_ext(g, S, [nxt], base_objects=[nxt])
        if len(ext.objects) != len(cand):
            return k
        S = ext.pointwise_stabilizer([nxt])
        path.append(nxt)
    return s_max


# ---------------------------------------------------------------- local structure

@dataclass
class LocalStructure:
    d: int
    vertex_stab_order: int
    local_group_order: int
    local_point_stab_order: int
    kernel_order: int
    arc_stab_order: int
    arc_kernel_order: int
    edge_stab_order: int
    edge_over_arc_index: int
    local_2transitive: bool
    soluble_edge_stab: bool
    soluble_local_point_stab: bool
    soluble_vertex_stab: bool
    soluble_local_group: bool
    p_core_reports: dict = field(default_factory=dict)

    @property
    def first_isomorphism_holds(self) -> bool:
        return self.vertex_stab_order == self.kernel_order * self.local_group_order


def _core_order(X: PermGroup, r: int, bound: int):
    if X.order() > bound:
        return None
    P = X.p_core(r, bound)
    return P


def local_structure(g: CosetGraph, edge: tuple[int, int] | None = None,
                    bound: int | None = None, edge_stab: PermGroup | None = None) -> LocalStructure:
    """Local action data at the edge ``(v, u)``: vertex ``v`` and its
    neighbour ``u``."""
    bound = DEFAULT_LIMITS.enumeration if bound is None else bound
    v, u = edge if edge is not None else g.base_edge
    Gv = g.vertex_stabilizer(v)
    nbrs = g.adjacency[v]
    ext = _neighbour_ext(g, Gv, nbrs, base_objects=[u])
    if len(ext.objects) != len(nbrs):
        raise AssertionError("neighbourhood is not invariant under the vertex stabilizer")
    d = len(nbrs)
    L = ext.induced_on(nbrs)
    Lu = L.point_stabilizer(nbrs.index(u))
    kernel = ext.pointwise_stabilizer(nbrs)
    Guv = ext.pointwise_stabilizer([u])
    E = edge_stab if edge_stab is not None else edge_stabilizer(g, (v, u))
    both = sorted(set(nbrs) | set(g.adjacency[u]))
    ext2 = _neighbour_ext(g, Guv, both)
    if len(ext2.objects) != len(both):
        raise AssertionError("neighbourhoods are not invariant under the arc stabilizer")
    arc_kernel = ext2.pointwise_stabilizer(both)
    two_trans = len(L.orbit(0)) == d and len(L.point_stabilizer(0).orbit(1 if d > 1 else 0)) == d - 1
    reports = {}
    for r in factorize(d):
        rep = {}
        for name, X in (("kernel", kernel), ("arc", Guv), ("vertex", Gv)):
            P = _core_order(X, r, bound)
            if P is None:
                rep[name] = None
            else:
                rep[name] = P.order()
                if name == "vertex":
                    rep["vertex_elementary_abelian"] = _is_elementary_abelian(P, r)
        reports[r] = rep
    return LocalStructure(
        d=d,
        vertex_stab_order=Gv.order(),
        local_group_order=L.order(),
        local_point_stab_order=Lu.order(),
        kernel_order=kernel.order(),
        arc_stab_order=Guv.order(),
        arc_kernel_order=arc_kernel.order(),
        edge_stab_order=E.order(),
        edge_over_arc_index=E.order() // Guv.order(),
        local_2transitive=two_trans,
        soluble_edge_stab=E.is_soluble(),
        soluble_local_point_stab=Lu.is_soluble(),
        soluble_vertex_stab=Gv.is_soluble(),
        soluble_local_group=L.is_soluble(),
        p_core_reports=reports,
    )


def _is_elementary_abelian(P: PermGroup, r: int) -> bool:
    if not P.is_abelian():
        return False
    ident = tuple(range(P.degree))
    for s in P.gens:
        x = ident
        for _ in range(r):
            x = _mul(x, s)
        if x != ident:
            return False
    return True


def prime_cores_hold(ls: LocalStructure) -> bool | None:
    """For every prime ``r`` dividing ``d``: the r-cores of the kernel and of
    the arc stabilizer are trivial, and the r-core of the vertex stabilizer
    is trivial or elementary abelian of order ``d``. None if skipped."""
    for r, rep in ls.p_core_reports.items():
        if rep.get("kernel") is None or rep.get("arc") is None or rep.get("vertex") is None:
            return None
        if rep["kernel"] != 1 or rep["arc"] != 1:
            return False
        if rep["vertex"] != 1 and not (rep["vertex"] == ls.d and rep["vertex_elementary_abelian"]):
            return False
    return True


@dataclass
class FittingReport:
    p: int
    fit_arc: int
    op_arc: int
    fit_edge: int
    op_edge: int

    @property
    def holds(self) -> bool:
        return self.fit_arc == self.op_arc and self.fit_edge <= 2 * self.op_edge


def fitting_check(g: CosetGraph, p: int, edge=None, bound: int | None = None,
                  local: LocalStructure | None = None,
                  edge_stab: PermGroup | None = None) -> FittingReport:
    """Fitting subgroups of the arc and edge stabilizers against their
    p-cores. Requires a trivial arc kernel and ``d - 1`` a power of ``p``."""
    bound = DEFAULT_LIMITS.enumeration if bound is None else bound
    if not is_prime(p):
        raise GraphError(f"{p} is not prime")
    ls = local if local is not None else local_structure(g, edge, bound)
    if ls.arc_kernel_order != 1:
        raise GraphError("arc kernel is not trivial")
    m = ls.d - 1
    while m % p == 0:
        m //= p
    if m != 1 or ls.d == 1:
        raise GraphError(f"d - 1 = {ls.d - 1} is not a power of {p}")
    v, u = edge if edge is not None else g.base_edge
    E = edge_stab if edge_stab is not None else edge_stabilizer(g, (v, u))
    A = arc_stabilizer(g, v, u)
    for X in (A, E):
        if X.order() > bound:
            raise BoundExceeded("enumeration", bound, X.order())
    return FittingReport(p, A.fitting_subgroup(bound).order(), A.p_core(p, bound).order(),
                         E.fitting_subgroup(bound).order(), E.p_core(p, bound).order())


# ---------------------------------------------------------------- core-freeness

def is_core_free(g: CosetGraph, max_steps: int = 64) -> bool:
    """Whether ``H`` contains no nontrivial normal subgroup of ``G``.

    The core is the kernel of ``H`` on the vertices. Stabilize vertices moved
    by the current subgroup one at a time until it is trivial (core-free) or
    fixes every vertex (it is then the core).
    """
    C = g.h_ref
    nv = g.vertex_count
    for _ in range(max_steps):
        if C.order() == 1:
            return True
        moved = next((i for i in range(nv)
                      if any(g.vertex_image(i, s) != i for s in C.gens)), None)
        if moved is None:
            return False
        ext = _neighbour_ext(g, C, [moved], base_objects=[moved])
        C = ext.pointwise_stabilizer([moved])
    raise AssertionError("core-freeness search did not terminate")


# ---------------------------------------------------------------- export

def format_adjacency(g: CosetGraph) -> str:
    return "".join(f"{i + 1}: {' '.join(str(j + 1) for j in nb)}\n"
                   for i, nb in enumerate(g.adjacency))


def format_edge_list(g: CosetGraph) -> str:
    return "".join(f"{a + 1} {b + 1}\n" for a, b in zip(g.edge_a.tolist(), g.edge_b.tolist()))
