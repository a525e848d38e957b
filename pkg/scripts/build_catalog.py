"""Derive the shipped catalog generator files.

Each entry gets three files ``<id>.g.gen``, ``<id>.h.gen``, ``<id>.k.gen``
in ``src/edgeprim/catalog/data``. The comment header of each file records
how it was obtained. Nothing here is trusted by the verifier: it rebuilds
every order and property from the permutations alone.

    python3 scripts/build_catalog.py            # every entry
    python3 scripts/build_catalog.py S7-PSL27   # selected entries
"""

from __future__ import annotations

import argparse
import functools
import itertools
import sys
import time
from pathlib import Path

from edgeprim.actions import extend_by_orbits
from edgeprim.fields import GF, pgl2_generators, projective_map, psl2_generators
from edgeprim.groups import PermGroup, _inv, _mul, write_generators
from edgeprim.perm import parse_permutation

sys.path.insert(0, str(Path(__file__).parent))
import geometry  # noqa: E402

DATA = Path(__file__).resolve().parent.parent / "src" / "edgeprim" / "catalog" / "data"
BUILDERS = {}


def entry(name):
    def deco(fn):
        BUILDERS[name] = fn
        return fn
    return deco


# ------------------------------------------------------------------ helpers

def affine(n, a, b):
    return tuple((a * x + b) % n for x in range(n))


def greedy(elems, degree):
    """A short generating set for the group spanned by ``elems``."""
    chosen = PermGroup([], degree)
    gens = []
    for g in elems:
        if not chosen.contains(g):
            gens.append(g)
            chosen = PermGroup(gens, degree)
    return chosen


def power_set(c):
    out = {tuple(range(len(c)))}
    x = c
    while x not in out:
        out.add(x)
        x = _mul(x, c)
    return out


def element_order(c):
    return len(power_set(c))


def cyclic_normalizer(G, c):
    cyc = power_set(c)
    keep = [g for g in G.chain.elements() if _mul(_mul(_inv(g), c), g) in cyc]
    return greedy(keep, G.degree)


def group_normalizer(G, H):
    keep = []
    for g in G.chain.elements():
        gi = _inv(g)
        if all(H.contains(_mul(_mul(gi, h), g)) for h in H.gens):
            keep.append(g)
    return greedy(keep, G.degree)


def first_element(G, pred):
    return next(g for g in G.chain.elements() if pred(g))


def overgroup(sub_gens, order, pool, degree):
    """First ``<sub, g>`` of the requested order, ``g`` drawn from ``pool``."""
    for g in pool:
        cand = PermGroup(list(sub_gens) + [g], degree)
        if cand.order() == order:
            return greedy(list(sub_gens) + [g], degree)
    raise AssertionError(f"no overgroup of order {order}")


def involutions(n):
    """All involutions of S_n, as image tuples."""
    def rec(rest):
        if not rest:
            yield []
            return
        a, tail = rest[0], rest[1:]
        for pairs in rec(tail):
            yield pairs
        for i, b in enumerate(tail):
            for pairs in rec(tail[:i] + tail[i + 1:]):
                yield [(a, b)] + pairs
    for pairs in rec(list(range(n))):
        if pairs:
            img = list(range(n))
            for a, b in pairs:
                img[a], img[b] = b, a
            yield tuple(img)


def preserves(g, blocks):
    return {frozenset(g[x] for x in b) for b in blocks} == blocks


def check(G, H, K, order_g, order_h, order_k):
    got = (G.order(), H.order(), K.order())
    if got != (order_g, order_h, order_k):
        raise AssertionError(f"orders {got}, wanted {(order_g, order_h, order_k)}")
    if not (G.is_subgroup(H) and G.is_subgroup(K)):
        raise AssertionError("H or K not inside G")


def save(name, G, H, K, recipe_g, recipe_h, recipe_k):
    DATA.mkdir(parents=True, exist_ok=True)
    for suffix, grp, recipe in (("g", G, recipe_g), ("h", H, recipe_h), ("k", K, recipe_k)):
        lines = [f"{name}: {suffix.upper()}"] + recipe + [f"order {grp.order()}"]
        write_generators(DATA / f"{name}.{suffix}.gen", grp, lines)


def symmetric(n):
    return PermGroup([tuple(range(1, n)) + (0,), (1, 0) + tuple(range(2, n))], n)


# ------------------------------------------------------------------ symmetric groups

@entry("S7-PSL27")
def s7():
    G = symmetric(7)
    K = PermGroup([affine(7, 1, 1), affine(7, 3, 0)], 7)
    lines = {frozenset({x % 7, (x + 1) % 7, (x + 3) % 7}) for x in range(7)}
    frob = [affine(7, 1, 1), affine(7, 2, 0)]
    t = next(s for s in involutions(7) if preserves(s, lines))
    H = greedy(frob + [t], 7)
    check(G, H, K, 5040, 168, 42)
    save("S7-PSL27", G, H, K,
         ["S_7 on 7 points: a 7-cycle and a transposition"],
         ["automorphisms of the Fano plane with lines {x, x+1, x+3} mod 7:",
          "x -> x+1, x -> 2x and the first involution preserving the lines"],
         ["AGL(1,7): x -> x+1 and x -> 3x"])


@entry("S11-PSL211")
def s11():
    G = symmetric(11)
    K = PermGroup([affine(11, 1, 1), affine(11, 2, 0)], 11)
    base = {1, 3, 4, 5, 9}
    blocks = {frozenset((x + s) % 11 for x in base) for s in range(11)}
    frob = [affine(11, 1, 1), affine(11, 3, 0)]
    t = next(s for s in involutions(11) if preserves(s, blocks))
    H = greedy(frob + [t], 11)
    check(G, H, K, 39916800, 660, 110)
    save("S11-PSL211", G, H, K,
         ["S_11 on 11 points: an 11-cycle and a transposition"],
         ["automorphisms of the biplane with blocks {1,3,4,5,9} + s mod 11:",
          "x -> x+1, x -> 3x and the first involution preserving the blocks"],
         ["AGL(1,11): x -> x+1 and x -> 2x"])


# ------------------------------------------------------------------ Mathieu groups

M11_GENS = ["(1,2,3,4,5,6,7,8,9,10,11)", "(3,7,11,8)(4,10,5,6)"]


def mathieu11():
    return PermGroup([parse_permutation(s, 11) for s in M11_GENS], 11)


@entry("M11-K11")
def m11():
    G = mathieu11()
    H = G.point_stabilizer(0)
    K = G.setwise_stabilizer_pair(0, 1)
    check(G, H, K, 7920, 720, 144)
    save("M11-K11", G, H, K,
         ["M_11 on 11 points: " + " and ".join(M11_GENS)],
         ["stabilizer of point 1 (M_10)"],
         ["setwise stabilizer of {1, 2} (3^2:Q_8.2)"])


def m10_projective():
    """M_10 on PG(1,9): PSL(2,9) and x -> l x^3."""
    F = GF(9)
    gens = psl2_generators(9) + [projective_map(F, F.primitive, 0, 0, 1, frob=1)]
    return PermGroup(gens, 10)


@entry("M10-K10")
def m10():
    G = m10_projective()
    H = G.point_stabilizer(0)
    K = G.setwise_stabilizer_pair(0, 9)
    check(G, H, K, 720, 72, 16)
    save("M10-K10", G, H, K,
         ["M_10 on the projective line over GF(9) (point 10 is infinity):",
          "x -> x+1, x -> l^2 x, x -> -1/x and x -> l x^3, l primitive"],
         ["stabilizer of the point 0 (3^2:Q_8)"],
         ["setwise stabilizer of {0, infinity} (Z_8:Z_2)"])


# ------------------------------------------------------------------ projective lines

def a5_over_d10(G, S, c):
    """``N_G(<c>)`` for ``c`` of order 5 or 10 and an A_5 of ``S`` (a
    subgroup of ``G`` containing ``c``) over one of the D_10 inside that
    normalizer. Returns (A_5, normalizer)."""
    N = cyclic_normalizer(G, c)
    five = c if element_order(c) == 5 else _mul(c, c)
    inv5 = [j for j in N.chain.elements()
            if element_order(j) == 2 and _mul(_mul(j, five), j) == _inv(five) and S.contains(j)]
    for j in inv5:
        try:
            return overgroup([five, j], 60, S.chain.elements(), G.degree), N
        except AssertionError:
            continue
    raise AssertionError("no A_5 over D_10")


@entry("PSL2(19)-D20")
def psl2_19():
    G = PermGroup(psl2_generators(19), 20)
    c = first_element(G, lambda g: element_order(g) == 10)
    H, K = a5_over_d10(G, G, c)
    check(G, H, K, 3420, 60, 20)
    save("PSL2(19)-D20", G, H, K,
         ["PSL(2,19) on the projective line (point 20 is infinity):",
          "x -> x+1, x -> l^2 x, x -> -1/x"],
         ["A_5 = PSL(2,5): first overgroup of order 60 of a D_10 inside K,",
          "found by sweeping the group's elements"],
         ["D_20: normalizer of the first cyclic subgroup of order 10",
          "(the non-split torus)"])


@entry("PGL2(11)-D20")
def pgl2_11():
    G = PermGroup(pgl2_generators(11), 12)
    S = PermGroup(psl2_generators(11), 12)
    K = G.setwise_stabilizer_pair(0, 11)
    c = first_element(K, lambda g: element_order(g) == 5)
    H, N = a5_over_d10(G, S, c)
    if N.order() != 20 or not all(K.contains(g) for g in N.gens):
        raise AssertionError("torus normalizer differs from the pair stabilizer")
    check(G, H, K, 1320, 60, 20)
    save("PGL2(11)-D20", G, H, K,
         ["PGL(2,11) on the projective line (point 12 is infinity):",
          "x -> x+1, x -> l x, x -> -1/x"],
         ["A_5 inside PSL(2,11) over a D_10 of K,",
          "found by sweeping the elements of PSL(2,11)"],
         ["D_20: setwise stabilizer of {0, infinity}"])


def a6_variant(name, G, title, recipe_g):
    S = PermGroup(psl2_generators(9), 10)
    c = first_element(S, lambda g: element_order(g) == 5)
    A5, K = a5_over_d10(G, S, c)
    H = group_normalizer(G, A5) if G.order() == 1440 else A5
    check(G, H, K, G.order(), 60 * G.order() // 720, 20 * G.order() // 720)
    save(name, G, H, K, [title] + recipe_g,
         ["A_5 over a D_10 inside PSL(2,9)" + (", then its normalizer (S_5)" if H is not A5 else "")],
         ["normalizer of the first cyclic subgroup of order 5 of PSL(2,9)"])


@entry("PGL29-K66")
def pgl2_9():
    a6_variant("PGL29-K66", PermGroup(pgl2_generators(9), 10),
               "PGL(2,9) on the projective line (point 10 is infinity):",
               ["x -> x+1, x -> l x, x -> -1/x"])


@entry("M10-K66")
def m10_k66():
    a6_variant("M10-K66", m10_projective(),
               "M_10 on the projective line (point 10 is infinity):",
               ["x -> x+1, x -> l^2 x, x -> -1/x, x -> l x^3"])


@entry("PGammaL29-K66")
def pgaml2_9():
    F = GF(9)
    G = PermGroup(pgl2_generators(9) + [projective_map(F, 1, 0, 0, 1, frob=1)], 10)
    a6_variant("PGammaL29-K66", G,
               "PGammaL(2,9) on the projective line (point 10 is infinity):",
               ["x -> x+1, x -> l x, x -> -1/x, x -> x^3"])


# ------------------------------------------------------------------ projective spaces

def point_hyperplane(p, n):
    A = geometry.PointHyperplaneAction(p, n)
    gens = [A.matrix_perm(M) for M in geometry.sl_generators(A.F, n)] + [A.polarity()]
    return A, PermGroup(gens, A.degree)


def projective_entry(name, p, n, antiflag, orders, graph_desc):
    A, G = point_hyperplane(p, n)
    hyp = next(j for j in range(A.m) if A.incident(0, j) != antiflag)
    H = G.point_stabilizer(0)
    K = G.setwise_stabilizer_pair(0, A.m + hyp)
    check(G, H, K, *orders)
    m = A.m
    save(name, G, H, K,
         [f"PSL({n},{p}) extended by a polarity, on the {m} points (1..{m}) and",
          f"{m} hyperplanes ({m + 1}..{2 * m}) of PG({n - 1},{p}); points are",
          "normalized vectors in lexicographic order, hyperplanes are named by",
          "their normal vectors. Generators: the transvection I+E_12, a monomial",
          "n-cycle of determinant 1 and the polarity v <-> v-perp"],
         ["stabilizer of point 1"],
         [f"setwise stabilizer of point 1 and hyperplane {m + hyp + 1} ({graph_desc})"])


@entry("PSL33.2-d9")
def psl33():
    projective_entry("PSL33.2-d9", 3, 3, True, (11232, 432, 96), "a non-incident pair")


@entry("PSL42.2")
def psl42():
    projective_entry("PSL42.2", 2, 4, False, (40320, 1344, 384), "an incident pair")


@entry("PSL43.2-d13")
def psl43():
    projective_entry("PSL43.2-d13", 3, 4, False, (12130560, 151632, 23328), "an incident pair")


def line_plane_entry(name, p, orders):
    A, G = point_hyperplane(p, 5)
    m = A.m
    # a line is its set of points; a plane is the set of hyperplanes through it
    line = frozenset(i for i, v in enumerate(A.pts) if v[2] == v[3] == v[4] == 0)
    plane = frozenset(m + j for j, a in enumerate(A.pts) if a[0] == a[1] == a[2] == 0)
    ext = extend_by_orbits(G, [line], lambda o, g: frozenset(g[i] for i in o),
                           base_objects=[line])
    H = ext.pointwise_stabilizer([line])
    u = ext.degree + ext.position[line]
    v = ext.degree + ext.position[plane]
    K = ext.restrict(ext.group.setwise_stabilizer_pair(u, v))
    check(G, H, K, *orders)
    save(name, G, H, K,
         [f"PSL(5,{p}) extended by a polarity, on the {m} points (1..{m}) and",
          f"{m} hyperplanes ({m + 1}..{2 * m}) of PG(4,{p}); same conventions and",
          "generators as the PG(3,q) entries"],
         ["stabilizer of the line <e1,e2>, computed in the action on points,",
          "hyperplanes and the orbit of that line"],
         ["setwise stabilizer of the line <e1,e2> and the plane <e1,e2,e3>"])


@entry("PSL52.2")
def psl52():
    line_plane_entry("PSL52.2", 2, (19998720, 64512, 18432))


@entry("PSL53.2")
def psl53():
    line_plane_entry("PSL53.2", 3, (475566474240, 196515072, 30233088))


# ------------------------------------------------------------------ Suzuki group

def suzuki8():
    """Sz(8) on the 65 points of its ovoid in PG(3,8).

    Generators (rows act on row vectors, s(x) = x^4 so s(s(x)) = x^2):
    T(a,b) = [[1,0,0,0],[a,1,0,0],[b,a^s,1,0],[a^(2+s)+ab+b^s, a^(1+s)+b, a, 1]]
    for (a,b) = (1,0), (0,1); diag(k^3, k^2, k^-2, k^-3) for k primitive; and
    the antidiagonal involution. The ovoid is the orbit of (1,0,0,0).
    """
    F = geometry.field(8)
    sig = lambda x: F.pow(x, 4)  # noqa: E731

    def T(a, b):
        return [[1, 0, 0, 0], [a, 1, 0, 0], [b, sig(a), 1, 0],
                [F.add(F.add(F.pow(a, 6), F.mul(a, b)), sig(b)), F.add(F.pow(a, 5), b), a, 1]]

    k = F.primitive
    D = [[F.pow(k, 3), 0, 0, 0], [0, F.pow(k, 2), 0, 0],
         [0, 0, F.inv(F.pow(k, 2)), 0], [0, 0, 0, F.inv(F.pow(k, 3))]]
    W = [[int(i + j == 3) for j in range(4)] for i in range(4)]
    mats = [T(1, 0), T(0, 1), D, W]
    orb = matrix_orbit(F, mats, (1, 0, 0, 0))
    return PermGroup(matrix_perms(F, mats, orb), len(orb))


def matrix_orbit(F, mats, start, cap=10**6):
    orb = [tuple(start)]
    seen = {orb[0]}
    for v in orb:
        for M in mats:
            w = geometry.normalize(F, geometry.vec_mat(F, v, M))
            if w not in seen:
                seen.add(w)
                orb.append(w)
                if len(orb) > cap:
                    raise AssertionError("orbit too long")
    return orb


def matrix_perms(F, mats, orb):
    idx = {v: i for i, v in enumerate(orb)}
    return [tuple(idx[geometry.normalize(F, geometry.vec_mat(F, v, M))] for v in orb)
            for M in mats]


@entry("Sz8")
def sz8():
    G = suzuki8()
    T = G.pointwise_stabilizer([0, 1])
    K = G.setwise_stabilizer_pair(0, 1)
    Q = G.point_stabilizer(0).p_core(2)
    centre = [z for z in Q.chain.elements() if all(_mul(z, s) == _mul(s, z) for s in Q.gens)]
    H = greedy(centre + T.gens, 65)
    check(G, H, K, 29120, 56, 14)
    save("Sz8", G, H, K,
         ["Sz(8) on the 65 points of its ovoid in PG(3,8), from the matrices",
          "T(1,0), T(0,1), diag(k^3,k^2,k^-2,k^-3) and the antidiagonal",
          "involution; T(a,b) has rows (1,0,0,0), (a,1,0,0), (b,a^s,1,0),",
          "(a^(2+s)+ab+b^s, a^(1+s)+b, a, 1) with s(x) = x^4. GF(8) uses",
          "x^3+x+1 and k = x. Point 1 is (1,0,0,0)."],
         ["centre of the Sylow 2-subgroup of the stabilizer of point 1 (order 8)",
          "extended by the stabilizer of points 1 and 2 (order 7): 2^3:7"],
         ["setwise stabilizer of {1, 2} (D_14)"])


# ------------------------------------------------------------------ Janko group J_1

J1_Z = [[-3, 2, -1, -1, -3, -1, -3], [-2, 1, 1, 3, 1, 3, 3], [-1, -1, -3, -1, -3, -3, 2],
        [-1, -3, -1, -3, -3, 2, -1], [-3, -1, -3, -3, 2, -1, -1], [1, 3, 3, -2, 1, 1, 3],
        [3, 3, -2, 1, 1, 3, 1]]


def power_to(x, n):
    """The power of ``x`` of order exactly ``n``, if there is one."""
    k = element_order(x)
    if k % n:
        return None
    y = tuple(range(len(x)))
    for _ in range(k // n):
        y = _mul(y, x)
    return y


@functools.lru_cache(maxsize=None)
def janko1():
    """J_1 on 266 points with standard generators a, b.

    Start from the 7x7 matrices over GF(11) (a 7-cycle and Janko's Z),
    act on the orbit of the all-ones vector (4180 points), find
    PSL(2,11) = <t, y> with t^2 = y^3 = (ty)^11 = 1 by seeded random search,
    act on its 266 cosets and pick a, b of orders 2, 3 with ab of order 7 and
    ababb of order 19.
    """
    import random

    F = geometry.PrimeField(11)
    Y = [[int(j == (i + 1) % 7) for j in range(7)] for i in range(7)]
    Z = [[x % 11 for x in row] for row in J1_Z]
    orb = matrix_orbit(F, [Y, Z], (1,) * 7)
    big = PermGroup(matrix_perms(F, [Y, Z], orb), len(orb))
    if big.order() != 175560:
        raise AssertionError("matrices do not generate J_1")
    rng = random.Random(1)

    def sample(n, count):
        out = []
        while len(out) < count:
            y = power_to(big.random_element(rng).images, n)
            if y is not None:
                out.append(y)
        return out

    L = next(S for t in sample(2, 20) for y in sample(3, 20)
             if element_order(_mul(t, y)) == 11
             for S in [PermGroup([t, y], big.degree)]
             if len(S.orbit(0)) <= 660 and S.order() == 660)
    from edgeprim.actions import coset_action
    G = PermGroup(coset_action(big, L).images, 266)
    while True:
        a, b = sample_in(G, rng, 2), sample_in(G, rng, 3)
        ab = _mul(a, b)
        if element_order(ab) == 7 and element_order(_mul(_mul(ab, ab), b)) == 19:
            std = PermGroup([a, b], 266)
            if std.order() == 175560:
                return std


def sample_in(G, rng, n):
    while True:
        y = power_to(G.random_element(rng).images, n)
        if y is not None:
            return y


J1_RECIPE = ["J_1 on the 266 cosets of PSL(2,11), standard generators a, b with",
             "a^2 = b^3 = (ab)^7 = (ababb)^19 = 1, derived from Janko's 7x7",
             "matrices over GF(11) via the 4180-point orbit of the all-ones vector"]


@entry("J1-d12")
def j1_d12():
    G = janko1()
    H = G.point_stabilizer(0)
    c = first_element(H, lambda g: element_order(g) == 11)
    K = cyclic_normalizer(G, c)
    check(G, H, K, 175560, 660, 110)
    save("J1-d12", G, H, K, J1_RECIPE,
         ["stabilizer of point 1 (PSL(2,11))"],
         ["normalizer of the first subgroup of order 11 of H (11:10)"])


@entry("J1-d8")
def j1_d8():
    G = janko1()
    c = first_element(G, lambda g: element_order(g) == 7)
    K = cyclic_normalizer(G, c)
    odd = [k for k in K.chain.elements() if element_order(k) in (3, 7)]
    frob = greedy(odd, 266)
    conj = [c]
    for _ in range(6):
        conj.append(_mul(conj[-1], c))
    for t in G.chain.elements():
        if element_order(t) != 2:
            continue
        ts = [_mul(_mul(_inv(x), t), x) for x in conj]
        E = PermGroup(ts, 266)
        if E.order() == 8 and E.is_abelian():
            H = greedy(list(ts) + frob.gens, 266)
            break
    check(G, H, K, 175560, 168, 42)
    save("J1-d8", G, H, K, J1_RECIPE,
         ["2^3:7:3: the first involution t whose conjugates under c span an",
          "elementary abelian 2^3, extended by the 7:3 inside K"],
         ["normalizer of the first subgroup <c> of order 7 (7:6)"])


# ------------------------------------------------------------------ Higman-Sims group

def mathieu24():
    """M_24 on PG(1,23) (point 23 is infinity): x+1, 2x, -1/x and
    x -> x^3/9 on squares, 9x^3 on non-squares (0 and infinity fixed)."""
    inf = 23
    squares = {x * x % 23 for x in range(1, 23)}
    inv = lambda x: pow(x, 21, 23)  # noqa: E731

    def mk(f):
        return tuple(x if x == inf else f(x) for x in range(24))

    def delta(x):
        if x == 0:
            return 0
        c = pow(x, 3, 23)
        return c * inv(9) % 23 if x in squares else 9 * c % 23

    gamma = tuple(0 if x == inf else inf if x == 0 else (-inv(x)) % 23 for x in range(24))
    return PermGroup([mk(lambda x: (x + 1) % 23), mk(lambda x: 2 * x % 23), gamma,
                      mk(delta)], 24)


def higman_sims_graph():
    """Vertices: a base vertex, the 22 points other than 0 and infinity, and
    the 77 hexads (octads through 0 and infinity, minus those two). Returns
    (adjacency lists, vertex labels, M_24)."""
    M24 = mathieu24()
    start = frozenset([23, 0, 1, 2, 3, 5, 14, 17])
    octads = {start}
    queue = [start]
    for o in queue:
        for g in M24.gens:
            im = frozenset(g[x] for x in o)
            if im not in octads:
                octads.add(im)
                queue.append(im)
    if len(octads) != 759:
        raise AssertionError("octad orbit has the wrong length")
    pts = list(range(1, 23))
    hexads = sorted(tuple(sorted(o - {0, 23})) for o in octads if {0, 23} <= o)
    labels = ["*"] + [("p", x) for x in pts] + [("h", h) for h in hexads]
    vid = {v: i for i, v in enumerate(labels)}
    adj = [set() for _ in labels]

    def join(a, b):
        adj[a].add(b)
        adj[b].add(a)

    for x in pts:
        join(0, vid[("p", x)])
    for h in hexads:
        for x in h:
            join(vid[("p", x)], vid[("h", h)])
    for h1, h2 in itertools.combinations(hexads, 2):
        if not set(h1) & set(h2):
            join(vid[("h", h1)], vid[("h", h2)])
    return [sorted(a) for a in adj], labels, M24


@entry("HS.2")
def hs2():
    from refine import automorphism

    adj, labels, M24 = higman_sims_graph()
    vid = {v: i for i, v in enumerate(labels)}

    def on_graph(g):
        img = [0] * len(labels)
        for v, i in vid.items():
            if v == "*":
                img[i] = 0
            elif v[0] == "p":
                img[i] = vid[("p", g[v[1]])]
            else:
                img[i] = vid[("h", tuple(sorted(g[x] for x in v[1])))]
        return tuple(img)

    stab = M24.setwise_stabilizer_pair(0, 23)
    swap = automorphism(adj, [(0, 1)])
    G = greedy([on_graph(g) for g in stab.gens] + [swap], 100)
    if G.order() != 88704000:
        raise AssertionError("graph automorphisms are not HS.2")
    # a heptad meets every hexad in 1 or 3 points; with the base vertex and
    # the 42 hexads meeting it once it spans a Hoffman-Singleton subgraph
    pts = range(1, 23)
    hexads = [set(v[1]) for v in labels if v != "*" and v[0] == "h"]
    heptad = next(set(c) for c in itertools.combinations(pts, 7)
                  if all(len(h & set(c)) in (1, 3) for h in hexads))
    half = frozenset([0] + [vid[("p", x)] for x in heptad]
                     + [vid[("h", tuple(sorted(h)))] for h in hexads if len(h & heptad) == 1])
    split = frozenset([half, frozenset(range(100)) - half])
    ext = extend_by_orbits(G, [split],
                           lambda o, g: frozenset(frozenset(g[x] for x in part) for part in o),
                           base_objects=[split])
    u = ext.degree
    Hc = ext.group.point_stabilizer(u)
    v = next(o for o in Hc.orbits() if len(o) == 126 and o[0] >= ext.degree)[0]
    H = ext.restrict(Hc)
    K = ext.restrict(ext.group.setwise_stabilizer_pair(u, v))
    check(G, H, K, 88704000, 252000, 4000)
    save("HS.2", G, H, K,
         ["HS.2 as the automorphism group of the Higman-Sims graph on 100",
          "vertices: 1 is the base vertex, 2..23 the points 1..22 of PG(1,23)",
          "other than 0 and infinity, 24..100 the 77 hexads in lexicographic",
          "order. M_24 = <x+1, 2x, -1/x, x^3/9 | 9x^3> on PG(1,23), hexads are",
          "octads through 0 and infinity minus those points (octad orbit of",
          "{inf,0,1,2,3,5,14,17}). Generators: the setwise stabilizer of",
          "{0, inf} acting on the graph plus one automorphism moving the base",
          "vertex, found by individualization and refinement"],
         ["stabilizer of a split of the vertices into two Hoffman-Singleton",
          "subgraphs; one half is the base vertex, the first heptad (7 points",
          "meeting every hexad in 1 or 3 points) and the 42 hexads meeting it",
          "once. U_3(5):2"],
         ["setwise stabilizer of that split and the first split in the orbit of",
          "length 126 of H on splits ([5^3]:[2^5] by order)"])


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("names", nargs="*", help="entries to build (default: all)")
    args = ap.parse_args(argv)
    names = args.names or list(BUILDERS)
    for name in names:
        t = time.perf_counter()
        BUILDERS[name]()
        print(f"{name}: {time.perf_counter() - t:.1f}s")


if __name__ == "__main__":
    main()
