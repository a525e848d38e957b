"""Random triples ``(G, H, K)`` inside ``S_8`` for the coset-graph suite.

``G`` is one of a handful of permutation groups of degree 8, ``H`` is the
stabilizer of an object (a point, a subset, a matching, ...) and ``K`` the
setwise stabilizer of a pair ``{alpha, beta}`` swapped by some element of
``G``. Only triples with ``|K : H & K| = 2``, valency at least 3, ``H``
core-free and ``<H, K> = G`` are kept.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from edgeprim.actions import extend_by_orbits
from edgeprim.fields import GF, pgl2_generators, psl2_generators
from edgeprim.groups import PermGroup

N = 8


def _cyc(*cycles):
    img = list(range(N))
    for c in cycles:
        for a, b in zip(c, c[1:] + c[:1]):
            img[a] = b
    return tuple(img)


def _affine_gf8(with_frobenius):
    F = GF(8)
    gens = [tuple(F.add(x, 1) for x in range(8)),
            tuple(F.mul(x, F.primitive) for x in range(8))]
    if with_frobenius:
        gens.append(tuple(F.mul(x, x) for x in range(8)))
    return gens


def _agl32():
    # F_2^3 as 0..7 by binary digits; translations and two generators of GL(3,2)
    def lin(m):
        out = []
        for x in range(8):
            bits = [(x >> i) & 1 for i in range(3)]
            y = sum(((sum(m[i][j] * bits[j] for j in range(3)) % 2) << i) for i in range(3))
            out.append(y)
        return tuple(out)
    return [tuple(x ^ 1 for x in range(8)),
            lin([[0, 0, 1], [1, 0, 0], [0, 1, 0]]),
            lin([[1, 1, 0], [0, 1, 0], [0, 0, 1]])]


GROUPS = {
    "S7": [_cyc((0, 1)), _cyc(tuple(range(7)))],
    "S6": [_cyc((0, 1)), _cyc(tuple(range(6)))],
    "A7": [_cyc((0, 1, 2)), _cyc(tuple(range(7)))],
    "PGL2(7)": [tuple(g.images) for g in pgl2_generators(7)],
    "PSL2(7)": [tuple(g.images) for g in psl2_generators(7)],
    "AGL(1,8)": _affine_gf8(False),
    "AGammaL(1,8)": _affine_gf8(True),
    "AGL(3,2)": _agl32(),
    "S4wrS2": [_cyc((0, 1)), _cyc((0, 1, 2, 3)), _cyc((0, 4), (1, 5), (2, 6), (3, 7))],
    "S2wrS4": [_cyc((0, 1)), _cyc((0, 2), (1, 3)), _cyc((0, 2, 4, 6), (1, 3, 5, 7))],
    "S3wrS2": [_cyc((0, 1)), _cyc((0, 1, 2)), _cyc((0, 3), (1, 4), (2, 5))],
    "S5xS3": [_cyc((0, 1)), _cyc((0, 1, 2, 3, 4)), _cyc((5, 6)), _cyc((5, 6, 7))],
    "D16": [_cyc(tuple(range(8))), _cyc((1, 7), (2, 6), (3, 5))],
}


def _points(x, g):
    return g[x]


def _subset(s, g):
    return frozenset(g[x] for x in s)


def _matching(m, g):
    return frozenset(frozenset(g[x] for x in pair) for pair in m)


def _ordered(t, g):
    return tuple(g[x] for x in t)


def _point_and_set(t, g):
    return (g[t[0]], frozenset(g[x] for x in t[1]))


OBJECTS = {
    "point": (0, _points),
    "pair": (frozenset({0, 1}), _subset),
    "triple": (frozenset({0, 1, 2}), _subset),
    "quad": (frozenset({0, 1, 2, 3}), _subset),
    "matching": (frozenset(frozenset(p) for p in ((0, 1), (2, 3), (4, 5), (6, 7))), _matching),
    "flag": ((0, 1), _ordered),
    "halves": (frozenset({frozenset({0, 1, 2, 3}), frozenset({4, 5, 6, 7})}), _matching),
    "two-pairs": (frozenset({frozenset({0, 1}), frozenset({2, 3})}), _matching),
    "point-pair": ((0, frozenset({1, 2})), _point_and_set),
}


@dataclass
class Triple:
    name: str
    G: PermGroup
    H: PermGroup
    K: PermGroup
    alpha: object
    beta: object
    act: object
    valency: int


@lru_cache(maxsize=None)
def group(name):
    return PermGroup(GROUPS[name], N)


def triples_for(gname, oname):
    """Every admissible triple for one group and one kind of object (one
    per self-paired suborbit)."""
    G = group(gname)
    alpha, act = OBJECTS[oname]
    ext = extend_by_orbits(G, [alpha], act, base_objects=[alpha])
    n = ext.degree
    pos = ext.position
    objs = ext.objects
    # faithful on the orbit of alpha
    if ext.induced_on(objs).order() != G.order():
        return []
    a = n + pos[alpha]
    Hx = ext.group.point_stabilizer(a)
    H = ext.restrict(Hx)
    out = []
    seen = set()
    for obj in objs:
        b = n + pos[obj]
        if b == a or b in seen:
            continue
        suborbit = Hx.orbit(b)
        seen.update(suborbit)
        if len(suborbit) < 3:
            continue
        Kx = ext.group.setwise_stabilizer_pair(a, b)
        if Kx.order() != 2 * Hx.pointwise_stabilizer([b]).order():
            continue
        K = ext.restrict(Kx)
        if H.join(K).order() != G.order():
            continue
        out.append(Triple(f"{gname}/{oname}/{obj!r}", G, H, K, alpha, obj, act, len(suborbit)))
    return out


def corpus(minimum=200, seed=20240601):
    """Deterministic list of at least ``minimum`` admissible triples."""
    rng = random.Random(seed)
    pool = []
    for gname in GROUPS:
        for oname in OBJECTS:
            pool.extend(triples_for(gname, oname))
    rng.shuffle(pool)
    extra = 0
    base = list(GROUPS)
    while len(pool) < minimum:
        # subgroups generated by two random elements of a listed group
        G = group(rng.choice(base))
        gens = [tuple(G.random_element(rng).images) for _ in range(2)]
        name = f"sub{extra}"
        GROUPS[name] = gens
        extra += 1
        for oname in OBJECTS:
            pool.extend(triples_for(name, oname))
    return pool

