"""Group actions on finite labeled domains.

An :class:`Action` records one domain permutation per generator of its
source group. Besides the usual transitivity and block tests this module
provides :func:`extend_by_orbits`, which lets a group act on its natural
points and on a small invariant set of foreign objects at once; stabilizers
of those objects are then ordinary point stabilizers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Hashable, Sequence

from . import kernels
from .config import DEFAULT_LIMITS, BoundExceeded
from .groups import GroupError, PermGroup, _inv, _mul
from .perm import Permutation


class ActionError(ValueError):
    pass


@dataclass(eq=False)
class Action:
    source: PermGroup
    images: list[tuple[int, ...]]
    labels: Sequence | None = None
    known_stabilizer: list[tuple[int, ...]] | None = field(default=None, repr=False)

    def __post_init__(self):
        if len(self.images) != len(self.source.gens):
            raise ActionError("need one image per source generator")

    @property
    def domain_size(self) -> int:
        if self.images:
            return len(self.images[0])
        return len(self.labels) if self.labels is not None else 1

    @property
    def generator_images(self) -> list[Permutation]:
        return [Permutation(g, check=False) for g in self.images]

    @cached_property
    def group(self) -> PermGroup:
        return PermGroup(self.images, self.domain_size)

    def image_of_word(self, word: Sequence[int]):
        """Images of a word in the generators, in the source and on the
        domain (for consistency checks)."""
        src = tuple(range(self.source.degree))
        dom = tuple(range(self.domain_size))
        for k in word:
            src = _mul(src, self.source.gens[k])
            dom = _mul(dom, self.images[k])
        return src, dom


def induced_group(act: Action) -> PermGroup:
    return act.group


def is_faithful(act: Action) -> bool:
    return act.group.order() == act.source.order()


def orbits(act: Action) -> list[list[int]]:
    labels = kernels.orbit_labels(act.images, act.domain_size)
    out: dict[int, list[int]] = {}
    for x, lab in enumerate(labels):
        out.setdefault(lab, []).append(x)
    return list(out.values())


def is_transitive(act: Action) -> bool:
    n = act.domain_size
    if n == 1:
        return True
    orb, _, _ = kernels.orbit_with_schreier(act.images, n, 0)
    return len(orb) == n


def is_2_transitive(act: Action) -> bool:
    n = act.domain_size
    if n < 2:
        raise ActionError("2-transitivity needs at least two points")
    if not is_transitive(act):
        return False
    stab = act.group.point_stabilizer(0)
    return len(stab.orbit(1)) == n - 1


def minimal_block(act: Action, p: int, q: int) -> list[int]:
    """Smallest block of imprimitivity containing ``p`` and ``q``."""
    if p == q:
        raise ActionError("need two distinct points")
    if not is_transitive(act):
        raise ActionError("action is not transitive")
    labels = kernels.minimal_block(act.images, act.domain_size, p, q)
    lab = labels[p]
    return [x for x, y in enumerate(labels) if y == lab]


def _stabilizer_gens(act: Action) -> list:
    if act.known_stabilizer is not None:
        return act.known_stabilizer
    return act.group.point_stabilizer(0).gens


def is_primitive(act: Action, stabilizer_gens: Sequence | None = None) -> bool:
    """Primitivity via minimal blocks of the pairs ``{0, q}``, one ``q`` per
    orbit of the stabilizer of 0.

    ``stabilizer_gens`` may supply domain permutations generating the full
    stabilizer of point 0; without them it is computed from the action.
    """
    n = act.domain_size
    if not is_transitive(act):
        return False
    if n <= 2:
        return True
    stab = list(stabilizer_gens) if stabilizer_gens is not None else _stabilizer_gens(act)
    for g in stab:
        if g[0] != 0:
            raise ActionError("stabilizer generator moves point 0")
    labels = kernels.orbit_labels(stab, n)
    seen = set()
    for q in range(1, n):
        lab = labels[q]
        if lab in seen:
            continue
        seen.add(lab)
        if kernels.block_size(act.images, n, 0, q) < n:
            return False
    return True


def block_systems_bruteforce(act: Action) -> list[list[frozenset]]:
    """All block systems (for tiny domains), by checking every set
    partition that contains the trivial ones. Test oracle."""
    n = act.domain_size
    out = []

    def partitions(items):
        if not items:
            yield []
            return
        first, rest = items[0], items[1:]
        for part in partitions(rest):
            yield [[first]] + part
            for i in range(len(part)):
                yield part[:i] + [[first] + part[i]] + part[i + 1:]

    for part in partitions(list(range(n))):
        blocks = [frozenset(b) for b in part]
        where = {x: b for b in blocks for x in b}
        if len({len(b) for b in blocks}) != 1:
            continue
        if all(frozenset(g[x] for x in b) == where[g[next(iter(b))]]
               for g in act.images for b in blocks):
            out.append(blocks)
    return out


# ---------------------------------------------------------------- coset actions

def coset_key(G: PermGroup, x) -> tuple:
    """Images of ``G``'s base points: identifies an element of ``G``."""
    return tuple(x[b] for b in G.chain.base)


@dataclass
class CosetTable:
    """Right cosets ``K x`` of ``K`` in ``G`` found by breadth-first search
    from ``K``; ``parent`` and ``via`` form a Schreier tree."""

    G: PermGroup
    K: PermGroup
    reps: list[tuple]
    index: dict[tuple, int]
    images: list[tuple[int, ...]]
    parent: list[int]
    via: list[int]

    def label(self, x) -> tuple:
        return coset_key(self.G, self.K.chain.canonical_coset_rep(x))

    def locate(self, x) -> int:
        """Index of the coset ``K x``."""
        return self.index[self.label(x)]

    def act(self, i: int, g) -> int:
        """Index of the coset ``(K r_i) g``."""
        return self.locate(_mul(self.reps[i], g))

    def permutation_of(self, g) -> tuple[int, ...]:
        return tuple(self.locate(_mul(r, g)) for r in self.reps)


def coset_table(G: PermGroup, K: PermGroup, bound: int | None = None) -> CosetTable:
    bound = DEFAULT_LIMITS.coset_action if bound is None else bound
    if not G.is_subgroup(K):
        raise GroupError("subgroup is not contained in the group")
    idx = G.order() // K.order()
    if idx > bound:
        raise BoundExceeded("coset_action", bound, idx)
    kc = K.chain
    base = G.chain.base
    gens = G.gens
    ident = G.chain.identity
    reps = [kc.canonical_coset_rep(ident)]
    index = {tuple(reps[0][b] for b in base): 0}
    parent, via = [-1], [-1]
    imgs = [[0] * idx for _ in gens]
    i = 0
    while i < len(reps):
        r = reps[i]
        for k, s in enumerate(gens):
            y = kc.canonical_coset_rep(_mul(r, s))
            key = tuple(y[b] for b in base)
            j = index.get(key)
            if j is None:
                j = len(reps)
                if j >= idx:
                    raise AssertionError("more cosets than the index allows")
                index[key] = j
                reps.append(y)
                parent.append(i)
                via.append(k)
            imgs[k][i] = j
        i += 1
    if len(reps) != idx:
        raise AssertionError("coset enumeration incomplete")
    return CosetTable(G, K, reps, index, [tuple(m) for m in imgs], parent, via)


def coset_action(G: PermGroup, K: PermGroup, bound: int | None = None) -> Action:
    """Action of ``G`` on the right cosets of ``K`` by right multiplication;
    point 0 is ``K`` itself."""
    tab = coset_table(G, K, bound)
    reps = [Permutation(r, check=False) for r in tab.reps]
    # the coset K is fixed by exactly the elements of K
    stab = [tab.permutation_of(k) for k in K.gens]
    return Action(G, tab.images, reps, known_stabilizer=stab)


def coset_action_quadratic(G: PermGroup, K: PermGroup, limit: int = 10**4) -> Action:
    """Same action, with cosets told apart by pairwise membership tests.
    Used below ``limit`` cosets as an independent cross-check."""
    if not G.is_subgroup(K):
        raise GroupError("subgroup is not contained in the group")
    idx = G.order() // K.order()
    if idx > limit:
        raise BoundExceeded("quadratic coset action", limit, idx)
    kc = K.chain
    reps = [G.chain.identity]
    gens = G.gens

    def find(y):
        yi = _inv(y)
        for j, r in enumerate(reps):
            if kc.contains(_mul(r, yi)):
                return j
        return None

    imgs = [[0] * idx for _ in gens]
    i = 0
    while i < len(reps):
        for k, s in enumerate(gens):
            y = _mul(reps[i], s)
            j = find(y)
            if j is None:
                j = len(reps)
                reps.append(y)
            imgs[k][i] = j
        i += 1
    return Action(G, [tuple(m) for m in imgs], [Permutation(r, check=False) for r in reps])


# ---------------------------------------------------------------- combined representations

@dataclass
class Extended:
    """``C`` acting on its natural points followed by the points of some
    invariant set of objects; object ``objects[i]`` is point ``n + i``."""

    group: PermGroup
    degree: int
    objects: list
    position: dict

    def restrict(self, H: PermGroup) -> PermGroup:
        n = self.degree
        return PermGroup([g[:n] for g in H.gens], n)

    def pointwise_stabilizer(self, objs) -> PermGroup:
        pts = [self.degree + self.position[o] for o in objs]
        S = self.group.pointwise_stabilizer(pts)
        return self.restrict(S)

    def object_orbit(self, obj) -> list:
        pt = self.degree + self.position[obj]
        return [self.objects[p - self.degree] for p in self.group.orbit(pt)]

    def induced_on(self, objs) -> PermGroup:
        """Group induced on the invariant subset ``objs`` (a union of
        orbits), relabeled ``0..len(objs)-1`` in the given order."""
        loc = {self.degree + self.position[o]: i for i, o in enumerate(objs)}
        gens = []
        for g in self.group.gens:
            img = [0] * len(objs)
            for p, i in loc.items():
                q = g[p]
                if q not in loc:
                    raise ActionError("object set is not invariant")
                img[i] = loc[q]
            gens.append(tuple(img))
        return PermGroup(gens, len(objs))


def extend_by_orbits(C: PermGroup, seeds: Sequence[Hashable],
                     act: Callable[[Hashable, tuple], Hashable],
                     limit: int = 10**6, base_objects: Sequence[Hashable] = ()) -> Extended:
    """Close ``seeds`` under ``C`` (``act(obj, g)`` gives the image of an
    object under a natural-point permutation) and return the combined
    permutation group. Its order equals ``|C|``; the chain is built with
    ``base_objects`` first so their stabilizers come for free."""
    n = C.degree
    objects = list(dict.fromkeys(seeds))
    position = {o: i for i, o in enumerate(objects)}
    gens = C.gens
    tables = [[] for _ in gens]
    i = 0
    while i < len(objects):
        o = objects[i]
        for k, g in enumerate(gens):
            y = act(o, g)
            j = position.get(y)
            if j is None:
                j = len(objects)
                if j >= limit:
                    raise BoundExceeded("object orbit", limit, None)
                position[y] = j
                objects.append(y)
            tables[k].append(j)
        i += 1
    combined = [tuple(g) + tuple(n + j for j in tab) for g, tab in zip(gens, tables)]
    base = tuple(n + position[o] for o in base_objects)
    order = C.order()
    group = PermGroup(combined, n + len(objects), order=order, base=base)
    if group.order() != order:
        raise AssertionError("combined representation changed the group order")
    return Extended(group, n, objects, position)


def stabilizer_of_object(C: PermGroup, obj, act) -> tuple[PermGroup, list]:
    """Stabilizer in ``C`` of one object, and the object's orbit."""
    ext = extend_by_orbits(C, [obj], act, base_objects=[obj])
    return ext.pointwise_stabilizer([obj]), ext.objects
