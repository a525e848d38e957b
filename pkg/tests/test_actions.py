from __future__ import annotations

import random

import pytest
from hypothesis import given, settings, strategies as st

import oracles as O
from action_corpus import corpus as action_corpus, on_pairs
from edgeprim.actions import (Action, ActionError, block_systems_bruteforce, coset_action,
                              coset_action_quadratic, extend_by_orbits, induced_group,
                              is_2_transitive, is_faithful, is_primitive, is_transitive,
                              minimal_block, orbits)
from edgeprim.catalog.manifest import DATA_DIR
from edgeprim.config import BoundExceeded
from edgeprim.groups import (GroupError, PermGroup, alternating_group, cyclic_group,
                             dihedral_group, read_generators, symmetric_group)
from edgeprim.perm import parse_permutation


def proper_systems(act):
    n = act.domain_size
    return [s for s in block_systems_bruteforce(act) if 1 < len(s) < n]


def natural(G):
    return Action(G, list(G.gens))


def on_degree(degree, *cycles):
    G = PermGroup([parse_permutation(c, degree) for c in cycles], degree)
    return natural(G)


S4 = symmetric_group(4)


def s4_on_partitions():
    parts = [frozenset({frozenset({0, 1}), frozenset({2, 3})}),
             frozenset({frozenset({0, 2}), frozenset({1, 3})}),
             frozenset({frozenset({0, 3}), frozenset({1, 2})})]
    idx = {p: i for i, p in enumerate(parts)}
    imgs = [tuple(idx[frozenset(frozenset(g[x] for x in b) for b in p)] for p in parts)
            for g in S4.gens]
    return Action(S4, imgs)


def test_induced_group():
    c3 = natural(cyclic_group(3))
    assert induced_group(c3).order() == 3
    trivial = Action(S4, [tuple(range(1))] * len(S4.gens))
    assert induced_group(trivial).order() == 1
    assert induced_group(natural(S4)).order() == 24


def test_is_faithful():
    assert is_faithful(natural(S4))
    part = s4_on_partitions()
    assert not is_faithful(part)
    assert induced_group(part).order() == 6
    assert is_faithful(natural(cyclic_group(7)))


def test_transitivity():
    assert not is_transitive(on_degree(3, "(1 2)"))
    assert orbits(on_degree(3, "(1 2)")) == [[0, 1], [2]]
    assert is_transitive(natural(cyclic_group(5)))
    assert is_transitive(Action(S4, on_pairs(4)))


def test_is_2_transitive():
    assert is_2_transitive(natural(S4))
    assert not is_2_transitive(natural(dihedral_group(4)))
    fano = natural(read_generators(DATA_DIR / "S7-PSL27.h.gen"))
    assert fano.group.order() == 168
    assert is_2_transitive(fano)


def test_minimal_block():
    assert sorted(minimal_block(natural(cyclic_group(4)), 0, 2)) == [0, 2]
    assert sorted(minimal_block(natural(S4), 0, 1)) == [0, 1, 2, 3]
    assert sorted(minimal_block(natural(dihedral_group(6)), 0, 3)) == [0, 3]
    with pytest.raises(ActionError):
        minimal_block(on_degree(3, "(1 2)"), 0, 1)


def test_is_primitive():
    assert not is_primitive(natural(cyclic_group(6)))
    assert is_primitive(natural(alternating_group(5)))
    assert not is_primitive(Action(S4, on_pairs(4)))
    assert is_primitive(Action(symmetric_group(5), on_pairs(5)))
    assert not is_primitive(on_degree(3, "(1 2)"))
    assert is_primitive(natural(cyclic_group(7)))


def test_block_systems_bruteforce():
    systems = proper_systems(natural(cyclic_group(6)))
    sizes = sorted(len(s[0]) for s in systems)
    assert sizes == [2, 3]
    assert proper_systems(natural(S4)) == []
    assert len(block_systems_bruteforce(natural(S4))) == 2


def test_coset_action_examples():
    S3 = S4.point_stabilizer(3)
    act = coset_action(S4, S3)
    assert act.domain_size == 4 and is_2_transitive(act)
    D8 = S4.setwise_stabilizer_pair(0, 1).join(PermGroup([(2, 3, 0, 1)], 4))
    assert D8.order() == 8
    act = coset_action(S4, D8)
    assert act.domain_size == 3 and act.group.order() == 6
    H = read_generators(DATA_DIR / "S7-PSL27.h.gen")
    K = read_generators(DATA_DIR / "S7-PSL27.k.gen")
    L = H.intersection(K)
    assert L.order() == 21
    act = coset_action(H, L)
    assert act.domain_size == 8 and is_2_transitive(act)


def test_coset_action_bound():
    with pytest.raises(BoundExceeded):
        coset_action(symmetric_group(7), PermGroup([], 7), bound=100)


def test_coset_action_rejects_non_subgroup():
    with pytest.raises(GroupError):
        coset_action(alternating_group(4), PermGroup([(1, 0, 2, 3)], 4))


def test_extend_by_orbits_restrict_round_trip():
    G = symmetric_group(5)

    def act(s, g):
        return frozenset(g[x] for x in s)

    ext = extend_by_orbits(G, [frozenset({0, 1})], act)
    assert ext.degree == 5 and len(ext.objects) == 10
    stab = ext.pointwise_stabilizer([frozenset({0, 1})])
    assert stab.order() == 12
    assert ext.induced_on(ext.objects).order() == 120


@given(st.integers(0, 10**6))
@settings(max_examples=40, deadline=None)
def test_coset_action_matches_quadratic_route(seed):
    rng = random.Random(seed)
    G = [symmetric_group(5), alternating_group(6), dihedral_group(9)][seed % 3]
    sub = PermGroup([G.random_element(rng) for _ in range(rng.randint(1, 2))], G.degree)
    if G.index(sub) > 200:
        return
    a = coset_action(G, sub)
    b = coset_action_quadratic(G, sub)
    assert a.domain_size == b.domain_size == G.index(sub)
    assert a.group.order() == b.group.order()
    assert sorted(len(o) for o in a.group.orbits()) == sorted(len(o) for o in b.group.orbits())


@given(st.integers(0, 10**6))
@settings(max_examples=40, deadline=None)
def test_images_respect_source_relations(seed):
    rng = random.Random(seed)
    G = [symmetric_group(5), alternating_group(6), dihedral_group(9)][seed % 3]
    sub = PermGroup([G.random_element(rng)], G.degree)
    if G.index(sub) > 400:
        return
    act = coset_action(G, sub)
    assert G.order() % act.group.order() == 0
    # a word that is trivial in the source acts trivially on cosets
    word = [rng.randrange(len(G.gens)) for _ in range(rng.randint(1, 8))]
    src, dom = act.image_of_word(word)
    x_src, x_dom = src, dom
    while x_src != tuple(range(G.degree)):
        x_src = tuple(src[i] for i in x_src)
        x_dom = tuple(dom[i] for i in x_dom)
    assert x_dom == tuple(range(act.domain_size))


def test_primitivity_on_sample_of_corpus():
    acts = action_corpus(minimum=120, seed=3)[:120]
    for _, act in acts:
        want = O.is_primitive(act.images, act.domain_size)
        assert is_primitive(act) == want
        if act.domain_size <= 8:
            brute = proper_systems(act)
            assert (not brute) == want


def test_brute_force_blocks_agree_with_oracle_on_small_degrees():
    for n in range(2, 8):
        for gens in (list(cyclic_group(n).gens), list(dihedral_group(n).gens) if n > 2 else []):
            if not gens:
                continue
            act = Action(PermGroup(gens, n), gens)
            assert (not proper_systems(act)) == O.is_primitive(gens, n)
