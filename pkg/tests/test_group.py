import random

import pytest

from hugheslab.catalog import builtin_group, builtin_names
from hugheslab.constructions import gamma_tower, symmetric
from hugheslab.group import EnumerationCapExceeded, PermGroup, members
from hugheslab.perm import Permutation, element_order, identity

from oracles import closure

SMALL = [n for n in builtin_names() if n not in ("He7:3",)]


def test_s3_order():
    G = PermGroup([Permutation([1, 0, 2]), Permutation([1, 2, 0])])
    assert G.order == 6


def test_identity_generator_gives_trivial_group():
    G = PermGroup([identity(4)])
    assert G.order == 1
    assert members(G) == [identity(4)]


def test_no_generators_needs_degree():
    with pytest.raises(ValueError):
        PermGroup([])
    assert PermGroup([], degree=3).order == 1


def test_degree_mismatch():
    with pytest.raises(ValueError):
        PermGroup([Permutation([1, 0]), Permutation([1, 2, 0])])


def test_gamma_orders_match_closure():
    g0, g = gamma_tower()
    assert g0.order == 351 == len(closure([p.images for p in g0.generators], 27))
    assert g.order == 1053
    assert len(members(g)) == 1053


def test_members_canonical_and_unique():
    S = symmetric(3)
    ms = members(S)
    assert len(ms) == 6
    assert ms == sorted(ms)
    assert ms[0] == identity(3)


def test_cap_refusal_is_explicit():
    with pytest.raises(EnumerationCapExceeded):
        members(symmetric(5), cap=100)


def test_cap_from_environment(monkeypatch):
    monkeypatch.setenv("HUGHESLAB_CAP", "10")
    with pytest.raises(EnumerationCapExceeded):
        members(symmetric(4))
    monkeypatch.setenv("HUGHESLAB_CAP", "nope")
    with pytest.raises(ValueError):
        members(symmetric(3))


@pytest.mark.parametrize("name", SMALL)
def test_chain_order_equals_enumeration(name):
    G = builtin_group(name)
    assert G.order == len(G.members())


@pytest.mark.parametrize("name", ["A4", "D16", "gamma0", "He5", "AGL1_9", "Q8xC3"])
def test_membership_agrees_with_enumeration(name):
    G = builtin_group(name)
    elems = set(G.members())
    assert all(g in G for g in elems)
    rng = random.Random(1234)
    rejected = 0
    for _ in range(10_000):
        if rejected == 100:
            break
        imgs = list(range(G.degree))
        rng.shuffle(imgs)
        g = Permutation(imgs)
        assert (g in G) == (g in elems)
        rejected += g not in elems
    assert rejected == 100


@pytest.mark.parametrize("name", ["S5", "gamma", "D24", "M5"])
def test_lagrange_on_element_orders(name):
    G = builtin_group(name)
    assert all(G.order % element_order(g) == 0 for g in G.members())


def test_chain_is_deterministic():
    a = builtin_group("AGL1_16").chain
    b = builtin_group("AGL1_16").chain
    assert a.base == b.base
    assert [s.images for s in a.strong_generators] == [s.images for s in b.strong_generators]


def test_base_points_increase_from_first_moved_point():
    G = symmetric(4)
    assert G.chain.base[0] == 0
