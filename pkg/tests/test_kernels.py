import numpy as np
import pytest

from hugheslab import kernels
from hugheslab.catalog import builtin_group
from hugheslab.group import ElementTable
from hugheslab.perm import compose

from oracles import closure, mul, order_by_powering

NAMES = ["S4", "D20", "gamma0", "He5", "Q8xC3"]


def fresh_table(name):
    G = builtin_group(name)
    return ElementTable(G, G.members())


@pytest.mark.parametrize("name", NAMES)
def test_cayley_table_matches_compose(name, backend):
    tab = fresh_table(name)
    mt = tab.mul
    rng = np.random.default_rng(0)
    for i, j in rng.integers(0, tab.size, size=(200, 2)):
        assert tab.perms[mt[i, j]] == compose(tab.perms[i], tab.perms[j])


@pytest.mark.parametrize("name", NAMES)
def test_backends_agree(name):
    results = {}
    for b in kernels.available_backends():
        prev = kernels.set_backend(b)
        try:
            tab = fresh_table(name)
            pw = tab.power_map(3)
            idx = np.arange(0, tab.size, 3)
            results[b] = (
                tab.mul.copy(),
                tab.orders.copy(),
                kernels.closure_mask(tab.mul, [1, 2]),
                kernels.commutator_mask(tab.mul, tab.inv, idx, idx),
                kernels.pair_power_defects(tab.mul, tab.inv, pw),
            )
        finally:
            kernels.set_backend(prev)
    ref = results["numpy"]
    for other in results.values():
        for a, b in zip(ref, other):
            assert np.array_equal(a, b)


@pytest.mark.parametrize("name", NAMES)
def test_orders_match_powering(name, backend):
    tab = fresh_table(name)
    assert [order_by_powering(p.images) for p in tab.perms] == tab.orders.tolist()


def test_closure_matches_oracle(backend):
    tab = fresh_table("S4")
    for seeds in ([1], [3, 7], [5, 11, 17], []):
        mask = kernels.closure_mask(tab.mul, seeds)
        expected = closure([tab.perms[s].images for s in seeds], 4)
        assert {tab.perms[i].images for i in np.flatnonzero(mask)} == expected


def test_commutators_match_oracle(backend):
    tab = fresh_table("S4")
    idx = np.arange(tab.size)
    got = {tab.perms[i].images for i in np.flatnonzero(kernels.commutator_mask(tab.mul, tab.inv, idx, idx))}
    P = [p.images for p in tab.perms]
    inv = {p: next(q for q in P if mul(p, q) == tuple(range(4))) for p in P}
    expected = {mul(mul(inv[a], inv[b]), mul(a, b)) for a in P for b in P}
    assert got == expected


def test_row_lookup_rejects_non_members():
    tab = fresh_table("D20")
    idx = tab.row_index
    assert idx.lookup(tab.rows[::-1]).tolist() == list(range(tab.size))[::-1]
    outsider = np.array([[1, 0, *range(2, 10)]], dtype=np.int32)
    assert idx.lookup(outsider).tolist() == [-1]


def test_set_backend_validation():
    with pytest.raises(ValueError):
        kernels.set_backend("fortran")


def test_env_flag_selects_numpy(monkeypatch):
    import importlib

    monkeypatch.setenv("HUGHESLAB_DISABLE_NUMBA", "1")
    assert kernels._env_disables_numba()
    monkeypatch.setenv("HUGHESLAB_DISABLE_NUMBA", "0")
    assert not kernels._env_disables_numba()
    del importlib
