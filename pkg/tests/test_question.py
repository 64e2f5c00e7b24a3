import pytest
from hypothesis import given, strategies as st

from hugheslab.question import (
    CITATIONS,
    hunt,
    hunt_summary,
    minimal_kernel_exponent,
    multiplicative_order,
    primes_up_to,
    question_prefilter,
)

PRIMES = primes_up_to(23)
pairs = st.tuples(st.sampled_from(PRIMES), st.sampled_from(PRIMES)).filter(lambda t: t[0] != t[1])


def names(v):
    return {f.name for f in v.reasons()}


def test_neumann_rejects_p3():
    v = question_prefilter(3, 7, 10**9)
    assert v.rejected and "neumann" in names(v)
    assert "Neumann" in CITATIONS["neumann"]


def test_q_two_rejected():
    v = question_prefilter(7, 2, 10**9)
    assert v.rejected and names(v) == {"q-not-2-3"}


def test_order_bound_rejects_7_5():
    v = question_prefilter(7, 5, 10**4)
    assert v.rejected and "class-order" in names(v)
    assert 5**6 == 15625 > 10**4


def test_unbounded_7_5_passes_with_obligations():
    v = question_prefilter(7, 5)
    assert not v.rejected
    assert multiplicative_order(5, 7) == 6
    assert v.minimal_kernel_order == 5**6
    assert any("not metabelian" in o for o in v.obligations)
    assert any("divisible by 6" in o for o in v.obligations)
    kmo = next(f for f in v.filters if f.name == "kernel-minus-one")
    assert not kmo.rejected


def test_minimal_exponent_by_search():
    for p, q in [(7, 5), (13, 5), (11, 5), (7, 11), (11, 7)]:
        n = minimal_kernel_exponent(p, q)
        expected = next(k for k in range(q + 1, 400) if (q**k - 1) % p == 0)
        assert n == expected


def test_input_validation():
    with pytest.raises(ValueError):
        question_prefilter(4, 5)
    with pytest.raises(ValueError):
        question_prefilter(5, 5)
    with pytest.raises(ValueError):
        question_prefilter(7, 5, 0)


def test_hunt_small_bound_rejects_everything():
    vs = hunt(10**3, primes_up_to(13), primes_up_to(13))
    assert len(vs) == 30 and all(v.rejected for v in vs)
    assert hunt_summary(vs).startswith("no candidate below bound")


def test_hunt_million_survivors():
    vs = hunt(10**6, primes_up_to(13), primes_up_to(13))
    survivors = [(v.p, v.q) for v in vs if not v.rejected]
    assert survivors == [(7, 5), (13, 5)]
    assert all(v.minimal_kernel_order >= v.q ** (v.q + 1) for v in vs if not v.rejected)


@given(pairs, st.integers(1, 10**8), st.integers(0, 10**8))
def test_monotone_in_bound(pair, bound, extra):
    p, q = pair
    if not question_prefilter(p, q, bound).rejected:
        assert not question_prefilter(p, q, bound + extra).rejected


@given(pairs, st.integers(1, 10**8))
def test_every_rejection_is_cited(pair, bound):
    v = question_prefilter(*pair, bound)
    assert v.rejected == any(f.rejected for f in v.filters)
    for f in v.filters:
        assert f.citation == CITATIONS[f.name]
