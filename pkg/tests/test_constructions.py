import itertools

import pytest
from hypothesis import given, strategies as st

from hugheslab.algebra import exponent_and_primes, nilpotency_class
from hugheslab.constructions import (
    affine_frobenius,
    agl1,
    dihedral,
    direct_product,
    extraspecial,
    extraspecial_frobenius,
    gamma_tower,
    quaternion,
    standard_family,
    symmetric,
)
from hugheslab.fields import GF, is_irreducible
from hugheslab.hughes import hughes_p, hughes_pi

GF27 = GF(3, 3)
elements27 = st.integers(0, 26)


def test_prime_field_addition():
    F = GF(3)
    assert F.add(1, 2) == 0


def test_gf27_modulus_and_reduction():
    assert GF27.modulus == (1, 2, 0, 1)
    x = 3  # encodes the polynomial x
    # x^3 = -(2x + 1) = x + 2 over GF(3)
    assert GF27.mul(x, GF27.mul(x, x)) == GF27.encode([2, 1, 0])
    assert GF27.encode([0, 0, 0, 1]) == GF27.encode([2, 1])


def test_primitive_element_order():
    assert GF27.mult_order(GF27.primitive_element) == 26
    w13 = GF27.pow(GF27.primitive_element, 2)
    assert GF27.mult_order(w13) == 13


@pytest.mark.parametrize("p, k", [(2, 1), (2, 3), (3, 2), (3, 3), (5, 2), (2, 4), (7, 2), (3, 6)])
def test_fermat_on_all_elements(p, k):
    F = GF(p, k)
    for a in F.elements():
        assert F._pow_slow(a, F.order) == a
        assert F.pow(a, F.order) == a


@given(elements27, elements27, elements27)
def test_field_axioms(a, b, c):
    F = GF27
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.mul(a, b) == F._mul_poly(a, b)
    assert F.add(a, F.neg(a)) == 0
    if a:
        assert F.mul(a, F.inverse(a)) == 1


def test_bad_field_parameters():
    with pytest.raises(ValueError):
        GF(4, 1)
    with pytest.raises(ValueError):
        GF(2, 21)
    with pytest.raises(ValueError):
        GF(3, 3, modulus=(0, 0, 0, 1))
    with pytest.raises(ZeroDivisionError):
        GF27.inverse(0)


def test_irreducibility_brute_force():
    # x^3 + 2x + 1 has no roots mod 3
    assert all((a**3 + 2 * a + 1) % 3 for a in range(3))
    assert is_irreducible((1, 2, 0, 1), 3)
    assert not is_irreducible((0, 1, 0, 1), 3)


def test_affine_examples():
    S3 = affine_frobenius(3, 1, 2)
    assert S3.order == 6
    assert {p.images for p in S3.members()} == set(itertools.permutations(range(3)))
    assert affine_frobenius(3, 3, 13).order == 351
    assert affine_frobenius(5, 1, 4).order == 20
    assert agl1(8).order == 56
    with pytest.raises(ValueError):
        affine_frobenius(3, 3, 5)
    with pytest.raises(ValueError):
        agl1(12)


def test_gamma_tower_orders_and_chain():
    g0, g = gamma_tower()
    assert (g0.order, g.order) == (351, 1053)
    assert all(x in g for x in g0.generators)
    assert hughes_p(g0, 13).order == 27
    assert hughes_p(g0, 3).order == 351


def test_standard_families():
    assert dihedral(4).order == 8
    assert symmetric(4).order == 24
    assert standard_family("dihedral", 4).order == 8
    with pytest.raises(ValueError):
        standard_family("monster")
    with pytest.raises(ValueError):
        standard_family("symmetric", 6, cap=100)


def test_extraspecial_125():
    E = extraspecial(5, 5)
    assert E.order == 125 and E.degree == 125
    assert nilpotency_class(E) == 2
    assert exponent_and_primes(E)[0] == 5
    M = extraspecial(5, 25)
    assert M.order == 125 and nilpotency_class(M) == 2 and exponent_and_primes(M)[0] == 25
    with pytest.raises(ValueError):
        extraspecial(5, 7)
    with pytest.raises(ValueError):
        extraspecial(2)


def test_quaternion():
    Q = quaternion()
    assert Q.order == 8
    orders = sorted(Q.table().orders.tolist())
    assert orders == [1, 2, 4, 4, 4, 4, 4, 4]


def test_extraspecial_frobenius():
    G = extraspecial_frobenius(7, 3)
    assert G.order == 1029
    assert hughes_pi(G, [3, 7]).order == 1
    with pytest.raises(ValueError):
        extraspecial_frobenius(7, 2)
    with pytest.raises(ValueError):
        extraspecial_frobenius(7, 5)


def test_direct_product():
    G = direct_product(symmetric(3), dihedral(4))
    assert G.order == 48 and G.degree == 7
