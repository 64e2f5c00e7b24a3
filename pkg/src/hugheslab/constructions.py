"""Concrete groups: affine Frobenius groups, the GF(27) tower, standard families."""

from __future__ import annotations

import math
from typing import Callable

from .fields import GF
from .group import PermGroup
from .perm import Permutation, compose, identity

__all__ = [
    "affine_frobenius",
    "agl1",
    "gamma_tower",
    "kernel_of_gamma",
    "cyclic",
    "dihedral",
    "symmetric",
    "alternating",
    "elementary_abelian",
    "quaternion",
    "extraspecial",
    "extraspecial_frobenius",
    "direct_product",
    "regular_representation",
    "standard_family",
    "FAMILIES",
]


def _field_perm(F: GF, fn: Callable[[int], int]) -> Permutation:
    return Permutation(fn(a) for a in F.elements())


def _translations(F: GF) -> list[Permutation]:
    # translations by the basis 1, x, ..., x^(k-1)
    return [_field_perm(F, lambda a, b=F.p**i: F.add(a, b)) for i in range(F.k)]


def affine_frobenius(p: int, k: int, m: int) -> PermGroup:
    """Translations of GF(p^k) extended by multiplication by an element of order m.

    The multiplier is ``w**((p^k - 1) // m)`` for the field's primitive
    element ``w``; the group is Frobenius with kernel of order p^k when m > 1.
    """
    F = GF(p, k)
    q = F.order
    if m < 1 or (q - 1) % m:
        raise ValueError(f"{m} does not divide {q} - 1")
    gens = _translations(F)
    if m > 1:
        w = F.pow(F.primitive_element, (q - 1) // m)
        gens.append(_field_perm(F, lambda a: F.mul(a, w)))
    return PermGroup(gens, degree=q, name=f"affine({p},{k},{m})")


def agl1(q: int) -> PermGroup:
    """AGL(1, q) for a prime power q."""
    p = _prime_power_base(q)
    k = round(math.log(q, p))
    G = affine_frobenius(p, k, q - 1)
    G.name = f"AGL(1,{q})"
    return G


def _prime_power_base(q: int) -> int:
    for p in range(2, q + 1):
        if q % p == 0:
            n = q
            while n % p == 0:
                n //= p
            if n != 1:
                raise ValueError(f"{q} is not a prime power")
            return p
    raise ValueError(f"{q} is not a prime power")


def gamma_tower() -> tuple[PermGroup, PermGroup]:
    """``(Gamma0, Gamma)`` on the 27 elements of GF(27).

    Gamma0 is GF(27) extended by multiplication by the square of the field's
    primitive element (order 13); Gamma adds the field automorphism x -> x^3.
    """
    F = GF(3, 3)
    gamma0 = affine_frobenius(3, 3, 13)
    gamma0.name = "gamma0"
    frob = _field_perm(F, F.frobenius)
    gamma = PermGroup([*gamma0.generators, frob], degree=27, name="gamma")
    return gamma0, gamma


def kernel_of_gamma() -> PermGroup:
    """The translation subgroup N (order 27) of the tower."""
    return PermGroup(_translations(GF(3, 3)), degree=27, name="N")


def cyclic(n: int) -> PermGroup:
    if n < 1:
        raise ValueError("n must be positive")
    return PermGroup([[(i + 1) % n for i in range(n)]], degree=n, name=f"C{n}")


def dihedral(n: int) -> PermGroup:
    """Symmetries of a regular n-gon (order 2n) acting on its vertices."""
    if n < 3:
        raise ValueError("dihedral(n) needs n >= 3; use elementary_abelian for the Klein group")
    rot = [(i + 1) % n for i in range(n)]
    ref = [(-i) % n for i in range(n)]
    return PermGroup([rot, ref], degree=n, name=f"D{2 * n}")


def symmetric(n: int) -> PermGroup:
    if n < 2:
        return PermGroup([], degree=max(n, 1), name=f"S{n}")
    gens = [[1, 0, *range(2, n)]]
    if n > 2:
        gens.append([*range(1, n), 0])
    return PermGroup(gens, degree=n, name=f"S{n}")


def alternating(n: int) -> PermGroup:
    if n < 3:
        return PermGroup([], degree=max(n, 1), name=f"A{n}")
    gens = []
    for i in range(n - 2):
        imgs = list(range(n))
        imgs[i], imgs[i + 1], imgs[i + 2] = i + 1, i + 2, i
        gens.append(imgs)
    return PermGroup(gens, degree=n, name=f"A{n}")


def elementary_abelian(p: int, k: int) -> PermGroup:
    """(C_p)^k as translations of GF(p)^k, on p^k points."""
    n = p**k
    gens = []
    for i in range(k):
        step = p**i
        gens.append([(a // step % p + 1) % p * step + a - (a // step % p) * step for a in range(n)])
    return PermGroup(gens, degree=n, name=f"{p}^{k}")


def regular_representation(elements: list, mul: Callable, generators: list, name: str | None = None) -> PermGroup:
    """Right regular representation: g acts on the listed elements by h -> h*g."""
    pos = {e: i for i, e in enumerate(elements)}
    gens = [[pos[mul(h, g)] for h in elements] for g in generators]
    return PermGroup(gens, degree=len(elements), name=name)


def quaternion() -> PermGroup:
    """Q8 acting regularly on 8 points."""
    i = Permutation([1, 2, 3, 0, 5, 6, 7, 4])
    j = Permutation([4, 7, 6, 5, 2, 1, 0, 3])
    return PermGroup([i, j], degree=8, name="Q8")


def _heisenberg(p: int):
    elements = [(a, b, c) for a in range(p) for b in range(p) for c in range(p)]

    def mul(x, y):
        return ((x[0] + y[0]) % p, (x[1] + y[1]) % p, (x[2] + y[2] + x[0] * y[1]) % p)

    return elements, mul


def _metacyclic(p: int):
    # <x, y | x^(p^2) = y^p = 1, y^-1 x y = x^(1+p)>, elements x^i y^j
    elements = [(i, j) for i in range(p * p) for j in range(p)]

    def mul(u, v):
        i, j = u
        k, l = v
        return ((i * pow(1 + p, l, p * p) + k) % (p * p), (j + l) % p)

    return elements, mul


def extraspecial(p: int, exponent: int | None = None) -> PermGroup:
    """Extraspecial group of order p^3 in its regular representation.

    For odd p, ``exponent=p`` gives the Heisenberg group and ``exponent=p*p``
    the metacyclic one. For p = 2 use :func:`dihedral` (4) or :func:`quaternion`.
    """
    if p == 2:
        raise ValueError("use dihedral(4) or quaternion() for p = 2")
    exponent = p if exponent is None else exponent
    if exponent == p:
        elements, mul = _heisenberg(p)
        gens = [(1, 0, 0), (0, 1, 0)]
    elif exponent == p * p:
        elements, mul = _metacyclic(p)
        gens = [(1, 0), (0, 1)]
    else:
        raise ValueError(f"exponent must be {p} or {p * p}")
    return regular_representation(elements, mul, gens, name=f"{p}^(1+2) exp {exponent}")


def extraspecial_frobenius(p: int, r: int) -> PermGroup:
    """Heisenberg group of order p^3 extended by an automorphism of order r.

    The automorphism is (a, b, c) -> (t a, t b, t^2 c) with t of multiplicative
    order r mod p; it is fixed-point-free when t^2 != 1, so the result is a
    Frobenius group with nonabelian kernel.
    """
    if r < 2 or (p - 1) % r:
        raise ValueError(f"{r} must divide {p} - 1")
    t = next(t for t in range(2, p) if pow(t, r, p) == 1 and all(pow(t, d, p) != 1 for d in range(1, r)))
    if t * t % p == 1:
        raise ValueError("the automorphism fixes the center; need r > 2")
    elements, mul = _heisenberg(p)
    base = regular_representation(elements, mul, [(1, 0, 0), (0, 1, 0)])
    pos = {e: i for i, e in enumerate(elements)}
    alpha = Permutation(pos[(t * a % p, t * b % p, t * t * c % p)] for a, b, c in elements)
    return PermGroup([*base.generators, alpha], degree=len(elements), name=f"{p}^(1+2):{r}")


def direct_product(G: PermGroup, H: PermGroup, name: str | None = None) -> PermGroup:
    """G x H acting on the disjoint union of the two point sets."""
    n, m = G.degree, H.degree
    gens = [Permutation([*g.images, *range(n, n + m)]) for g in G.generators]
    gens += [Permutation([*range(n), *(n + x for x in h.images)]) for h in H.generators]
    return PermGroup(gens, degree=n + m, name=name or f"{G.name}x{H.name}")


FAMILIES: dict[str, Callable[..., PermGroup]] = {
    "cyclic": cyclic,
    "dihedral": dihedral,
    "symmetric": symmetric,
    "alternating": alternating,
    "elementary_abelian": elementary_abelian,
    "quaternion": quaternion,
    "extraspecial": extraspecial,
    "extraspecial_frobenius": extraspecial_frobenius,
    "affine": affine_frobenius,
    "agl1": agl1,
}


def standard_family(name: str, *params: int, cap: int | None = None) -> PermGroup:
    """Build a named family member, e.g. ``standard_family("dihedral", 4)``."""
    try:
        builder = FAMILIES[name]
    except KeyError:
        raise ValueError(f"unknown family {name!r}; known: {sorted(FAMILIES)}") from None
    G = builder(*params)
    if cap is not None and G.order > cap:
        raise ValueError(f"{name}{params} has order {G.order} above the cap {cap}")
    return G
