"""Subgroups, series, quotients and numeric invariants of enumerated groups."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .group import ElementTable, PermGroup
from .perm import Permutation, compose, inverse

__all__ = [
    "ALL",
    "PrimeSet",
    "SubgroupHandle",
    "is_prime",
    "prime_factors",
    "generated_subgroup",
    "subgroup_from_mask",
    "center",
    "commutator_subgroup",
    "derived_series",
    "derived_length",
    "is_solvable",
    "lower_central_series",
    "nilpotency_class",
    "exponent_and_primes",
    "prime_divisors",
    "quotient",
    "is_normal",
]

ALL = "ALL"


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime divisors of ``n`` by trial division, ascending."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


class PrimeSet(tuple):
    """Sorted, duplicate-free tuple of primes."""

    def __new__(cls, primes: Iterable[int] = ()):
        vals = sorted({int(p) for p in primes})
        for p in vals:
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
        return super().__new__(cls, vals)

    @classmethod
    def parse(cls, text: str) -> "PrimeSet":
        """Parse ``"3,13"`` (spaces, braces allowed)."""
        body = text.strip().strip("{}")
        if not body:
            return cls()
        try:
            return cls(int(tok) for tok in body.replace(" ", ",").split(",") if tok)
        except ValueError as exc:
            raise ValueError(f"bad prime set {text!r}: {exc}") from None

    def intersection(self, other: Iterable[int]) -> "PrimeSet":
        other = set(other)
        return PrimeSet(p for p in self if p in other)

    def encode(self) -> str:
        return ",".join(map(str, self))

    def __repr__(self) -> str:
        return "{" + ", ".join(map(str, self)) + "}"


@dataclass(eq=False)
class SubgroupHandle:
    """A subgroup ``sub`` of ``parent`` with index and normality metadata.

    ``mask`` marks the subgroup's elements in the parent's canonical element
    list. Comparisons between handles go through stabilizer-chain membership.
    """

    parent: PermGroup
    sub: PermGroup
    index: int
    normal: bool
    mask: np.ndarray = field(repr=False)

    @property
    def order(self) -> int:
        return self.sub.order

    def is_trivial(self) -> bool:
        return self.order == 1

    def is_whole(self) -> bool:
        return self.index == 1

    def elements(self) -> list[Permutation]:
        perms = self.parent.table().perms
        return [perms[i] for i in np.flatnonzero(self.mask)]

    def indices(self) -> np.ndarray:
        return np.flatnonzero(self.mask)

    def __contains__(self, g: Permutation) -> bool:
        return g in self.sub

    def contains_subgroup(self, other: "SubgroupHandle | PermGroup") -> bool:
        grp = other.sub if isinstance(other, SubgroupHandle) else other
        return all(g in self.sub for g in grp.generators)

    def same_subgroup(self, other: "SubgroupHandle | PermGroup") -> bool:
        grp = other.sub if isinstance(other, SubgroupHandle) else other
        return grp.order == self.order and self.contains_subgroup(grp)

    def is_proper_nontrivial(self) -> bool:
        return 1 < self.order < self.parent.order


def _reduced_generators(tab: ElementTable, candidates: Iterable[int]) -> tuple[list[int], np.ndarray]:
    """Greedy generating set: keep a candidate only if it is not yet generated."""
    gens: list[int] = []
    mask = np.zeros(tab.size, dtype=np.bool_)
    mask[tab.identity] = True
    for c in candidates:
        c = int(c)
        if not mask[c]:
            gens.append(c)
            mask = tab.closure(gens)
    return gens, mask


def subgroup_from_mask(G: PermGroup, mask: np.ndarray, name: str | None = None) -> SubgroupHandle:
    """Wrap a closed element mask of ``G`` as a :class:`SubgroupHandle`."""
    tab = G.table()
    gens, closed = _reduced_generators(tab, np.flatnonzero(mask))
    if not np.array_equal(closed, mask):
        raise ValueError("mask is not closed under multiplication")
    return _handle(G, gens, closed, name)


def _handle(G: PermGroup, gens: Sequence[int], mask: np.ndarray, name: str | None = None) -> SubgroupHandle:
    tab = G.table()
    sub = PermGroup([tab.perms[i] for i in gens], degree=G.degree, name=name)
    order = sub.order
    if order != int(mask.sum()):
        raise AssertionError(f"chain order {order} disagrees with closure size {int(mask.sum())}")
    return SubgroupHandle(G, sub, G.order // order, is_normal(G, sub), mask)


def is_normal(G: PermGroup, H: PermGroup) -> bool:
    """Conjugate each generator of ``H`` by each generator of ``G``."""
    for g in G.generators:
        gi = inverse(g)
        for h in H.generators:
            if compose(gi, compose(h, g)) not in H:
                return False
    return True


def generated_subgroup(parent: PermGroup, seeds: Iterable[Permutation], name: str | None = None) -> SubgroupHandle:
    """Smallest subgroup of ``parent`` containing ``seeds``."""
    tab = parent.table()
    idx = []
    for s in seeds:
        if s not in parent:
            raise ValueError(f"seed {s} is not in the parent group")
        idx.append(tab.index(s))
    gens, mask = _reduced_generators(tab, idx)
    return _handle(parent, gens, mask, name)


def _whole(G: PermGroup) -> SubgroupHandle:
    tab = G.table()
    return SubgroupHandle(G, G, 1, True, np.ones(tab.size, dtype=np.bool_))


def center(G: PermGroup) -> SubgroupHandle:
    tab = G.table()
    mul = tab.mul
    mask = (mul == mul.T).all(axis=1)
    return subgroup_from_mask(G, mask, "center")


def commutator_subgroup(G: PermGroup, left: np.ndarray, right: np.ndarray) -> np.ndarray:
    """Mask of [A, B] for element masks A, B normal in ``G``.

    All commutators are formed, so the result is exact whenever both A and B
    are normal (then the generated subgroup is normal too).
    """
    tab = G.table()
    comms = kernels.commutator_mask(tab.mul, tab.inv, np.flatnonzero(left), np.flatnonzero(right))
    return tab.closure(np.flatnonzero(comms))


def derived_series(G: PermGroup) -> tuple[list[SubgroupHandle], int | None]:
    """``G >= G' >= G'' >= ...`` until it stabilizes.

    Returns the handles and the derived length, or ``None`` for the length
    when the series stalls above the trivial group.
    """
    series = [_whole(G)]
    masks = [series[0].mask]
    while True:
        cur = masks[-1]
        nxt = commutator_subgroup(G, cur, cur)
        if nxt.sum() == cur.sum():
            break
        masks.append(nxt)
        series.append(subgroup_from_mask(G, nxt, f"derived[{len(series)}]"))
    last = int(masks[-1].sum())
    length = len(series) - 1 if last == 1 else None
    return series, length


def derived_length(G: PermGroup) -> int | None:
    return derived_series(G)[1]


def is_solvable(G: PermGroup) -> bool:
    return derived_length(G) is not None


def lower_central_series(G: PermGroup) -> tuple[list[SubgroupHandle], int | None]:
    """``gamma_1 = G``, ``gamma_{i+1} = [gamma_i, G]``.

    Returns the handles and the nilpotency class (``None`` if not nilpotent).
    """
    whole = _whole(G)
    series = [whole]
    cur = whole.mask
    while cur.sum() > 1:
        nxt = commutator_subgroup(G, cur, whole.mask)
        if nxt.sum() == cur.sum():
            return series, None
        series.append(subgroup_from_mask(G, nxt, f"gamma[{len(series) + 1}]"))
        cur = nxt
    return series, len(series) - 1 if len(series) > 1 else 0


def nilpotency_class(G: PermGroup) -> int | None:
    return lower_central_series(G)[1]


def prime_divisors(G: PermGroup) -> PrimeSet:
    return PrimeSet(prime_factors(G.order))


def exponent_and_primes(G: PermGroup) -> tuple[int, PrimeSet]:
    orders = G.table().orders
    return math.lcm(*(int(o) for o in np.unique(orders))), prime_divisors(G)


def quotient(G: PermGroup, N: SubgroupHandle, degree_cap: int | None = None) -> PermGroup:
    """Permutation image of ``G`` acting on the right cosets of ``N``.

    Cosets are numbered by their minimal member in the canonical element
    order. The action is faithful on ``G/N``, so the result has order
    ``|G : N|``.
    """
    if N.parent is not G:
        raise ValueError("N must be a subgroup handle of G")
    if not N.normal:
        raise ValueError("N is not normal in G")
    if degree_cap is not None and N.index > degree_cap:
        raise ValueError(f"index {N.index} exceeds the degree cap {degree_cap}")
    tab = G.table()
    n_idx = np.flatnonzero(N.mask)
    coset_of = np.full(tab.size, -1, dtype=np.int64)
    reps = []
    for x in range(tab.size):
        if coset_of[x] >= 0:
            continue
        coset_of[tab.mul[n_idx, x]] = len(reps)
        reps.append(x)
    gens = []
    for g in tab.generator_indices:
        gens.append(Permutation(coset_of[tab.mul[reps, g]]))
    return PermGroup(gens, degree=len(reps), name="quotient")
