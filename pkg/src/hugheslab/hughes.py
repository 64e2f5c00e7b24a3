"""Hughes subgroups H_p, H_n, H_pi and the H_pi classification."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Iterable

import numpy as np

from .algebra import (
    ALL,
    PrimeSet,
    SubgroupHandle,
    _handle,
    _reduced_generators,
    is_prime,
    prime_divisors,
)
from .group import PermGroup

if TYPE_CHECKING:
    from .structure import FrobeniusCertificate

__all__ = [
    "HughesResult",
    "PiCase",
    "PiClassification",
    "hughes_p",
    "hughes_n",
    "hughes_pi",
    "hughes_intersection",
    "classify_pi",
]


@dataclass(eq=False)
class HughesResult:
    kind: str  # "p", "n" or "pi"
    parameter: int | PrimeSet
    subgroup: SubgroupHandle
    generator_count: int
    normalized: bool = False

    @property
    def order(self) -> int:
        return self.subgroup.order


def _closure_of(G: PermGroup, qualifies: np.ndarray, kind: str, parameter) -> HughesResult:
    tab = G.table()
    cand = np.flatnonzero(qualifies)
    gens, mask = _reduced_generators(tab, cand)
    label = f"H_{parameter}" if kind != "pi" else "H_{" + ",".join(map(str, parameter)) + "}"
    return HughesResult(kind, parameter, _handle(G, gens, mask, label), int(cand.size))


def hughes_p(G: PermGroup, p: int) -> HughesResult:
    """Subgroup generated by the elements x with x^p != 1."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    orders = G.table().orders
    return _closure_of(G, (orders != 1) & (orders != p), "p", p)


def hughes_n(G: PermGroup, n: int) -> HughesResult:
    """Subgroup generated by the elements whose order does not divide ``n``."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    orders = G.table().orders
    return _closure_of(G, n % orders != 0, "n", n)


def hughes_pi(G: PermGroup, pi: Iterable[int], normalize: bool = True) -> HughesResult:
    """Subgroup generated by the elements whose order is neither 1 nor in ``pi``.

    With ``normalize`` the prime set is first cut down to the primes dividing
    |G|; the subgroup is the same either way.
    """
    pi = PrimeSet(pi)
    if not pi:
        raise ValueError("pi must be nonempty")
    if normalize:
        pi = pi.intersection(prime_divisors(G))
    orders = G.table().orders
    bad = np.isin(orders, np.array([1, *pi], dtype=orders.dtype))
    result = _closure_of(G, ~bad, "pi", pi)
    result.normalized = normalize
    return result


def hughes_intersection(G: PermGroup) -> SubgroupHandle:
    """Intersection of H_p(G) over all primes p dividing |G|."""
    primes = prime_divisors(G)
    if len(primes) < 2:
        raise ValueError("need at least two prime divisors of |G|")
    mask = np.ones(G.table().size, dtype=np.bool_)
    for p in primes:
        mask &= hughes_p(G, p).subgroup.mask
    gens, closed = _reduced_generators(G.table(), np.flatnonzero(mask))
    return _handle(G, gens, closed, "cap H_p")


class PiCase(enum.Enum):
    TRIVIAL = "TRIVIAL"
    FULL = "FULL"
    EQUALS_SOME_HP = "EQUALS_SOME_HP"
    EXCEPTIONAL = "EXCEPTIONAL"


@dataclass(eq=False)
class PiClassification:
    case: PiCase
    pi: PrimeSet
    pi_order: int
    hp_orders: dict[int, int]
    prime: int | None = None  # the matching p for EQUALS_SOME_HP
    matching_primes: tuple[int, ...] = ()
    certificate: "FrobeniusCertificate | None" = None
    hughes: HughesResult | None = field(default=None, repr=False)
    per_prime: dict[int, HughesResult] = field(default_factory=dict, repr=False)


def classify_pi(G: PermGroup, pi: Iterable[int] | str = ALL) -> PiClassification:
    """Place H_pi(G) in exactly one of the four cases.

    Cases are tested in the order TRIVIAL, FULL, EQUALS_SOME_HP, EXCEPTIONAL.
    ``pi="ALL"`` means every prime dividing |G|.
    """
    if isinstance(pi, str):
        if pi.upper() != ALL:
            raise ValueError(f"unknown prime-set token {pi!r}")
        pi = prime_divisors(G)
    pi = PrimeSet(pi).intersection(prime_divisors(G))
    order = G.order
    if not pi:
        # nothing excluded except the identity
        h = _closure_of(G, G.table().orders != 1, "pi", pi)
        case = PiCase.TRIVIAL if h.order == 1 else PiCase.FULL
        return PiClassification(case, pi, h.order, {}, hughes=h)

    h = hughes_pi(G, pi)
    per_prime = {p: hughes_p(G, p) for p in pi}
    hp_orders = {p: r.order for p, r in per_prime.items()}
    base = dict(pi=pi, pi_order=h.order, hp_orders=hp_orders, hughes=h, per_prime=per_prime)

    if h.order == 1:
        return PiClassification(PiCase.TRIVIAL, **base)
    if h.order == order:
        return PiClassification(PiCase.FULL, **base)
    matches = tuple(p for p, r in per_prime.items() if r.subgroup.same_subgroup(h.subgroup))
    if matches:
        return PiClassification(PiCase.EQUALS_SOME_HP, prime=matches[0], matching_primes=matches, **base)

    # re-check the strict inequalities against chain orders before reporting
    if not all(1 < h.order < per_prime[p].subgroup.sub.order for p in pi):
        raise AssertionError("H_pi is neither equal to nor strictly inside some H_p")
    from .structure import frobenius_decomposition

    return PiClassification(PiCase.EXCEPTIONAL, certificate=frobenius_decomposition(G), **base)
