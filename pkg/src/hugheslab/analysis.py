"""Per-group analysis: Hughes data, classification, and invariant checks.

Each ``check_*`` function returns a list of violation messages (empty when
the statement holds for the group).
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from itertools import combinations
from typing import Iterable

import numpy as np

from .algebra import (
    ALL,
    PrimeSet,
    center,
    derived_series,
    is_prime,
    lower_central_series,
    prime_divisors,
)
from .group import PermGroup
from .hughes import HughesResult, PiCase, classify_pi, hughes_intersection, hughes_n, hughes_p, hughes_pi
from .structure import (
    frobenius_decomposition,
    is_p_group,
    is_regular_p_group,
    main_theorem_check,
    omega1,
)

__all__ = [
    "AnalysisReport",
    "HughesCache",
    "analyze",
    "check_element_orders",
    "check_monotonicity",
    "check_normalization",
    "check_inclusion_chain",
    "check_intersection",
    "check_pi_equivalence",
    "check_pi_reduction",
    "check_singletons",
    "check_p_group",
    "check_frobenius",
    "nonempty_subsets",
]


def nonempty_subsets(primes: Iterable[int], max_size: int | None = None) -> list[PrimeSet]:
    primes = list(primes)
    top = len(primes) if max_size is None else min(max_size, len(primes))
    return [PrimeSet(c) for r in range(1, top + 1) for c in combinations(primes, r)]


class HughesCache:
    """Memoized Hughes subgroups of one group."""

    def __init__(self, G: PermGroup):
        self.G = G
        self.primes = prime_divisors(G)
        self._p: dict[int, HughesResult] = {}
        self._pi: dict[PrimeSet, HughesResult] = {}

    def p(self, p: int) -> HughesResult:
        if p not in self._p:
            self._p[p] = hughes_p(self.G, p)
        return self._p[p]

    def pi(self, pi: Iterable[int]) -> HughesResult:
        key = PrimeSet(pi)
        if key not in self._pi:
            self._pi[key] = hughes_pi(self.G, key)
        return self._pi[key]


def _le(a: np.ndarray, b: np.ndarray) -> bool:
    return not (a & ~b).any()


def check_element_orders(hc: HughesCache) -> list[str]:
    """Elements outside H_p have order 1 or p; outside H_pi, order 1 or in pi."""
    out = []
    G, orders = hc.G, hc.G.table().orders
    for p in hc.primes:
        res = hc.p(p)
        outside = orders[~res.subgroup.mask]
        if not np.isin(outside, [1, p]).all():
            out.append(f"element outside H_{p} has order not in {{1,{p}}}")
        if not res.subgroup.normal:
            out.append(f"H_{p} is not normal")
    for pi in nonempty_subsets(hc.primes):
        res = hc.pi(pi)
        if not np.isin(orders[~res.subgroup.mask], [1, *pi]).all():
            out.append(f"element outside H_{pi} has order outside {{1}} U {pi}")
        if not res.subgroup.normal:
            out.append(f"H_{pi} is not normal")
    return out


def check_monotonicity(hc: HughesCache) -> list[str]:
    out = []
    subsets = nonempty_subsets(hc.primes)
    for small in subsets:
        for big in subsets:
            if set(small) < set(big):
                hb, hs = hc.pi(big).subgroup, hc.pi(small).subgroup
                if not (_le(hb.mask, hs.mask) and hs.contains_subgroup(hb)):
                    out.append(f"H_{big} is not inside H_{small}")
    return out


def _outside_prime(order: int) -> int:
    q = 2
    while order % q == 0 or not is_prime(q):
        q += 1
    return q


def check_normalization(hc: HughesCache) -> list[str]:
    out = []
    extra = _outside_prime(hc.G.order)
    for pi in nonempty_subsets(hc.primes):
        ref = hc.pi(pi).subgroup
        widened = hughes_pi(hc.G, [*pi, extra])
        raw = hughes_pi(hc.G, [*pi, extra], normalize=False)
        for res in (widened, raw):
            if not ref.same_subgroup(res.subgroup):
                out.append(f"H_pi changes when {extra} is added to {pi} (normalize={res.normalized})")
    return out


def check_inclusion_chain(hc: HughesCache) -> list[str]:
    out = []
    for pi in nonempty_subsets(hc.primes):
        meet = np.ones(hc.G.table().size, dtype=np.bool_)
        for p in pi:
            meet &= hc.p(p).subgroup.mask
        if not _le(hc.pi(pi).subgroup.mask, meet):
            out.append(f"H_{pi} is not inside the intersection of its H_p")
    return out


def check_intersection(hc: HughesCache) -> list[str]:
    """The intersection of all H_p is G or the unique proper H_p."""
    if len(hc.primes) < 2:
        return []
    meet = hughes_intersection(hc.G)
    proper = [p for p in hc.primes if hc.p(p).order < hc.G.order]
    if meet.is_whole():
        return [] if not proper else [f"intersection is G although H_p < G for p in {proper}"]
    if len(proper) != 1:
        return [f"intersection is proper but the proper H_p are {proper}"]
    if not meet.same_subgroup(hc.p(proper[0]).subgroup):
        return [f"intersection differs from H_{proper[0]}"]
    return []


def check_pi_equivalence(hc: HughesCache, solvable: bool, max_size: int = 3) -> list[str]:
    """Solvable G with |pi(G)| >= 2: H_pi = G iff every H_p (p in pi) is G."""
    if not solvable or len(hc.primes) < 2:
        return []
    out = []
    order = hc.G.order
    for pi in nonempty_subsets(hc.primes, max_size):
        lhs = hc.pi(pi).order == order
        rhs = all(hc.p(p).order == order for p in pi)
        if lhs != rhs:
            out.append(f"H_pi = G is {lhs} but all H_p = G is {rhs} for pi={pi}")
    return out


def check_pi_reduction(hc: HughesCache, solvable: bool) -> list[str]:
    """For a proper subset pi of pi(G) and the proper H_p: H_pi = G if p not in pi, else H_pi = H_p."""
    if not solvable or len(hc.primes) < 2:
        return []
    order = hc.G.order
    proper = [p for p in hc.primes if hc.p(p).order < order]
    out = []
    for p in proper:
        for pi in nonempty_subsets(hc.primes):
            if len(pi) == len(hc.primes):
                continue
            h = hc.pi(pi)
            if p not in pi and h.order != order:
                out.append(f"H_{pi} != G although H_{p} < G and {p} not in pi")
            if p in pi and not h.subgroup.same_subgroup(hc.p(p).subgroup):
                out.append(f"H_{pi} != H_{p} although {p} in pi")
    return out


def check_singletons(hc: HughesCache) -> list[str]:
    out = []
    for p in hc.primes:
        ref = hc.p(p).subgroup
        if not ref.same_subgroup(hc.pi([p]).subgroup):
            out.append(f"H_{{{p}}} != H_{p}")
        if not ref.same_subgroup(hughes_n(hc.G, p).subgroup):
            out.append(f"H_n(n={p}) != H_{p}")
    return out


@dataclass
class PGroupFacts:
    prime: int
    regular: bool
    nilpotency_class: int
    hughes_order: int
    omega1_exact: bool


def check_p_group(hc: HughesCache, nil_class: int | None) -> tuple[list[str], PGroupFacts | None]:
    """Regular p-groups and p-groups of class < p have H_p in {1, G}."""
    if len(hc.primes) != 1:
        return [], None
    p = hc.primes[0]
    G = hc.G
    regular, _ = is_regular_p_group(G, p)
    _, exact = omega1(G, p)
    hp = hc.p(p).order
    extreme = hp in (1, G.order)
    out = []
    if regular and not extreme:
        out.append(f"regular {p}-group with 1 < H_{p} < G")
    if regular and not exact:
        out.append("regular group whose Omega_1 is more than the elements of order dividing p")
    if nil_class is not None and nil_class < p and not extreme:
        out.append(f"class {nil_class} < {p} but 1 < H_{p} < G")
    return out, PGroupFacts(p, regular, nil_class, hp, exact)


def check_frobenius(cert) -> list[str]:
    if cert is None:
        return []
    out = []
    n, c = cert.kernel_order, cert.complement_order
    G = cert.kernel.parent
    if n * c != G.order:
        out.append("kernel order times complement order differs from |G|")
    if np.gcd(n, c) != 1:
        out.append("kernel and complement orders are not coprime")
    if not cert.kernel.normal:
        out.append("kernel is not normal")
    if cert.complement_is_prime and (n - 1) % c:
        out.append(f"complement order {c} does not divide |F| - 1 = {n - 1}")
    return out


@dataclass
class AnalysisReport:
    name: str
    order: int
    degree: int
    primes: list[int]
    solvable: bool
    derived_length: int | None
    nilpotency_class: int | None
    hughes: dict[str, dict[str, int]]
    pi: list[int]
    pi_order: int
    case: str
    case_prime: int | None
    frobenius: dict | None
    theorem: dict | None
    p_group: dict | None
    violations: list[str] = field(default_factory=list)

    @property
    def exceptional(self) -> bool:
        return self.case == PiCase.EXCEPTIONAL.value

    def to_json(self) -> str:
        return json.dumps(asdict(self), separators=(", ", ": "))

    def table_row(self) -> str:
        hp = " ".join(f"H{p}={v['order']}" for p, v in self.hughes.items())
        status = "ok" if not self.violations else f"{len(self.violations)} violation(s)"
        return (f"{self.name:<12} |G|={self.order:<6} pi(G)={{{','.join(map(str, self.primes))}}}"
                f" {hp} Hpi={self.pi_order} {self.case}{'(' + str(self.case_prime) + ')' if self.case_prime else ''}"
                f" {status}")


def analyze(G: PermGroup, pi: Iterable[int] | str = ALL, name: str | None = None) -> AnalysisReport:
    """Compute the Hughes data of ``G`` and run every invariant check."""
    name = name or G.name or "group"
    tab = G.table()
    violations: list[str] = []
    if G.order != tab.size:
        violations.append(f"chain order {G.order} != enumerated size {tab.size}")

    hc = HughesCache(G)
    series, dlen = derived_series(G)
    solvable = dlen is not None
    _, nil_class = lower_central_series(G)
    for h in series:
        if not h.normal:
            violations.append("derived subgroup not normal")
    if not center(G).normal:
        violations.append("center not normal")

    cls = classify_pi(G, pi)
    violations += check_element_orders(hc)
    violations += check_monotonicity(hc)
    violations += check_normalization(hc)
    violations += check_inclusion_chain(hc)
    violations += check_intersection(hc)
    violations += check_pi_equivalence(hc, solvable)
    violations += check_pi_reduction(hc, solvable)
    violations += check_singletons(hc)
    pviol, pfacts = check_p_group(hc, nil_class)
    violations += pviol

    cert = frobenius_decomposition(G)
    violations += check_frobenius(cert)

    theorem = None
    if solvable:
        verdict = main_theorem_check(G)
        violations += verdict.violations
        theorem = {"left": verdict.left, "right": verdict.right}

    return AnalysisReport(
        name=name,
        order=G.order,
        degree=G.degree,
        primes=list(hc.primes),
        solvable=solvable,
        derived_length=dlen,
        nilpotency_class=nil_class,
        hughes={str(p): {"order": hc.p(p).order, "index": hc.p(p).subgroup.index} for p in hc.primes},
        pi=list(cls.pi),
        pi_order=cls.pi_order,
        case=cls.case.value,
        case_prime=cls.prime,
        frobenius=cert.summary() if cert else None,
        theorem=theorem,
        p_group=asdict(pfacts) if pfacts else None,
        violations=violations,
    )
