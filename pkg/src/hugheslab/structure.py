"""Structural certificates: normal subgroups, Frobenius kernels, automorphisms,
Omega_1 / agemo, regularity of p-groups, and the H_pi theorem check."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .algebra import (
    SubgroupHandle,
    _reduced_generators,
    center,
    is_prime,
    derived_length,
    prime_factors,
    subgroup_from_mask,
)
from .group import PermGroup
from .hughes import PiCase, PiClassification, classify_pi, hughes_p
from .perm import Permutation, compose, inverse

__all__ = [
    "NotAPGroup",
    "NotSolvable",
    "FrobeniusCertificate",
    "AutomorphismSpec",
    "TheoremVerdict",
    "is_p_group",
    "conjugacy_classes",
    "normal_subgroups",
    "frobenius_decomposition",
    "is_fixed_point_free",
    "omega1",
    "agemo1",
    "is_regular_p_group",
    "main_theorem_check",
]


class NotAPGroup(ValueError):
    pass


class NotSolvable(ValueError):
    pass


def is_p_group(G: PermGroup, p: int) -> bool:
    return set(prime_factors(G.order)) <= {p}


def _require_p_group(G: PermGroup, p: int) -> None:
    if not is_p_group(G, p):
        raise NotAPGroup(f"group of order {G.order} is not a {p}-group")


def conjugacy_classes(G: PermGroup) -> list[np.ndarray]:
    """Conjugacy classes as sorted index arrays, ordered by smallest member."""
    tab = G.table()
    gens = tab.generator_indices
    # conj_maps[k][x] = g_k^-1 x g_k
    conj_maps = [tab.mul[tab.mul[tab.inv[g], :], g] for g in gens]
    label = np.full(tab.size, -1, dtype=np.int64)
    classes = []
    for start in range(tab.size):
        if label[start] >= 0:
            continue
        label[start] = len(classes)
        orbit = [start]
        for x in orbit:
            for cm in conj_maps:
                y = int(cm[x])
                if label[y] < 0:
                    label[y] = len(classes)
                    orbit.append(y)
        classes.append(np.array(sorted(orbit), dtype=np.int64))
    return classes


def normal_subgroups(G: PermGroup) -> list[SubgroupHandle]:
    """All normal subgroups, sorted by order then by element mask.

    Every normal subgroup is generated by the classes it contains, so closing
    the normal closures of single classes under joins finds them all.
    """
    tab = G.table()
    seen: dict[bytes, np.ndarray] = {}
    trivial = np.zeros(tab.size, dtype=np.bool_)
    trivial[tab.identity] = True
    seen[np.packbits(trivial).tobytes()] = trivial

    def add(mask: np.ndarray) -> bool:
        key = np.packbits(mask).tobytes()
        if key in seen:
            return False
        seen[key] = mask
        return True

    for cls in conjugacy_classes(G):
        add(tab.closure(cls))
    frontier = list(seen.values())
    while frontier:
        new = []
        current = list(seen.values())
        for a in frontier:
            for b in current:
                if (a & ~b).any() and (b & ~a).any():
                    joined = tab.closure(np.flatnonzero(a | b))
                    if add(joined):
                        new.append(joined)
        frontier = new
    masks = sorted(seen.values(), key=lambda m: (int(m.sum()), tuple(~m)))
    return [subgroup_from_mask(G, m) for m in masks]


@dataclass(eq=False)
class FrobeniusCertificate:
    kernel: SubgroupHandle
    complement_order: int
    complement_is_prime: bool
    kernel_prime: int | None  # q when the kernel is a q-group
    centralizer_condition_checked: bool
    kernel_is_abelian: bool

    @property
    def kernel_order(self) -> int:
        return self.kernel.order

    def summary(self) -> dict:
        return {
            "kernel_order": self.kernel_order,
            "complement_order": self.complement_order,
            "complement_is_prime": self.complement_is_prime,
            "kernel_prime": self.kernel_prime,
            "kernel_abelian": self.kernel_is_abelian,
        }


def _centralizers_inside(G: PermGroup, mask: np.ndarray) -> bool:
    mul = G.table().mul
    for x in np.flatnonzero(mask):
        if x == 0:
            continue
        commuting = mul[x, :] == mul[:, x]
        if (commuting & ~mask).any():
            return False
    return True


def frobenius_decomposition(G: PermGroup) -> FrobeniusCertificate | None:
    """Frobenius kernel of ``G`` if there is one.

    A kernel is a normal subgroup N with 1 < N < G, gcd(|N|, |G:N|) = 1 and
    C_G(x) inside N for every 1 != x in N. The largest such N is returned.
    """
    order = G.order
    best = None
    for N in reversed(normal_subgroups(G)):
        n = N.order
        if n == 1 or n == order or math.gcd(n, order // n) != 1:
            continue
        if _centralizers_inside(G, N.mask):
            best = N
            break
    if best is None:
        return None
    comp = order // best.order
    kp = prime_factors(best.order)
    return FrobeniusCertificate(
        kernel=best,
        complement_order=comp,
        complement_is_prime=is_prime(comp),
        kernel_prime=kp[0] if len(kp) == 1 else None,
        centralizer_condition_checked=True,
        kernel_is_abelian=best.sub.is_abelian(),
    )


@dataclass(eq=False)
class AutomorphismSpec:
    """A map on ``domain`` given by the images of its generators.

    Construction validates that the map extends to an automorphism by
    transporting it along the Cayley table.
    """

    domain: PermGroup
    images: tuple[Permutation, ...]
    _element_map: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        self.images = tuple(self.images)
        if len(self.images) != len(self.domain.generators):
            raise ValueError("need one image per generator")
        self._element_map = self._extend()

    @classmethod
    def from_conjugation(cls, domain: PermGroup, g: Permutation) -> "AutomorphismSpec":
        """x -> g^-1 x g, for g normalizing ``domain`` in some ambient group."""
        gi = inverse(g)
        return cls(domain, tuple(compose(gi, compose(h, g)) for h in domain.generators))

    def _extend(self) -> np.ndarray:
        tab = self.domain.table()
        gens = tab.generator_indices
        try:
            img_idx = [tab.index(x) for x in self.images]
        except ValueError:
            raise ValueError("generator image outside the domain") from None
        phi = np.full(tab.size, -1, dtype=np.int64)
        phi[tab.identity] = tab.identity
        queue = [tab.identity]
        for x in queue:
            for g, gi in zip(gens, img_idx):
                y = tab.mul[x, g]
                val = tab.mul[phi[x], gi]
                if phi[y] < 0:
                    phi[y] = val
                    queue.append(int(y))
                elif phi[y] != val:
                    raise ValueError("generator map does not extend to a homomorphism")
        if len(np.unique(phi)) != tab.size:
            raise ValueError("generator map is not bijective")
        return phi

    def __call__(self, g: Permutation) -> Permutation:
        tab = self.domain.table()
        return tab.perms[self._element_map[tab.index(g)]]

    def element_map(self) -> np.ndarray:
        return self._element_map.copy()

    @property
    def order(self) -> int:
        phi = self._element_map
        cur = phi.copy()
        k = 1
        ident = np.arange(len(phi))
        while not np.array_equal(cur, ident):
            cur = phi[cur]
            k += 1
        return k


def is_fixed_point_free(phi: AutomorphismSpec) -> bool:
    m = phi._element_map
    fixed = np.flatnonzero(m == np.arange(len(m)))
    return fixed.tolist() == [phi.domain.table().identity]


def omega1(G: PermGroup, p: int) -> tuple[SubgroupHandle, bool]:
    """Subgroup generated by the elements of order dividing p.

    The flag is True when that subgroup consists of exactly those elements.
    """
    _require_p_group(G, p)
    tab = G.table()
    small = (tab.orders == 1) | (tab.orders == p)
    gens, mask = _reduced_generators(tab, np.flatnonzero(small))
    handle = subgroup_from_mask(G, mask, "Omega_1")
    return handle, bool(np.array_equal(mask, small))


def _agemo_mask(G: PermGroup, mask: np.ndarray, p: int) -> np.ndarray:
    tab = G.table()
    pw = tab.power_map(p)
    return tab.closure(np.unique(pw[np.flatnonzero(mask)]))


def agemo1(K: PermGroup, p: int) -> SubgroupHandle:
    """Subgroup generated by the p-th powers."""
    tab = K.table()
    return subgroup_from_mask(K, _agemo_mask(K, np.ones(tab.size, dtype=np.bool_), p), "agemo_1")


def is_regular_p_group(G: PermGroup, p: int) -> tuple[bool, tuple[Permutation, Permutation] | None]:
    """Test (xy)^p = x^p y^p d with d in the agemo of <x, y>' for every pair.

    Returns the verdict and the first failing pair in canonical order.
    """
    _require_p_group(G, p)
    tab = G.table()
    pw = tab.power_map(p)
    defects = kernels.pair_power_defects(tab.mul, tab.inv, pw)
    cache: dict[bytes, np.ndarray] = {}
    for x, y in zip(*np.nonzero(defects != tab.identity)):
        pair = tab.closure([x, y])
        key = np.packbits(pair).tobytes()
        allowed = cache.get(key)
        if allowed is None:
            idx = np.flatnonzero(pair)
            comms = kernels.commutator_mask(tab.mul, tab.inv, idx, idx)
            derived = tab.closure(np.flatnonzero(comms))
            allowed = _agemo_mask(G, derived, p)
            cache[key] = allowed
        if not allowed[defects[x, y]]:
            return False, (tab.perms[x], tab.perms[y])
    return True, None


@dataclass(eq=False)
class TheoremVerdict:
    """Both sides of the H_pi characterization, evaluated independently."""

    left: bool  # 1 < H_pi < H_p for every p
    right: bool  # Frobenius, prime complement, nonabelian q-kernel F with 1 < H_q(F) < F
    classification: PiClassification
    certificate: FrobeniusCertificate | None
    kernel_hughes_order: int | None = None
    violations: list[str] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return self.left == self.right and not self.violations


def main_theorem_check(G: PermGroup) -> TheoremVerdict:
    """Evaluate both sides of the exceptional-case characterization for solvable G."""
    if derived_length(G) is None:
        raise NotSolvable(f"{G.name or 'group'} is not solvable")
    cls = classify_pi(G, "ALL")
    left = cls.case is PiCase.EXCEPTIONAL

    cert = frobenius_decomposition(G)
    right = False
    hq_order = None
    hq = None
    if cert is not None and cert.complement_is_prime and cert.kernel_prime is not None:
        F = cert.kernel.sub
        hq = hughes_p(F, cert.kernel_prime)
        hq_order = hq.order
        right = (not cert.kernel_is_abelian) and 1 < hq.order < F.order

    verdict = TheoremVerdict(left, right, cls, cert, hq_order)
    if left != right:
        verdict.violations.append(f"characterization fails: left={left} right={right}")
    if left and right:
        h_pi = cls.hughes.subgroup
        if not h_pi.same_subgroup(hq.subgroup.sub):
            verdict.violations.append("H_pi(G) differs from H_q(F)")
        zf = center(cert.kernel.sub)
        if not (h_pi.contains_subgroup(zf.sub) and zf.order < h_pi.order):
            verdict.violations.append("Z(F) is not a proper subgroup of H_pi(G)")
    return verdict
