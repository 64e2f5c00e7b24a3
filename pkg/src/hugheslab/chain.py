"""Deterministic Schreier-Sims stabilizer chains.

Base points are always the smallest point moved by the element that forces a
new level, so the chain depends only on the generator order.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .perm import Permutation, compose, identity, inverse

__all__ = ["ChainLevel", "StabilizerChain", "build_chain"]


@dataclass
class ChainLevel:
    point: int
    generators: list[Permutation] = field(default_factory=list)
    # transversal[pt] maps the base point to pt
    transversal: dict[int, Permutation] = field(default_factory=dict)

    def recompute(self, degree: int) -> None:
        trans = {self.point: identity(degree)}
        queue = [self.point]
        for pt in queue:
            u = trans[pt]
            for s in self.generators:
                img = s.images[pt]
                if img not in trans:
                    trans[img] = compose(s, u)
                    queue.append(img)
        self.transversal = trans


@dataclass
class StabilizerChain:
    degree: int
    levels: list[ChainLevel]
    strong_generators: list[Permutation]

    @property
    def base(self) -> list[int]:
        return [lv.point for lv in self.levels]

    @property
    def order(self) -> int:
        n = 1
        for lv in self.levels:
            n *= len(lv.transversal)
        return n

    def sift(self, g: Permutation, start: int = 0) -> tuple[Permutation, int]:
        """Strip ``g`` through the levels from ``start``.

        Returns the residue and the index of the level where stripping stopped
        (``len(levels)`` when it passed every level).
        """
        for i in range(start, len(self.levels)):
            lv = self.levels[i]
            img = g.images[lv.point]
            u = lv.transversal.get(img)
            if u is None:
                return g, i
            g = compose(inverse(u), g)
        return g, len(self.levels)

    def contains(self, g: Permutation) -> bool:
        if g.degree != self.degree:
            return False
        residue, _ = self.sift(g)
        return residue.is_identity()


def _first_moved(g: Permutation) -> int:
    for i, x in enumerate(g.images):
        if i != x:
            return i
    raise ValueError("identity has no moved point")


def build_chain(generators: list[Permutation], degree: int) -> StabilizerChain:
    """Build a complete stabilizer chain for the group generated by ``generators``."""
    for g in generators:
        if g.degree != degree:
            raise ValueError(f"generator of degree {g.degree} in a group of degree {degree}")
    gens = [g for g in generators if not g.is_identity()]
    chain = StabilizerChain(degree, [], [])

    def fixes_prefix(g: Permutation, k: int) -> bool:
        return all(g.images[lv.point] == lv.point for lv in chain.levels[:k])

    def add_strong(g: Permutation, upto: int) -> None:
        chain.strong_generators.append(g)
        for k in range(upto + 1):
            chain.levels[k].generators.append(g)
            chain.levels[k].recompute(degree)

    for g in gens:
        if fixes_prefix(g, len(chain.levels)):
            chain.levels.append(ChainLevel(_first_moved(g)))
        k = 0
        while k + 1 < len(chain.levels) and fixes_prefix(g, k + 1):
            k += 1
        add_strong(g, k)

    i = len(chain.levels) - 1
    while i >= 0:
        lv = chain.levels[i]
        restart = None
        for pt, u in list(lv.transversal.items()):
            for s in lv.generators:
                h = compose(inverse(lv.transversal[s.images[pt]]), compose(s, u))
                residue, j = chain.sift(h, i + 1)
                if residue.is_identity():
                    continue
                if j == len(chain.levels):
                    chain.levels.append(ChainLevel(_first_moved(residue)))
                add_strong(residue, j)
                restart = j
                break
            if restart is not None:
                break
        if restart is None:
            i -= 1
        else:
            i = restart
    return chain
