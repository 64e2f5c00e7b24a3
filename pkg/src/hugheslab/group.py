"""Permutation groups: generators, stabilizer chain, and full enumeration."""

from __future__ import annotations

import os
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .chain import StabilizerChain, build_chain
from .perm import Permutation, compose, identity

__all__ = [
    "DEFAULT_CAP",
    "EnumerationCapExceeded",
    "default_cap",
    "PermGroup",
    "ElementTable",
    "build_chain",
    "members",
]

DEFAULT_CAP = 200_000


class EnumerationCapExceeded(RuntimeError):
    """Raised instead of returning a truncated element list."""


def default_cap() -> int:
    """Enumeration cap, overridable through ``HUGHESLAB_CAP``."""
    raw = os.environ.get("HUGHESLAB_CAP")
    if raw:
        try:
            cap = int(raw)
        except ValueError:
            raise ValueError(f"HUGHESLAB_CAP must be an integer, got {raw!r}") from None
        if cap < 1:
            raise ValueError("HUGHESLAB_CAP must be positive")
        return cap
    return DEFAULT_CAP


class PermGroup:
    """A permutation group given by generators.

    The stabilizer chain and the element table are built on first use and
    cached; the group itself is never mutated afterwards.
    """

    def __init__(self, generators: Iterable[Permutation | Sequence[int]], degree: int | None = None,
                 name: str | None = None):
        gens = [g if isinstance(g, Permutation) else Permutation(g) for g in generators]
        if degree is None:
            if not gens:
                raise ValueError("degree is required when there are no generators")
            degree = gens[0].degree
        if not gens:
            gens = [identity(degree)]
        for g in gens:
            if g.degree != degree:
                raise ValueError(f"generator of degree {g.degree} in a group of degree {degree}")
        self.degree = degree
        self.generators: tuple[Permutation, ...] = tuple(gens)
        self.name = name

    def __repr__(self) -> str:
        label = f" {self.name}" if self.name else ""
        return f"<PermGroup{label} degree={self.degree} gens={len(self.generators)}>"

    @cached_property
    def chain(self) -> StabilizerChain:
        return build_chain(list(self.generators), self.degree)

    @property
    def order(self) -> int:
        return self.chain.order

    def __contains__(self, g: Permutation) -> bool:
        return self.chain.contains(g)

    def identity(self) -> Permutation:
        return identity(self.degree)

    def members(self, cap: int | None = None) -> list[Permutation]:
        return members(self, cap)

    def table(self, cap: int | None = None) -> "ElementTable":
        """Enumerated form of the group (cached after the first call)."""
        cached = self.__dict__.get("_table")
        if cached is None:
            cached = ElementTable(self, members(self, cap))
            self.__dict__["_table"] = cached
        return cached

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(compose(a, b) == compose(b, a) for i, a in enumerate(gens) for b in gens[i + 1:])


def members(G: PermGroup, cap: int | None = None) -> list[Permutation]:
    """All elements of ``G`` in lexicographic order of their image arrays.

    Elements are discovered breadth-first from the identity by right
    multiplication with the generators. Raises :class:`EnumerationCapExceeded`
    rather than truncating.
    """
    cap = default_cap() if cap is None else cap
    order = G.order
    if order > cap:
        raise EnumerationCapExceeded(f"group order {order} exceeds enumeration cap {cap}")
    gens = [g.images for g in G.generators if not g.is_identity()]
    start = tuple(range(G.degree))
    seen = {start}
    queue = [start]
    for x in queue:
        for g in gens:
            y = tuple([x[i] for i in g])
            if y not in seen:
                if len(seen) >= cap:
                    raise EnumerationCapExceeded(f"more than {cap} elements")
                seen.add(y)
                queue.append(y)
    return [Permutation._trusted(t) for t in sorted(seen)]


class ElementTable:
    """Elements of a group as index-addressable arrays.

    ``perms[i]`` is the i-th element in canonical order (index 0 is the
    identity). The Cayley table, inverses and element orders are computed
    lazily by the kernels.
    """

    def __init__(self, group: PermGroup, perms: list[Permutation]):
        self.group = group
        self.perms = perms
        self.size = len(perms)
        self.rows = np.array([p.images for p in perms], dtype=np.int32).reshape(self.size, group.degree)
        self.identity = 0
        self._index = {p.images: i for i, p in enumerate(perms)}

    def index(self, g: Permutation) -> int:
        try:
            return self._index[g.images]
        except KeyError:
            raise ValueError(f"{g} is not an element of the group") from None

    def find(self, g: Permutation) -> int | None:
        return self._index.get(g.images)

    @cached_property
    def row_index(self) -> kernels.RowIndex:
        return kernels.RowIndex(self.rows)

    @cached_property
    def mul(self) -> np.ndarray:
        return kernels.cayley_table(self.row_index)

    @cached_property
    def inv(self) -> np.ndarray:
        inv = np.empty(self.size, dtype=np.int32)
        rows, cols = np.nonzero(self.mul == self.identity)
        inv[rows] = cols
        return inv

    @cached_property
    def orders(self) -> np.ndarray:
        return kernels.element_orders(self.rows)

    @cached_property
    def generator_indices(self) -> np.ndarray:
        return np.array([self.index(g) for g in self.group.generators], dtype=np.int64)

    def power_map(self, k: int) -> np.ndarray:
        """Index of x**k for every element x (k >= 0)."""
        result = np.full(self.size, self.identity, dtype=np.int32)
        base = np.arange(self.size, dtype=np.int32)
        while k:
            if k & 1:
                result = self.mul[result, base]
            base = self.mul[base, base]
            k >>= 1
        return result

    def closure(self, gens) -> np.ndarray:
        return kernels.closure_mask(self.mul, gens, self.identity)

    def conjugate(self, x: int, g: int) -> int:
        """Index of g^-1 x g."""
        return int(self.mul[self.mul[self.inv[g], x], g])

    def mask_of(self, perms: Iterable[Permutation]) -> np.ndarray:
        mask = np.zeros(self.size, dtype=np.bool_)
        for p in perms:
            mask[self.index(p)] = True
        return mask
