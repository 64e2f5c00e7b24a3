"""Permutations on the points 0..n-1, stored as image tuples.

Composition convention: ``compose(a, b)`` applies ``b`` first, then ``a``,
so ``compose(a, b)(i) == a(b(i))``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "Permutation",
    "compose",
    "inverse",
    "power",
    "element_order",
    "identity",
    "parse_cycles",
    "format_cycles",
]


@dataclass(frozen=True, order=True)
class Permutation:
    """A bijection of ``{0, ..., degree - 1}`` given by its image array.

    Instances are immutable and hashable; ordering is lexicographic on the
    image arrays, which is the canonical element order used everywhere.
    """

    images: tuple[int, ...]

    def __init__(self, images: Iterable[int]):
        imgs = tuple(int(i) for i in images)
        if sorted(imgs) != list(range(len(imgs))):
            raise ValueError(f"not a permutation of 0..{len(imgs) - 1}: {list(imgs)}")
        object.__setattr__(self, "images", imgs)

    @classmethod
    def _trusted(cls, images: tuple[int, ...]) -> "Permutation":
        # skips validation; only for images produced by composing valid perms
        obj = object.__new__(cls)
        object.__setattr__(obj, "images", images)
        return obj

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __len__(self) -> int:
        return len(self.images)

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest point."""
        seen = [False] * len(self.images)
        out = []
        for start in range(len(self.images)):
            if seen[start] or self.images[start] == start:
                seen[start] = True
                continue
            cyc = [start]
            seen[start] = True
            j = self.images[start]
            while j != start:
                seen[j] = True
                cyc.append(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def moved_points(self) -> list[int]:
        return [i for i, x in enumerate(self.images) if i != x]

    def __str__(self) -> str:
        return format_cycles(self)

    def __repr__(self) -> str:
        return f"Permutation({list(self.images)})"


def identity(degree: int) -> Permutation:
    return Permutation._trusted(tuple(range(degree)))


def compose(a: Permutation, b: Permutation) -> Permutation:
    """Return the permutation ``i -> a(b(i))`` (``b`` acts first)."""
    if len(a.images) != len(b.images):
        raise ValueError(f"degree mismatch: {a.degree} vs {b.degree}")
    ai = a.images
    return Permutation._trusted(tuple([ai[x] for x in b.images]))


def inverse(a: Permutation) -> Permutation:
    inv = [0] * len(a.images)
    for i, x in enumerate(a.images):
        inv[x] = i
    return Permutation._trusted(tuple(inv))


def power(a: Permutation, k: int) -> Permutation:
    """``a`` composed with itself ``k`` times; negative ``k`` uses the inverse."""
    if k < 0:
        a, k = inverse(a), -k
    result = identity(a.degree)
    base = a
    while k:
        if k & 1:
            result = compose(result, base)
        base = compose(base, base)
        k >>= 1
    return result


def element_order(a: Permutation) -> int:
    """Least ``n >= 1`` with ``a**n`` the identity: lcm of the cycle lengths."""
    return math.lcm(1, *(len(c) for c in a.cycles()))


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int | None = None) -> Permutation:
    """Parse cycle notation such as ``"(0 1 2)(3 4)"``; ``"()"`` is the identity.

    Points may be separated by spaces or commas. Cycles are applied right to
    left, matching :func:`compose`. ``degree`` defaults to one more than the
    largest point mentioned.
    """
    stripped = text.strip()
    if not stripped:
        raise ValueError("empty permutation string")
    cycles: list[list[int]] = []
    pos = 0
    for m in _CYCLE_RE.finditer(stripped):
        if stripped[pos:m.start()].strip():
            raise ValueError(f"could not parse permutation {text!r}")
        pos = m.end()
        body = m.group(1).replace(",", " ").split()
        try:
            cycles.append([int(t) for t in body])
        except ValueError:
            raise ValueError(f"could not parse permutation {text!r}") from None
    if stripped[pos:].strip() or pos == 0:
        raise ValueError(f"could not parse permutation {text!r}")

    biggest = max((max(c) for c in cycles if c), default=-1)
    n = biggest + 1 if degree is None else degree
    if biggest >= n:
        raise ValueError(f"point {biggest} out of range for degree {n}")
    result = identity(n)
    for cyc in reversed(cycles):
        if any(x < 0 for x in cyc) or len(set(cyc)) != len(cyc):
            raise ValueError(f"invalid cycle {cyc} in {text!r}")
        imgs = list(range(n))
        for i, x in enumerate(cyc):
            imgs[x] = cyc[(i + 1) % len(cyc)]
        result = compose(Permutation._trusted(tuple(imgs)), result)
    return result


def format_cycles(a: Permutation | Sequence[int]) -> str:
    if not isinstance(a, Permutation):
        a = Permutation(a)
    cycles = a.cycles()
    if not cycles:
        return "()"
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)
