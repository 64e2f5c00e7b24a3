"""Finite fields GF(p^k) with elements encoded as integers.

The element with coefficient vector ``(c_0, ..., c_{k-1})`` (constant term
first) is encoded as ``sum(c_i * p**i)``, so 0 and 1 are the field's zero and
one and ``p`` encodes the generator ``x``.
"""

from __future__ import annotations

from functools import cached_property
from itertools import product

from .algebra import is_prime, prime_factors

__all__ = ["GF", "field", "is_irreducible", "DEFAULT_MODULI"]

# modulus coefficients, constant term first, leading 1 included
DEFAULT_MODULI = {
    (3, 3): (1, 2, 0, 1),  # x^3 + 2x + 1
}


def _poly_mod(a: list[int], mod: tuple[int, ...], p: int) -> list[int]:
    a = [c % p for c in a]
    k = len(mod) - 1
    for top in range(len(a) - 1, k - 1, -1):
        c = a[top]
        if c:
            for i in range(k + 1):
                a[top - k + i] = (a[top - k + i] - c * mod[i]) % p
    return (a + [0] * k)[:k]


def is_irreducible(mod: tuple[int, ...], p: int) -> bool:
    """Brute-force check: no monic factor of degree 1..deg/2 divides ``mod``."""
    k = len(mod) - 1
    if k < 1 or mod[-1] % p != 1:
        return False
    for d in range(1, k // 2 + 1):
        for low in product(range(p), repeat=d):
            if _poly_mod(list(mod), (*low, 1), p) == [0] * d:
                return False
    return True


def _first_irreducible(p: int, k: int) -> tuple[int, ...]:
    for low in product(range(p), repeat=k):
        mod = (*reversed(low), 1)
        if is_irreducible(mod, p):
            return mod
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


class GF:
    """The field with ``p**k`` elements.

    The modulus defaults to the entry in :data:`DEFAULT_MODULI` (GF(27) uses
    x^3 + 2x + 1), otherwise the first monic irreducible of degree ``k`` in
    lexicographic order of its coefficients, highest degree first.
    """

    def __init__(self, p: int, k: int = 1, modulus: tuple[int, ...] | None = None):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if k < 1:
            raise ValueError("k must be positive")
        if p**k > 10**6:
            raise ValueError(f"field order {p}^{k} exceeds 10^6")
        if modulus is None:
            modulus = DEFAULT_MODULI.get((p, k)) or _first_irreducible(p, k)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != k + 1 or not is_irreducible(modulus, p):
            raise ValueError(f"modulus {modulus} is not a monic irreducible of degree {k} over GF({p})")
        self.p, self.k, self.modulus = p, k, modulus
        self.order = p**k

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.k})"

    def elements(self) -> range:
        return range(self.order)

    def coeffs(self, a: int) -> list[int]:
        out = []
        for _ in range(self.k):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    def encode(self, coeffs) -> int:
        coeffs = list(coeffs)
        if len(coeffs) > self.k:
            coeffs = _poly_mod(coeffs, self.modulus, self.p)
        return sum((c % self.p) * self.p**i for i, c in enumerate(coeffs))

    def add(self, a: int, b: int) -> int:
        return self.encode(x + y for x, y in zip(self.coeffs(a), self.coeffs(b)))

    def neg(self, a: int) -> int:
        return self.encode(-x for x in self.coeffs(a))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def _mul_poly(self, a: int, b: int) -> int:
        ca, cb = self.coeffs(a), self.coeffs(b)
        prod_ = [0] * (2 * self.k - 1)
        for i, x in enumerate(ca):
            if x:
                for j, y in enumerate(cb):
                    prod_[i + j] += x * y
        return self.encode(_poly_mod(prod_, self.modulus, self.p))

    @cached_property
    def _logs(self):
        g = self._primitive_by_search()
        exp = [1] * (self.order - 1)
        for i in range(1, self.order - 1):
            exp[i] = self._mul_poly(exp[i - 1], g)
        log = {v: i for i, v in enumerate(exp)}
        return g, exp, log

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        _, exp, log = self._logs
        return exp[(log[a] + log[b]) % (self.order - 1)]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("0 has no inverse")
            return 1 if e == 0 else 0
        _, exp, log = self._logs
        return exp[(log[a] * e) % (self.order - 1)]

    def inverse(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.pow(a, -1)

    def mult_order(self, a: int) -> int:
        if a == 0:
            raise ValueError("0 has no multiplicative order")
        n = self.order - 1
        for q in prime_factors(n) if n > 1 else []:
            while n % q == 0 and self._pow_slow(a, n // q) == 1:
                n //= q
        return n

    def _pow_slow(self, a: int, e: int) -> int:
        result, base = 1, a
        while e:
            if e & 1:
                result = self._mul_poly(result, base)
            base = self._mul_poly(base, base)
            e >>= 1
        return result

    def _primitive_by_search(self) -> int:
        for a in range(1, self.order):
            if self.mult_order(a) == self.order - 1:
                return a
        raise AssertionError("multiplicative group is not cyclic")  # pragma: no cover

    @property
    def primitive_element(self) -> int:
        """Smallest encoded element generating the multiplicative group."""
        return self._logs[0]

    def frobenius(self, a: int) -> int:
        return self.pow(a, self.p)


def field(p: int, k: int = 1) -> GF:
    return GF(p, k)
