"""Prime and order prefilters for a Frobenius group FA with a nonabelian
q-group kernel F, 1 < H_q(F) < F, and complement A of prime order p.

Filters run in a fixed order and every one is recorded, so a verdict lists
all reasons a pair fails, not only the first.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Iterable

from .algebra import is_prime, prime_factors

__all__ = [
    "FilterResult",
    "QuestionVerdict",
    "CITATIONS",
    "multiplicative_order",
    "minimal_kernel_exponent",
    "question_prefilter",
    "hunt",
    "hunt_summary",
    "primes_up_to",
]

UNBOUNDED = None

# filter name -> citation tag (the result each filter rests on)
CITATIONS = {
    "parity": "parity: p != 2 (a nonabelian kernel rules out an even complement)",
    "q-not-2-3": "q ≠ 2,3 (the Hughes problem is settled for the primes 2 and 3)",
    "neumann": "Neumann: p = 3 => class(F) <= 2",
    "higman": "Higman: p = 5 => class(F) <= 6",
    "class-order": "class(F) >= q (regular p-groups have H_p in {1, G}) => |F| >= q^(q+1)",
    "metabelian": "F is not metabelian (Kreknin-Kostrikin bound with derived length 2)",
    "complement-divisibility": "p | |F| - 1 (fixed-point-free action of A on F)",
    "kernel-minus-one": "pi(|F| - 1) not inside {2,3,5}",
}


def _class_cap_detail(cap: int, q: int) -> str:
    if cap < q:
        return f"class(F) <= {cap} < q"
    # class >= q is still possible only for the excluded primes q <= cap
    return f"class(F) <= {cap} leaves only q <= {cap}, i.e. q in {{2,3}}, already excluded"


@dataclass
class FilterResult:
    name: str
    rejected: bool
    citation: str
    detail: str = ""


@dataclass
class QuestionVerdict:
    p: int
    q: int
    kernel_order_bound: int | None
    filters: list[FilterResult]
    minimal_kernel_order: int | None = None
    obligations: list[str] = field(default_factory=list)

    @property
    def rejected(self) -> bool:
        return any(f.rejected for f in self.filters)

    @property
    def status(self) -> str:
        return "REJECT" if self.rejected else "PASS"

    def reasons(self) -> list[FilterResult]:
        return [f for f in self.filters if f.rejected]

    def to_json(self) -> str:
        obj = {"p": self.p, "q": self.q, "bound": self.kernel_order_bound, "status": self.status,
               "minimal_kernel_order": self.minimal_kernel_order,
               "filters": [asdict(f) for f in self.filters], "obligations": self.obligations}
        return json.dumps(obj, separators=(", ", ": "))

    def table_row(self) -> str:
        if self.rejected:
            why = "; ".join(f.name for f in self.reasons())
            return f"p={self.p:<3} q={self.q:<3} REJECT  {why}"
        return f"p={self.p:<3} q={self.q:<3} PASS    |F| >= {self.minimal_kernel_order}"


def multiplicative_order(a: int, n: int) -> int:
    if n < 2 or a % n == 0:
        raise ValueError(f"{a} is not a unit mod {n}")
    k, x = 1, a % n
    while x != 1:
        x = x * a % n
        k += 1
    return k


def minimal_kernel_exponent(p: int, q: int) -> int:
    """Smallest n >= q + 1 with p | q^n - 1."""
    d = multiplicative_order(q, p)
    n = q + 1
    return n + (-n) % d


def question_prefilter(p: int, q: int, max_kernel_order: int | None = None) -> QuestionVerdict:
    """Apply every prime/order filter to the pair (complement prime p, kernel prime q).

    ``max_kernel_order=None`` means no bound on |F|.
    """
    if not (is_prime(p) and is_prime(q)):
        raise ValueError(f"p={p} and q={q} must both be prime")
    if p == q:
        raise ValueError("p and q must differ")
    if max_kernel_order is not None and max_kernel_order < 1:
        raise ValueError("kernel order bound must be positive")

    res: list[FilterResult] = []

    def record(name: str, rejected: bool, detail: str = "") -> None:
        res.append(FilterResult(name, rejected, CITATIONS[name], detail))

    record("parity", p == 2, "complement of order 2" if p == 2 else "")
    record("q-not-2-3", q in (2, 3), f"q = {q}" if q in (2, 3) else "")
    record("neumann", p == 3, _class_cap_detail(2, q) if p == 3 else "")
    record("higman", p == 5, _class_cap_detail(6, q) if p == 5 else "")

    class_floor = q ** (q + 1)
    too_big = max_kernel_order is not None and class_floor > max_kernel_order
    record("class-order", too_big,
           f"|F| >= {q}^{q + 1} = {class_floor} > {max_kernel_order}" if too_big else f"|F| >= {class_floor}")
    record("metabelian", False, "structural obligation")

    n = minimal_kernel_exponent(p, q)
    minimal = q**n
    too_big = max_kernel_order is not None and minimal > max_kernel_order
    record("complement-divisibility", too_big,
           f"order of {q} mod {p} is {multiplicative_order(q, p)}; smallest admissible |F| = {q}^{n} = {minimal}"
           + (f" > {max_kernel_order}" if too_big else ""))

    # decisive only if every admissible |F| within the bound fails it
    d = multiplicative_order(q, p)
    examined = [minimal]
    if max_kernel_order is not None:
        examined = []
        k = n
        while q**k <= max_kernel_order:
            examined.append(q**k)
            k += d
    smooth = [f for f in examined if set(prime_factors(f - 1)) <= {2, 3, 5}]
    rejected = bool(examined) and len(smooth) == len(examined)
    record("kernel-minus-one", rejected,
           f"checked {len(examined)} admissible |F|; {len(smooth)} with pi(|F| - 1) inside {{2,3,5}}")

    verdict = QuestionVerdict(p, q, max_kernel_order, res)
    if not verdict.rejected:
        verdict.minimal_kernel_order = minimal
        verdict.obligations = [
            f"class(F) >= {q}",
            f"|F| >= {q}^{q + 1} = {q ** (q + 1)}",
            "F not metabelian",
            f"|F| = {q}^n with n >= {q + 1} and n divisible by {multiplicative_order(q, p)}",
            f"1 < H_{q}(F) < F",
            f"F admits a fixed-point-free automorphism of order {p}",
        ]
    return verdict


def primes_up_to(n: int) -> list[int]:
    return [k for k in range(2, n + 1) if is_prime(k)]


def hunt(max_kernel_order: int | None, p_values: Iterable[int], q_values: Iterable[int]) -> list[QuestionVerdict]:
    """Verdicts for every pair p != q, p ascending then q ascending."""
    qs = sorted(set(q_values))
    return [question_prefilter(p, q, max_kernel_order) for p in sorted(set(p_values)) for q in qs if p != q]


def hunt_summary(verdicts: list[QuestionVerdict]) -> str:
    survivors = [v for v in verdicts if not v.rejected]
    if not survivors:
        return f"no candidate below bound: all {len(verdicts)} pairs rejected with citations"
    listed = ", ".join(f"(p={v.p}, q={v.q}, |F|>={v.minimal_kernel_order})" for v in survivors)
    return f"{len(verdicts) - len(survivors)} of {len(verdicts)} pairs rejected; surviving obligations: {listed}"
