"""The full verification suite behind ``hugheslab verify``.

Each criterion returns ``(ok, detail)``; the runner prints one line per
criterion.
"""

from __future__ import annotations

import time
from typing import Callable

from .algebra import derived_length, nilpotency_class
from .analysis import (
    HughesCache,
    analyze,
    check_pi_equivalence,
    check_p_group,
    check_intersection,
    nonempty_subsets,
)
from .catalog import builtin_group, builtin_names
from .constructions import gamma_tower, kernel_of_gamma, symmetric
from .hughes import PiCase, hughes_p, hughes_pi
from .question import hunt, primes_up_to
from .structure import main_theorem_check

__all__ = ["CRITERIA", "run_suite", "brute_force_closure"]

CATALOG_ORDER_LIMIT = 5000


def brute_force_closure(seeds, degree: int) -> set:
    """Element set generated by ``seeds`` using plain Python sets."""
    ident = tuple(range(degree))
    elems = {ident}
    gens = []
    for s in seeds:
        if s.images in elems:
            continue
        gens.append(s.images)
        frontier = list(elems)
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = tuple([x[i] for i in g])
                    if y not in elems:
                        elems.add(y)
                        nxt.append(y)
            frontier = nxt
    return elems


def _catalog():
    for name in builtin_names():
        G = builtin_group(name)
        if G.order <= CATALOG_ORDER_LIMIT:
            yield name, G


def s3_chain():
    S3 = symmetric(3)
    pi, h2 = hughes_pi(S3, [2, 3]).order, hughes_p(S3, 2).order
    return pi == 1 and h2 == 3 and h2 < S3.order, f"|H_23|={pi} |H_2|={h2} |S3|={S3.order}"


def gamma_tower_chain():
    g0, g = gamma_tower()
    N = kernel_of_gamma()
    h13 = hughes_p(g0, 13).subgroup
    h3 = hughes_p(g, 3).subgroup
    hpi = hughes_pi(g, [3, 13]).order
    checks = {
        "|gamma|=1053": g.order == 1053,
        "|gamma0|=351": g0.order == 351,
        "|N|=27": N.order == 27,
        "H_{3,13}(gamma)=1": hpi == 1,
        "H_13(gamma0)=N": h13.same_subgroup(N),
        "H_3(gamma)=gamma0": h3.same_subgroup(g0),
    }
    failed = [k for k, v in checks.items() if not v]
    detail = f"|H_{{3,13}}(gamma)|={hpi} |H_3(gamma)|={h3.order}"
    return not failed, detail + (f"; failed: {', '.join(failed)}" if failed else "")


def intersection_catalog():
    bad = [(n, v) for n, G in _catalog() for v in check_intersection(HughesCache(G))]
    return not bad, f"{len(bad)} violations" + (f": {bad[:3]}" if bad else "")


def pi_equivalence_catalog():
    bad = []
    for n, G in _catalog():
        bad += [(n, v) for v in check_pi_equivalence(HughesCache(G), derived_length(G) is not None)]
    return not bad, f"{len(bad)} violations"


def pgroups_catalog():
    bad = []
    for n, G in _catalog():
        hc = HughesCache(G)
        if len(hc.primes) == 1:
            bad += [(n, v) for v in check_p_group(hc, nilpotency_class(G))[0]]
    D8 = builtin_group("D8")
    h2 = hughes_p(D8, 2).order
    d8_ok = h2 == 4 and nilpotency_class(D8) == 2
    return not bad and d8_ok, f"{len(bad)} violations; D8: |H_2|={h2}"


def main_theorem_catalog():
    bad, fired = [], []
    for n, G in _catalog():
        if derived_length(G) is None:
            continue
        v = main_theorem_check(G)
        if not v.holds:
            bad.append(n)
        if v.classification.case is PiCase.EXCEPTIONAL:
            fired.append(n)
    return not bad and not fired, f"failures={bad} exceptional={fired}"


def oracle_catalog():
    bad = []
    for n, G in _catalog():
        tab = G.table()
        if G.order != tab.size:
            bad.append(f"{n}: order")
        hc = HughesCache(G)
        results = [hc.p(p) for p in hc.primes] + [hc.pi(pi) for pi in nonempty_subsets(hc.primes)]
        for r in results:
            seeds = [tab.perms[i] for i, o in enumerate(tab.orders) if _qualifies(r, int(o))]
            if len(brute_force_closure(seeds, G.degree)) != r.subgroup.sub.order:
                bad.append(f"{n}: {r.kind}={r.parameter}")
    return not bad, f"{len(bad)} mismatches" + (f": {bad[:3]}" if bad else "")


def _qualifies(r, order: int) -> bool:
    if r.kind == "p":
        return order not in (1, r.parameter)
    return order != 1 and order not in r.parameter


def hunt_check():
    t0 = time.perf_counter()
    primes = primes_up_to(13)
    verdicts = hunt(10**6, primes, primes)
    again = [v.to_json() for v in hunt(10**6, primes, primes)]
    elapsed = time.perf_counter() - t0
    ok = [v.to_json() for v in verdicts] == again and elapsed < 5
    for v in verdicts:
        names = {f.name for f in v.reasons()}
        if not v.rejected and v.minimal_kernel_order < v.q ** (v.q + 1):
            ok = False
        if v.p in (2, 3, 5) and not names & {"parity", "neumann", "higman"}:
            ok = False
        if v.q in (2, 3) and "q-not-2-3" not in names:
            ok = False
    survivors = [(v.p, v.q) for v in verdicts if not v.rejected]
    return ok, f"{len(verdicts)} pairs, survivors {survivors}, {elapsed:.2f}s"


CRITERIA: list[tuple[str, Callable[[], tuple[bool, str]]]] = [
    ("S3 chain", s3_chain),
    ("GF(27) tower", gamma_tower_chain),
    ("intersection of Hughes subgroups", intersection_catalog),
    ("H_pi = G iff all H_p = G", pi_equivalence_catalog),
    ("regular / small-class p-groups", pgroups_catalog),
    ("exceptional-case characterization", main_theorem_catalog),
    ("chain vs brute-force oracle", oracle_catalog),
    ("prime-pair hunt", hunt_check),
]


def run_suite(echo: Callable[[str], None] = print) -> bool:
    all_ok = True
    for i, (title, fn) in enumerate(CRITERIA, 1):
        t0 = time.perf_counter()
        ok, detail = fn()
        all_ok &= ok
        echo(f"[{'PASS' if ok else 'FAIL'}] {i}. {title}: {detail} ({time.perf_counter() - t0:.2f}s)")
    return all_ok


def catalog_reports():
    for name, G in _catalog():
        yield analyze(G, name=name)
