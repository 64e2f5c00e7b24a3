"""Brute-force reference computations on plain tuples.

Nothing here touches the package's tables, chains or kernels.
"""

from itertools import product


def mul(a, b):
    """a o b with b applied first."""
    return tuple(a[i] for i in b)


def inv(a):
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def ident(n):
    return tuple(range(n))


def order_by_powering(a):
    e = ident(len(a))
    cur, k = a, 1
    while cur != e:
        cur = mul(cur, a)
        k += 1
    return k


def closure(seeds, n):
    elems = {ident(n)}
    seeds = [tuple(s) for s in seeds]
    changed = True
    while changed:
        changed = False
        for x in list(elems):
            for s in seeds:
                y = mul(x, s)
                if y not in elems:
                    elems.add(y)
                    changed = True
    return elems


def commutator(a, b):
    return mul(mul(inv(a), inv(b)), mul(a, b))


def commutator_closure(A, B, n):
    return closure({commutator(a, b) for a in A for b in B}, n)


def derived_length(G, n):
    cur, k = set(G), 0
    while len(cur) > 1:
        nxt = commutator_closure(cur, cur, n)
        if len(nxt) == len(cur):
            return None
        cur, k = nxt, k + 1
    return k


def nilpotency_class(G, n):
    cur, k = set(G), 0
    while len(cur) > 1:
        nxt = commutator_closure(cur, G, n)
        if len(nxt) == len(cur):
            return None
        cur, k = nxt, k + 1
    return k


def center(G):
    return {z for z in G if all(mul(z, g) == mul(g, z) for g in G)}


def hughes(G, n, excluded):
    """Closure of the elements whose order is not in ``excluded``."""
    return closure([g for g in G if order_by_powering(g) not in excluded], n)


def is_subgroup(S, n):
    return ident(n) in S and all(mul(a, b) in S for a in S for b in S)


def is_normal(S, G):
    return all(mul(mul(inv(g), s), g) in S for s in S for g in G)


def all_normal_subgroups(G, n):
    """Every normal subgroup, by testing all subsets (|G| <= 12 only)."""
    G = sorted(G)
    e = ident(n)
    rest = [g for g in G if g != e]
    found = set()
    for bits in product((0, 1), repeat=len(rest)):
        S = {e} | {g for g, b in zip(rest, bits) if b}
        if is_subgroup(S, n) and is_normal(S, G):
            found.add(frozenset(S))
    return found


def closure_incremental(seeds, n):
    """Like ``closure`` but seeds already generated are skipped; cheap on big sets."""
    elems = {ident(n)}
    gens = []
    for s in map(tuple, seeds):
        if s in elems:
            continue
        gens.append(s)
        frontier = list(elems)
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = mul(x, g)
                    if y not in elems:
                        elems.add(y)
                        nxt.append(y)
            frontier = nxt
    return elems
