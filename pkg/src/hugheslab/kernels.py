"""Hot loops over enumerated groups.

Every kernel has a numba implementation and a pure-numpy one with identical
results. The numpy path is used when numba is missing or when
``HUGHESLAB_DISABLE_NUMBA`` is set to a true value; :func:`set_backend`
switches at runtime (tests and the benchmark use it).

Elements are referred to by their index in the canonical (lexicographic)
element list. ``rows`` is the ``(m, n)`` int32 array of image arrays and
``table[i, j]`` is the index of ``rows[i] o rows[j]`` (``rows[j]`` first).
"""

from __future__ import annotations

import os
from functools import lru_cache

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

__all__ = [
    "BACKENDS",
    "available_backends",
    "get_backend",
    "set_backend",
    "row_keys",
    "RowIndex",
    "cayley_table",
    "closure_mask",
    "element_orders",
    "commutator_mask",
    "pair_power_defects",
]

BACKENDS = ("numba", "numpy")


def _env_disables_numba() -> bool:
    return os.environ.get("HUGHESLAB_DISABLE_NUMBA", "").strip().lower() in {"1", "true", "yes", "on"}


_backend = "numpy" if (numba is None or _env_disables_numba()) else "numba"


def available_backends() -> tuple[str, ...]:
    return BACKENDS if numba is not None else ("numpy",)


def get_backend() -> str:
    return _backend


def set_backend(name: str) -> str:
    """Select the kernel backend; returns the previous one."""
    global _backend
    if name not in available_backends():
        raise ValueError(f"unknown or unavailable backend {name!r}")
    prev, _backend = _backend, name
    return prev


@lru_cache(maxsize=None)
def _weights(n: int) -> np.ndarray:
    rng = np.random.default_rng(0x5EED_4B1D)
    return rng.integers(1, 2**63, size=n, dtype=np.uint64) | np.uint64(1)


def row_keys(rows: np.ndarray) -> np.ndarray:
    """64-bit hash of each image array (wrapping arithmetic)."""
    w = _weights(rows.shape[1])
    return (rows.astype(np.uint64) * w).sum(axis=1, dtype=np.uint64)


class RowIndex:
    """Lookup from image arrays to element indices via sorted hash keys."""

    def __init__(self, rows: np.ndarray):
        self.rows = np.ascontiguousarray(rows, dtype=np.int32)
        keys = row_keys(self.rows)
        self.order = np.argsort(keys, kind="stable").astype(np.int32)
        self.sorted_keys = keys[self.order]
        self.weights = _weights(self.rows.shape[1])

    def lookup(self, queries: np.ndarray) -> np.ndarray:
        """Index of each query row, or -1 when it is not an element."""
        queries = np.ascontiguousarray(queries, dtype=np.int32)
        keys = row_keys(queries)
        pos = np.searchsorted(self.sorted_keys, keys)
        pos_c = np.minimum(pos, len(self.sorted_keys) - 1)
        cand = self.order[pos_c]
        ok = (self.sorted_keys[pos_c] == keys) & (self.rows[cand] == queries).all(axis=1)
        out = np.where(ok, cand, -1).astype(np.int64)
        # slow path only for queries whose key is shared by several rows
        for q in np.nonzero(~ok & (self.sorted_keys[pos_c] == keys))[0]:
            p = pos[q]
            while p < len(self.sorted_keys) and self.sorted_keys[p] == keys[q]:
                c = self.order[p]
                if np.array_equal(self.rows[c], queries[q]):
                    out[q] = c
                    break
                p += 1
        return out


# --------------------------------------------------------------------------
# numpy implementations


def _np_cayley_table(index: RowIndex) -> np.ndarray:
    rows = index.rows
    m = rows.shape[0]
    table = np.empty((m, m), dtype=np.int32)
    for i in range(m):
        found = index.lookup(rows[i][rows])
        if (found < 0).any():
            raise ValueError("element list is not closed under composition")
        table[i] = found
    return table


def _np_closure_mask(table: np.ndarray, gens: np.ndarray, identity: int) -> np.ndarray:
    mask = np.zeros(table.shape[0], dtype=np.bool_)
    mask[identity] = True
    frontier = np.array([identity], dtype=np.int64)
    if len(gens) == 0:
        return mask
    while frontier.size:
        cand = np.unique(table[np.ix_(frontier, gens)].ravel())
        new = cand[~mask[cand]]
        mask[new] = True
        frontier = new
    return mask


def _np_element_orders(rows: np.ndarray) -> np.ndarray:
    m, n = rows.shape
    orders = np.zeros(m, dtype=np.int64)
    ident = np.arange(n, dtype=rows.dtype)
    cur = rows.copy()
    k = 1
    pending = np.arange(m)
    while pending.size:
        done = (cur[pending] == ident).all(axis=1)
        orders[pending[done]] = k
        pending = pending[~done]
        if not pending.size:
            break
        # cur <- rows o cur, so cur[i] = rows[i]^(k+1)
        cur[pending] = np.take_along_axis(rows[pending], cur[pending], axis=1)
        k += 1
    return orders


def _np_commutator_mask(table, inv, left, right) -> np.ndarray:
    """Mask of all commutators a^-1 b^-1 a b with a in ``left``, b in ``right``."""
    mask = np.zeros(table.shape[0], dtype=np.bool_)
    if len(left) == 0 or len(right) == 0:
        return mask
    a_inv_b_inv = table[np.ix_(inv[left], inv[right])]
    ab = table[np.ix_(left, right)]
    mask[table[a_inv_b_inv, ab].ravel()] = True
    return mask


def _np_pair_power_defects(table, inv, pw) -> np.ndarray:
    """D[x, y] = (x^p y^p)^-1 (xy)^p for all pairs, given the p-th power map ``pw``."""
    xp_yp = table[np.ix_(pw, pw)]
    xy_p = pw[table]
    return table[inv[xp_yp], xy_p]


# --------------------------------------------------------------------------
# numba implementations

if numba is not None:

    @numba.njit(cache=True, nogil=True)
    def _nb_cayley_table(rows, order, sorted_keys, weights):
        m, n = rows.shape
        table = np.empty((m, m), dtype=np.int32)
        prod = np.empty(n, dtype=np.int32)
        for i in range(m):
            a = rows[i]
            for j in range(m):
                b = rows[j]
                key = np.uint64(0)
                for k in range(n):
                    v = a[b[k]]
                    prod[k] = v
                    key += np.uint64(v) * weights[k]
                lo = np.searchsorted(sorted_keys, key)
                found = -1
                while lo < m and sorted_keys[lo] == key:
                    c = order[lo]
                    same = True
                    for k in range(n):
                        if rows[c, k] != prod[k]:
                            same = False
                            break
                    if same:
                        found = c
                        break
                    lo += 1
                if found < 0:
                    return table, False
                table[i, j] = found
        return table, True

    @numba.njit(cache=True, nogil=True)
    def _nb_closure_mask(table, gens, identity):
        m = table.shape[0]
        mask = np.zeros(m, dtype=np.bool_)
        queue = np.empty(m, dtype=np.int64)
        mask[identity] = True
        queue[0] = identity
        head, tail = 0, 1
        while head < tail:
            x = queue[head]
            head += 1
            for g in gens:
                y = table[x, g]
                if not mask[y]:
                    mask[y] = True
                    queue[tail] = y
                    tail += 1
        return mask

    @numba.njit(cache=True, nogil=True)
    def _nb_element_orders(rows):
        m, n = rows.shape
        orders = np.empty(m, dtype=np.int64)
        seen = np.zeros(n, dtype=np.bool_)
        for i in range(m):
            seen[:] = False
            acc = 1
            for start in range(n):
                if seen[start]:
                    continue
                length = 0
                j = start
                while not seen[j]:
                    seen[j] = True
                    j = rows[i, j]
                    length += 1
                a, b = acc, length
                while b:
                    a, b = b, a % b
                acc = acc // a * length
            orders[i] = acc
        return orders

    @numba.njit(cache=True, nogil=True)
    def _nb_commutator_mask(table, inv, left, right):
        mask = np.zeros(table.shape[0], dtype=np.bool_)
        for a in left:
            ia = inv[a]
            for b in right:
                mask[table[table[ia, inv[b]], table[a, b]]] = True
        return mask

    @numba.njit(cache=True, nogil=True)
    def _nb_pair_power_defects(table, inv, pw):
        m = table.shape[0]
        out = np.empty((m, m), dtype=np.int32)
        for x in range(m):
            px = pw[x]
            for y in range(m):
                out[x, y] = table[inv[table[px, pw[y]]], pw[table[x, y]]]
        return out


# --------------------------------------------------------------------------
# dispatch


def cayley_table(index: RowIndex) -> np.ndarray:
    if _backend == "numba":
        table, ok = _nb_cayley_table(index.rows, index.order, index.sorted_keys, index.weights)
        if not ok:
            raise ValueError("element list is not closed under composition")
        return table
    return _np_cayley_table(index)


def closure_mask(table: np.ndarray, gens, identity: int = 0) -> np.ndarray:
    """Membership mask of the subgroup generated by the element indices ``gens``."""
    gens = np.asarray(gens, dtype=np.int64).ravel()
    if _backend == "numba":
        return _nb_closure_mask(table, gens, identity)
    return _np_closure_mask(table, gens, identity)


def element_orders(rows: np.ndarray) -> np.ndarray:
    rows = np.ascontiguousarray(rows, dtype=np.int32)
    if _backend == "numba":
        return _nb_element_orders(rows)
    return _np_element_orders(rows)


def commutator_mask(table, inv, left, right) -> np.ndarray:
    left = np.asarray(left, dtype=np.int64)
    right = np.asarray(right, dtype=np.int64)
    if _backend == "numba":
        return _nb_commutator_mask(table, inv, left, right)
    return _np_commutator_mask(table, inv, left, right)


def pair_power_defects(table, inv, pw) -> np.ndarray:
    if _backend == "numba":
        return _nb_pair_power_defects(table, inv, np.asarray(pw, dtype=np.int32))
    return _np_pair_power_defects(table, inv, np.asarray(pw, dtype=np.int32))
