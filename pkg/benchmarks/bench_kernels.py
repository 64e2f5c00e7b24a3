"""Time the numba kernels against the numpy fallback.

    python benchmarks/bench_kernels.py --groups gamma S6 He7:3 --repeat 3

Every kernel is run once per backend before timing, so JIT compilation is
not counted. Results of both backends are compared for equality.
"""

import argparse
import time

import numpy as np

from hugheslab import kernels
from hugheslab.catalog import builtin_group


def best_of(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def bench_group(name, repeat, backends):
    tab = builtin_group(name).table()
    index, rows = tab.row_index, tab.rows
    p = int(min(d for d in range(2, tab.size + 1) if tab.size % d == 0))
    pw = tab.power_map(p)
    # every element of order > 2 as closure seeds, the worst case for H_p
    seeds = np.flatnonzero(tab.orders > 2)
    half = np.arange(tab.size // 2)
    cases = {
        "cayley_table": lambda: kernels.cayley_table(index),
        "element_orders": lambda: kernels.element_orders(rows),
        "closure_mask": lambda: kernels.closure_mask(tab.mul, seeds),
        "commutator_mask": lambda: kernels.commutator_mask(tab.mul, tab.inv, half, half),
        "pair_power_defects": lambda: kernels.pair_power_defects(tab.mul, tab.inv, pw),
    }
    timings = {}
    for kernel, fn in cases.items():
        results = {}
        for backend in backends:
            kernels.set_backend(backend)
            fn()  # warm up
            timings[(kernel, backend)], results[backend] = best_of(fn, repeat)
        values = list(results.values())
        if not all(np.array_equal(values[0], v) for v in values[1:]):
            raise SystemExit(f"{name}/{kernel}: backends disagree")
    return tab.size, timings


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--groups", nargs="+", default=["gamma", "S6", "He7:3"])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    backends = kernels.available_backends()
    prev = kernels.get_backend()
    try:
        print(f"{'group':<8} {'|G|':>6} {'kernel':<20}" + "".join(f"{b:>12}" for b in backends) + "   speedup")
        for name in args.groups:
            size, timings = bench_group(name, args.repeat, backends)
            for kernel in dict.fromkeys(k for k, _ in timings):
                row = [timings[(kernel, b)] for b in backends]
                speed = f"{row[-1] / row[0]:9.1f}x" if len(row) == 2 and row[0] > 0 else ""
                print(f"{name:<8} {size:>6} {kernel:<20}" + "".join(f"{t * 1e3:10.2f}ms" for t in row) + speed)
    finally:
        kernels.set_backend(prev)


if __name__ == "__main__":
    main()
