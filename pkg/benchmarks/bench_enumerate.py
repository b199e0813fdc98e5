"""Compare the numba Gray-code kernel with the numpy fallback.

    python3 benchmarks/bench_enumerate.py [--orders 12 16 20] [--repeat 3]

JIT compilation is triggered once before timing.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from boundpoly.catalog import random_graphs
from boundpoly.graphs import cycle_graph
from boundpoly.kernels import available_backends, enumerate_counts


def best_of(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--orders", type=int, nargs="+", default=[12, 16, 20])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--marked", action="store_true", help="time the two-vertex restricted split")
    args = ap.parse_args()

    backends = available_backends()
    warm = cycle_graph(6).adj
    for b in backends:
        enumerate_counts(warm, backend=b)
        enumerate_counts(warm, 0, 1, backend=b)

    uv = (0, 1) if args.marked else (-1, -1)
    print(f"{'graph':<14}" + "".join(f"{b:>12}" for b in backends) + f"{'speedup':>10}")
    for n in args.orders:
        for label, g in ((f"C{n}", cycle_graph(n)), (f"G({n},1/2)", random_graphs(n, 1, seed=n)[0])):
            res = {}
            secs = {}
            for b in backends:
                secs[b] = best_of(lambda: res.__setitem__(b, enumerate_counts(g.adj, *uv, backend=b)), args.repeat)
            if len(backends) == 2:
                assert np.array_equal(res["numba"], res["numpy"]), f"backends disagree on {label}"
                ratio = f"{secs['numpy'] / secs['numba']:>9.1f}x"
            else:
                ratio = f"{'-':>10}"
            print(f"{label:<14}" + "".join(f"{secs[b]:>11.4f}s" for b in backends) + ratio)


if __name__ == "__main__":
    main()
