"""Time the numba and numpy grid kernels against each other.

    python benchmarks/bench_kernels.py [--repeat N] [--rank R]

Grids cover one full period of weights on a three-point curve.  The first
numba call compiles (or loads from cache) and is reported separately.
"""
import argparse
import random
import time

import numpy as np

from parbun import kernels

CURVES = [
    ("small", [2, 3, 4], [1, 2, 1]),
    ("medium", [8, 9, 10], [3, 1, 2]),
    ("large", [24, 30, 28], [2, 3, 1]),
]


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--rank", type=int, default=8, help="pieces evaluated per timing")
    args = ap.parse_args()

    backends = ["numpy"] + (["numba"] if kernels.HAVE_NUMBA else [])
    if not kernels.HAVE_NUMBA:
        print("numba not installed; timing numpy only")

    rng = random.Random(0)
    if kernels.HAVE_NUMBA:
        t0 = time.perf_counter()
        kernels.piece_grid(0, [0], [2], [1], backend="numba")
        kernels.bbn_grid(0, [0], [0], [2], [1], backend="numba")
        print(f"numba warm-up (compile or cache load): {time.perf_counter() - t0:.3f} s")

    print(f"{'grid':<8}{'points':>10}{'kernel':>8}" + "".join(f"{b:>12}" for b in backends))
    for name, dens, mults in CURVES:
        size = int(np.prod(dens))
        pieces = [([rng.randrange(r) for r in dens], [rng.randrange(r) for r in dens], rng.randint(-9, 9))
                  for _ in range(args.rank)]
        row = {}
        for b in backends:
            row[("eval", b)] = best_of(
                lambda: [kernels.piece_grid(d, n1, dens, mults, backend=b) for n1, _, d in pieces], args.repeat)
            row[("bbn", b)] = best_of(
                lambda: [kernels.bbn_grid(d, n1, n2, dens, mults, backend=b) for n1, n2, d in pieces], args.repeat)
            # both backends must agree on what they timed
            n1, n2, d = pieces[0]
            assert np.array_equal(kernels.bbn_grid(d, n1, n2, dens, mults, backend=b),
                                  kernels.bbn_grid(d, n1, n2, dens, mults, backend="numpy"))
        for kernel in ("eval", "bbn"):
            cells = "".join(f"{row[(kernel, b)] * 1e3:>10.2f}ms" for b in backends)
            print(f"{name:<8}{size:>10}{kernel:>8}{cells}")


if __name__ == "__main__":
    main()
