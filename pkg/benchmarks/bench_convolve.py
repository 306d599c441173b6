#!/usr/bin/env python3
"""Compare the compiled and pure-Python convolution kernels.

Times the raw kernels on dense integer arrays and the end-to-end series
workloads that sit on top of them (the hot path of every verification).

Usage: python benchmarks/bench_convolve.py [--repeat N]
"""

import argparse
import random
import time

from qident import _coeffcore_py as pure_kernel
from qident import backend, blocks

try:
    from qident import _coeffcore as c_kernel
except ImportError:
    c_kernel = None


def timeit(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def raw_kernel_case(kernel, n):
    rng = random.Random(42)
    ra = [rng.randrange(-99, 100) for _ in range(n)]
    ia = [rng.randrange(-99, 100) for _ in range(n)]
    rb = [rng.randrange(-99, 100) for _ in range(n)]
    ib = [rng.randrange(-99, 100) for _ in range(n)]
    return lambda: kernel.convolve(ra, ia, rb, ib, n)


def series_cases():
    # dense products as they occur inside deep verifications; the inputs
    # are prepared outside the timed region
    partition = blocks.pochhammer(blocks.PochSpec(-1, 1, 1), 400).inverse()
    mixed = blocks.gamma_k(1, 250).inverse()  # coefficients with sqrt2 parts
    return [
        ("partition series square (400)", lambda: partition * partition),
        ("Q(sqrt2) series square (250)", lambda: mixed * mixed),
    ]


def with_kernel(kernel, fn):
    saved = backend.convolve, backend.convolve_rational
    backend.convolve = kernel.convolve
    backend.convolve_rational = kernel.convolve_rational
    try:
        return fn()
    finally:
        backend.convolve, backend.convolve_rational = saved


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    if c_kernel is None:
        print("compiled kernel not built; showing pure-Python timings only")
    kernels = [("python", pure_kernel)] + (
        [("c", c_kernel)] if c_kernel is not None else []
    )

    print(f"selected backend at import: {backend.KERNEL_BACKEND}")
    print(f"{'case':<28} " + " ".join(f"{name:>12}" for name, _ in kernels)
          + ("   speedup" if c_kernel else ""))
    for n in (256, 1024, 2048):
        times = [timeit(raw_kernel_case(k, n), args.repeat) for _, k in kernels]
        row = f"raw convolve n={n:<5}         " + " ".join(
            f"{t * 1e3:>10.1f}ms" for t in times
        )
        if len(times) == 2:
            row += f"   {times[0] / times[1]:>6.1f}x"
        print(row)

    for label, workload in series_cases():
        times = [
            timeit(lambda k=k: with_kernel(k, workload), args.repeat)
            for _, k in kernels
        ]
        row = f"{label:<28} " + " ".join(f"{t * 1e3:>10.1f}ms" for t in times)
        if len(times) == 2:
            row += f"   {times[0] / times[1]:>6.1f}x"
        print(row)


if __name__ == "__main__":
    main()
