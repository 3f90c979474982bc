#!/usr/bin/env python3
"""Benchmark the geometric-product kernel: compiled extension vs pure Python.

Multiplies dense random multivectors over Q (Fraction coefficients) and F_5
(modular ints) for a range of dimensions and reports the speedup.  Run after
`pip install -e . --no-build-isolation`; if the extension failed to build the
script still runs and says so.
"""

import random
import statistics
import time
from fractions import Fraction

from gspinlab._kernel import products as pure

try:
    from gspinlab._kernel import products_cy as compiled
except ImportError:
    compiled = None


def random_terms(n, rng, rational):
    out = {}
    for mask in range(1 << n):
        if rational:
            out[mask] = Fraction(rng.randint(-9, 9), rng.randint(1, 7))
        else:
            out[mask] = rng.randrange(5)
    return out


def time_impl(fn, xs, ys, diag, p, repeats):
    times = []
    for _ in range(repeats):
        start = time.perf_counter()
        fn(xs, ys, diag, p)
        times.append(time.perf_counter() - start)
    return statistics.median(times)


def main():
    rng = random.Random(7)
    print(f"{'case':<14} {'pure (ms)':>10} {'cython (ms)':>12} {'speedup':>8}")
    for n in (4, 6, 8, 10):
        for rational in (True, False):
            if rational:
                diag = tuple(Fraction(d) for d in ([1, -1, 2, 1, -2, 3, 1, -1, 2, 1][:n]))
                p = 0
                label = f"n={n} Q"
            else:
                diag = tuple(d % 5 for d in range(1, n + 1))
                p = 5
                label = f"n={n} F5"
            xs = random_terms(n, rng, rational)
            ys = random_terms(n, rng, rational)
            repeats = 5 if n >= 8 else 20
            t_pure = time_impl(pure.mul_terms, xs, ys, diag, p, repeats)
            if compiled is None:
                print(f"{label:<14} {t_pure * 1e3:>10.2f} {'n/a':>12} {'n/a':>8}")
                continue
            t_fast = time_impl(compiled.mul_terms, xs, ys, diag, p, repeats)
            assert compiled.mul_terms(xs, ys, diag, p) == pure.mul_terms(xs, ys, diag, p)
            print(
                f"{label:<14} {t_pure * 1e3:>10.2f} {t_fast * 1e3:>12.2f} "
                f"{t_pure / t_fast:>7.1f}x"
            )
    if compiled is None:
        print("\ncompiled extension not available; showing pure-Python timings only")


if __name__ == "__main__":
    main()
