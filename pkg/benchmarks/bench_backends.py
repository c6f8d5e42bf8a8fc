#!/usr/bin/env python3
"""Compare the compiled series kernel against the pure Python fallback.

The workload is the production hot path: the truncated exponential behind
the symmetric-power character sweep, plus bulk vector products.  Run from
the repository root:

    python3 benchmarks/bench_backends.py
"""

import argparse
import time
from fractions import Fraction

import linesing._kernel._slow as slow
from linesing.schubert import CohClass, SchubertBasis
from linesing.series import adams_weight_series
from linesing.sym import ch_nu

try:
    import linesing._kernel._fast as fast
except ImportError:
    fast = None


def sym_exponent_series(order):
    """Raw coefficient vectors of the series whose exp drives ch(Sym^t)."""
    nu = ch_nu()
    arg = adams_weight_series(-1, order) * 2
    for k in range(1, 5):
        arg = arg + adams_weight_series(k - 1, order) * nu[k]
    return [c.ratvec() for c in arg.coeffs]


def random_vectors(count, seed=12345):
    state = seed
    vecs = []
    for _ in range(count):
        nums = []
        for _ in range(6):
            state = (state * 6364136223846793005 + 1442695040888963407) % 2 ** 63
            nums.append(state % 19 - 9)
        state = (state * 6364136223846793005 + 1442695040888963407) % 2 ** 63
        vecs.append((*nums, state % 11 + 1))
    return vecs


def best_of(func, repeats=3):
    best = float("inf")
    for _ in range(repeats):
        started = time.perf_counter()
        func()
        best = min(best, time.perf_counter() - started)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--orders", type=int, nargs="+", default=[20, 40, 60])
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    backends = [("pure", slow)] + ([("compiled", fast)] if fast else [])
    if fast is None:
        print("note: compiled kernel not built; timing the fallback only\n")

    print(f"{'workload':<28}" + "".join(f"{name:>12}" for name, _ in backends)
          + ("     speedup" if fast else ""))
    for order in args.orders:
        raw = sym_exponent_series(order)
        times = [best_of(lambda m=mod: m.series_exp(raw, order), args.repeats)
                 for _, mod in backends]
        row = f"series_exp, order {order:<9}" + "".join(f"{t * 1e3:>10.1f}ms" for t in times)
        if fast:
            row += f"{times[0] / times[1]:>11.1f}x"
        print(row)

    vecs = random_vectors(2000)
    pairs = list(zip(vecs, vecs[1:] + vecs[:1]))

    def bulk(mod):
        mul = mod.vec_mul
        for a, b in pairs:
            mul(a, b)

    times = [best_of(lambda m=mod: bulk(m), args.repeats) for _, mod in backends]
    row = f"{'vec_mul x 2000':<28}" + "".join(f"{t * 1e3:>10.1f}ms" for t in times)
    if fast:
        row += f"{times[0] / times[1]:>11.1f}x"
    print(row)

    full_order = 60

    def sweep(mod):
        for t in range(full_order + 1):
            mod.series_exp(sym_exponent_series(t), t)

    times = [best_of(lambda m=mod: sweep(m), 1) for _, mod in backends]
    row = f"{'full Sym sweep, t <= 60':<28}" + "".join(f"{t * 1e3:>10.1f}ms" for t in times)
    if fast:
        row += f"{times[0] / times[1]:>11.1f}x"
    print(row)


if __name__ == "__main__":
    main()
