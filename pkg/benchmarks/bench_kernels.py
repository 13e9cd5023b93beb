"""Compare the numba and pure-numpy kernels on the workloads the package
actually runs: modular rank of evaluation matrices and hyperplane
enumeration over point subsets.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Both backends are called explicitly, so MINDIST_DISABLE_NUMBA does not
need to be toggled.  The first numba call (compilation, or cache load)
is excluded from timings.
"""
import argparse
import time
from itertools import combinations

import numpy as np

from mindist import _kernels

P = 2**31 - 1


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def workloads(rng):
    out = []
    for rows, cols in [(10, 35), (30, 84), (60, 120), (150, 220)]:
        a = rng.integers(0, P, size=(rows, cols), dtype=np.int64)
        out.append((f"rank mod p {rows}x{cols}", lambda b, a=a: _kernels.rank_mod_p(a, P, b)))
    for n, m in [(2, 12), (3, 12), (3, 16), (4, 14)]:
        pts = rng.integers(-9, 10, size=(m, n + 1)).astype(np.int64)
        combos = np.array(list(combinations(range(m), n)), dtype=np.int64)
        out.append((f"hyperplanes n={n} m={m} ({len(combos)} subsets)",
                    lambda b, p=pts, c=combos: _kernels.subset_normals(p, c, b)))
    return out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    backends = _kernels.available_backends()
    rng = np.random.default_rng(args.seed)
    print(f"backends: {', '.join(backends)}")
    print(f"{'workload':44s} " + " ".join(f"{b:>12s}" for b in backends) + "   speedup")
    for name, fn in workloads(rng):
        results = [fn(b) for b in backends]  # warm-up, also checks agreement
        for r in results[1:]:
            same = all(np.array_equal(x, y) for x, y in zip(r, results[0])) if isinstance(r, tuple) else r == results[0]
            assert same, f"backends disagree on {name}"
        times = [best_of(lambda b=b: fn(b), args.repeat) for b in backends]
        speed = f"{times[-1] / times[0]:8.1f}x" if len(times) == 2 else ""
        print(f"{name:44s} " + " ".join(f"{t * 1e3:10.2f}ms" for t in times) + f"  {speed}")


if __name__ == "__main__":
    main()
