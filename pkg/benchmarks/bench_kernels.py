"""Time the numba and numpy scoring kernels on the same sweeps.

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import math
import time

import numpy as np

from evenset import _kernels
from evenset.properties import distance_matrix

CASES = [(16, 8), (20, 10), (24, 12)]


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    rows = []
    for c, d in CASES:
        W = distance_matrix(c, "euclidean")
        kernels = [
            ("fourier", lambda p, c=c, d=d: getattr(_kernels, f"fourier_scores_{p}")(c, d, d)),
            ("pair", lambda p, c=c, d=d, W=W: getattr(_kernels, f"pair_scores_{p}")(c, d, W)),
        ]
        for name, call in kernels:
            t_np, ref = best_of(lambda: call("numpy"), args.repeat)
            if _kernels.HAVE_NUMBA:
                call("numba")  # compile / load cache outside the timing
                t_nb, got = best_of(lambda: call("numba"), args.repeat)
                assert np.allclose(ref, got, atol=1e-9)
            else:
                t_nb = float("nan")
            rows.append((name, c, d, math.comb(c, d), t_np, t_nb))

    print(f"{'kernel':<8}{'c':>4}{'d':>4}{'C(c,d)':>10}{'numpy s':>10}{'numba s':>10}{'speedup':>9}")
    for name, c, d, n, t_np, t_nb in rows:
        print(f"{name:<8}{c:>4}{d:>4}{n:>10}{t_np:>10.3f}{t_nb:>10.3f}{t_np / t_nb:>9.1f}")


if __name__ == "__main__":
    main()
