"""Benchmark the numba-accelerated GF(q) kernels against the numpy fallback.

Run twice, once per backend:

    python3 benchmarks/bench_gfq.py
    FORMATA_NO_NUMBA=1 python3 benchmarks/bench_gfq.py
"""

import sys
import time
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from formata import gfq


def bench(label, fn, repeats=5):
    fn()  # warm-up (numba compilation)
    t0 = time.perf_counter()
    for _ in range(repeats):
        fn()
    dt = (time.perf_counter() - t0) / repeats
    print(f"  {label:<28s} {dt * 1e3:9.2f} ms")


def main():
    q = 10_007
    rng = np.random.default_rng(42)
    print(f"backend: {gfq.backend_name()}  (q = {q})")
    for n in (50, 120, 250):
        A = rng.integers(0, q, size=(n, n))
        B = rng.integers(0, q, size=(n, n))
        print(f"n = {n}")
        bench("rref_mod", lambda: gfq.rref_mod(A, q))
        bench("charpoly_mod", lambda: gfq.charpoly_mod(A, q))
        bench("matmul_mod", lambda: gfq.matmul_mod(A, B, q))
    cp = gfq.charpoly_mod(rng.integers(0, q, size=(60, 60)), q)
    bench("poly_roots_mod (deg 60)", lambda: gfq.poly_roots_mod(cp, q))


if __name__ == "__main__":
    main()
