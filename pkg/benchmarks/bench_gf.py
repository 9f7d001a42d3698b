"""Compare the compiled and pure-Python row-reduction kernels.

Usage: python3 benchmarks/bench_gf.py [--repeat N]
"""

import argparse
import time

import numpy as np

from nakalab import gf
from nakalab.classify import classify
from nakalab.generate import lambda_t
from nakalab.hereditary import orientation


def _time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def kernel_workload(rng, sizes=(4, 8, 16, 32), count=200, p=2):
    mats = [rng.integers(0, p, size=(n, n)) for n in sizes for _ in range(count)]

    def run():
        for m in mats:
            gf.rref(m, p)

    return run


def classify_workload():
    algs = [lambda_t(4), orientation("E8", 0), orientation("D6", 5)]

    def run():
        for a in algs:
            classify(a)

    return run


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    rng = np.random.default_rng(0)
    work = {"rref (800 random matrices)": kernel_workload(rng), "classify (Lambda_4, E8, D6)": classify_workload()}
    have_compiled = True
    try:
        gf.use_backend("compiled")
    except ImportError:
        have_compiled = False
    print(f"{'workload':32} {'python s':>10} {'compiled s':>11} {'speedup':>8}")
    for name, fn in work.items():
        gf.use_backend("python")
        t_py = _time(fn, args.repeat)
        if have_compiled:
            gf.use_backend("compiled")
            t_c = _time(fn, args.repeat)
            print(f"{name:32} {t_py:10.3f} {t_c:11.3f} {t_py / t_c:7.1f}x")
        else:
            print(f"{name:32} {t_py:10.3f} {'n/a':>11}")


if __name__ == "__main__":
    main()
