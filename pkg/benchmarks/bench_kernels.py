"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--n 374] [--repeat 200]
"""
import argparse
import importlib
import timeit

import numpy as np

from cogscik import _pykernels


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=374)
    ap.add_argument("--k", type=int, default=10)
    ap.add_argument("--centroids", type=int, default=10)
    ap.add_argument("--repeat", type=int, default=200)
    args = ap.parse_args()

    backends = {"python": _pykernels}
    try:
        backends["cython"] = importlib.import_module("cogscik._ckernels")
    except ImportError:
        print("compiled kernels not available; benchmarking the fallback only")

    rng = np.random.default_rng(0)
    pts = np.round(rng.uniform(-1, 1, (args.n, 5)), 8)
    point = np.round(rng.uniform(-1, 1, 5), 8)
    w = np.ones(5)
    cents = pts[: args.centroids].copy()
    cases = {
        "nearest_k": lambda b: b.nearest_k(pts, point, w, args.k),
        "distances": lambda b: b.distances(pts, point, w),
        "assign": lambda b: b.assign(pts, cents),
    }
    print(f"n={args.n} k={args.k} centroids={args.centroids} repeat={args.repeat}")
    print(f"{'kernel':<12}" + "".join(f"{name:>14}" for name in backends) + f"{'speedup':>10}")
    for case, fn in cases.items():
        times = {}
        for name, mod in backends.items():
            t = min(timeit.repeat(lambda: fn(mod), number=args.repeat, repeat=3))
            times[name] = t / args.repeat * 1e6
        row = f"{case:<12}" + "".join(f"{times[n]:>12.1f}us" for n in backends)
        if "cython" in times:
            row += f"{times['python'] / times['cython']:>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
