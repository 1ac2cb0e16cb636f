"""Compare the compiled and pure-Python tree-counting kernels.

    python benchmarks/bench_kernels.py [--genus 16 20 24] [--repeat 3]
"""

import argparse
import time

from gapseq import _pykernels
from gapseq.enumerator import TreeNode

try:
    from gapseq import _kernels
except ImportError:
    _kernels = None


def best_of(fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--genus", type=int, nargs="+", default=[14, 18, 22, 25])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    if _kernels is None:
        print("compiled kernel not built; only the Python kernel is timed")
    print(f"{'genus':>5} {'count':>10} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for g in args.genus:
        root = TreeNode.root(g)
        call = (root.dec, root.frobenius, 0, g)
        t_py, c_py = best_of(lambda: _pykernels.count_levels(*call), args.repeat)
        if _kernels is None:
            print(f"{g:>5} {c_py[-1]:>10} {t_py:>10.4f} {'-':>10} {'-':>8}")
            continue
        t_cy, c_cy = best_of(lambda: _kernels.count_levels(*call), args.repeat)
        assert c_cy == c_py, (g, c_cy, c_py)
        print(f"{g:>5} {c_py[-1]:>10} {t_py:>10.4f} {t_cy:>10.4f} {t_py / t_cy:>7.1f}x")


if __name__ == "__main__":
    main()
