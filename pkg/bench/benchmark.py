"""Time the compiled kernels against the numpy fallback.

    python bench/benchmark.py              # default cases
    python bench/benchmark.py --quick      # small sizes only

Each case runs once per backend, checks that both produce the same
result, and prints one row per (case, backend).
"""

import argparse
import time

import numpy as np

from palin import _pykernels
from palin.intrinsic import base_range

try:
    from palin import _ckernels
except ImportError:
    _ckernels = None


def _bits(mod, k, N):
    lo, hi = base_range(k, N)
    bits = np.zeros(N // 8 + 1, dtype=np.uint8)
    mod.mark_bits(bits, k, lo, hi, N)
    return int(np.bitwise_count(bits).sum())


def _tally(mod, k, N):
    lo, hi = base_range(k, N)
    counts = np.zeros(N + 1, dtype=np.uint16)
    mod.tally(counts, k, lo, hi, N)
    return int(np.count_nonzero(counts >= 2))


def _merge(mod, k, N):
    lo, hi = base_range(k, N)
    hist, _ = mod.merge_histogram(k, lo, hi, 1, N)
    return int(hist[1:].sum())


KERNELS = {"mark_bits": _bits, "tally": _tally, "merge": _merge}

CASES = [
    ("mark_bits", 3, 10**6),
    ("mark_bits", 3, 10**7),
    ("mark_bits", 3, 10**8),
    ("mark_bits", 9, 10**9 - 1),
    ("tally", 3, 10**7),
    ("tally", 4, 10**7),
    ("merge", 3, 10**6),
    ("merge", 4, 10**7),
]
QUICK = [c for c in CASES if c[2] <= 10**6] + [("tally", 4, 10**5), ("merge", 5, 10**5)]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--quick", action="store_true")
    ap.add_argument("--skip-python-merge-above", type=int, default=10**6,
                    help="the heapq fallback merge is slow; skip it beyond this N")
    args = ap.parse_args()

    backends = [("python", _pykernels)]
    if _ckernels is not None:
        backends.insert(0, ("compiled", _ckernels))
    else:
        print("compiled extension not available; timing the fallback only")

    print(f"{'kernel':<10} {'k':>2} {'N':>12} {'backend':<9} {'seconds':>9} {'result':>10}")
    for kernel, k, N in QUICK if args.quick else CASES:
        results = {}
        for name, mod in backends:
            if name == "python" and kernel == "merge" and N > args.skip_python_merge_above:
                print(f"{kernel:<10} {k:>2} {N:>12} {name:<9} {'skipped':>9}")
                continue
            t0 = time.perf_counter()
            results[name] = KERNELS[kernel](mod, k, N)
            dt = time.perf_counter() - t0
            print(f"{kernel:<10} {k:>2} {N:>12} {name:<9} {dt:>9.3f} {results[name]:>10}")
        if len(set(results.values())) > 1:
            raise SystemExit(f"backends disagree on {kernel} k={k} N={N}: {results}")


if __name__ == "__main__":
    main()
