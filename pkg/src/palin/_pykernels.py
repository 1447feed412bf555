"""numpy fallback for the compiled kernels; same signatures and results."""

from __future__ import annotations

import heapq
from typing import Iterator

import numpy as np

from .palgen import count_all, count_upto, palindrome_from_code, prefix_weights
from .radix import digit_list

# values gathered before one bincount flush in ``tally``
_BATCH = 1 << 22


def _base_values(k: int, b: int, lo: int, hi: int) -> np.ndarray:
    """All k-palindromes of base ``b`` in [lo, hi] as a sorted int64 array."""
    h = k - k // 2
    first = count_upto(k, b, lo - 1) if lo > 1 else 0
    last = count_upto(k, b, hi)
    if last <= first:
        return np.empty(0, dtype=np.int64)
    codes = np.arange(first, last, dtype=np.int64) + b ** (h - 1)
    vals = np.zeros_like(codes)
    for j, w in enumerate(prefix_weights(k, b)):
        vals += (codes // b ** (h - 1 - j)) % b * w
    return vals


def mark_bits(bits: np.ndarray, k: int, b_lo: int, b_hi: int, N: int) -> int:
    visited = 0
    for b in range(b_lo, b_hi + 1):
        v = _base_values(k, b, 1, N)
        if v.size:
            np.bitwise_or.at(bits, v >> 3, np.left_shift(1, v & 7).astype(np.uint8))
            visited += v.size
    return visited


def tally(counts: np.ndarray, k: int, b_lo: int, b_hi: int, N: int) -> int:
    visited = 0
    pending: list[np.ndarray] = []
    size = 0

    def flush() -> None:
        if not pending:
            return
        add = np.bincount(np.concatenate(pending), minlength=N + 1)
        np.minimum(counts + add, 65535, out=add)
        counts[:] = add
        pending.clear()

    for b in range(b_lo, b_hi + 1):
        v = _base_values(k, b, 1, N)
        if v.size:
            pending.append(v)
            size += v.size
            visited += v.size
        if size >= _BATCH:
            flush()
            size = 0
    flush()
    return visited


def _stream(k: int, b: int, lo: int, hi: int) -> Iterator[int]:
    h = k - k // 2
    skip = count_upto(k, b, lo - 1) if lo > 1 else 0
    if skip >= count_all(k, b):
        return
    digits = digit_list(b ** (h - 1) + skip, b)
    weights = prefix_weights(k, b)
    val = palindrome_from_code(b ** (h - 1) + skip, b, k)
    top = b - 1
    while val <= hi:
        yield val
        j = h - 1
        while j >= 0 and digits[j] == top:
            digits[j] = 0
            val -= top * weights[j]
            j -= 1
        if j < 0:
            return
        digits[j] += 1
        val += weights[j]


def merge_histogram(k: int, b_lo: int, b_hi: int, lo: int, hi: int, collect_ell: int = 0):
    nb = max(b_hi - b_lo + 1, 0)
    hist = np.zeros(nb + 2, dtype=np.int64)
    collected: list[int] = []
    if nb == 0 or lo > hi:
        return hist, collected
    merged = heapq.merge(*(_stream(k, b, lo, hi) for b in range(b_lo, b_hi + 1)))
    cur, run = -1, 0
    for v in merged:
        if v == cur:
            run += 1
            continue
        if run:
            hist[run] += 1
            if collect_ell and run >= collect_ell:
                collected.append(cur)
        cur, run = v, 1
    if run:
        hist[run] += 1
        if collect_ell and run >= collect_ell:
            collected.append(cur)
    return hist, collected
