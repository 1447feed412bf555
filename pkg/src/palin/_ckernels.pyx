# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: per-base palindrome walks feeding a bitset, a tally
table or a k-way merge. Values are int64; callers keep N below 2**62 so
an odometer step (value + weight <= 2N) never overflows."""

from libc.stdint cimport int64_t, uint8_t, uint16_t
from libc.stdlib cimport malloc, free
from libcpp.vector cimport vector

import numpy as np

cdef enum:
    MAXD = 64

cdef struct Walker:
    int64_t val
    int64_t base
    int h
    int64_t* digits
    int64_t* weights


cdef int _digits(int64_t n, int64_t b, int64_t* out) noexcept nogil:
    # most-significant first; returns length
    cdef int64_t tmp[MAXD]
    cdef int m = 0, j
    while n > 0:
        tmp[m] = n % b
        n = n // b
        m += 1
    for j in range(m):
        out[j] = tmp[m - 1 - j]
    return m


cdef int64_t _count_upto(int k, int64_t b, int64_t N) noexcept nogil:
    cdef int64_t nd[MAXD]
    cdef int m, h, j
    cdef int64_t code = 0, base_code = 1, total
    if N < 1:
        return 0
    h = k - k // 2
    for j in range(h - 1):
        base_code *= b
    total = (b - 1) * base_code
    m = _digits(N, b, nd)
    if m < k:
        return 0
    if m > k:
        return total
    for j in range(h):
        code = code * b + nd[j]
    # mirrored tail vs N's tail, most-significant first
    for j in range(h, k):
        if nd[k - 1 - j] < nd[j]:
            return code - base_code + 1
        if nd[k - 1 - j] > nd[j]:
            return code - base_code
    return code - base_code + 1


def count_upto(int k, int64_t b, int64_t N):
    return _count_upto(k, b, N)


cdef bint _init(Walker* w, int k, int64_t b, int64_t lo) noexcept nogil:
    """Position ``w`` on the first k-palindrome >= lo; False if none."""
    cdef int h = k - k // 2, j, q, hi, lw
    cdef int64_t base_code = 1, skip = 0, p, a
    for j in range(h - 1):
        base_code *= b
    if lo > 1:
        skip = _count_upto(k, b, lo - 1)
    if skip >= (b - 1) * base_code:
        return False
    w.base = b
    w.h = h
    _digits(base_code + skip, b, w.digits)
    w.val = 0
    for j in range(h):
        hi = k - 1 - j
        lw = j
        p = 1
        for q in range(lw):
            p *= b
        a = p
        for q in range(hi - lw):
            a *= b
        w.weights[j] = a + p if hi != lw else a
        w.val += w.digits[j] * w.weights[j]
    return True


cdef bint _step(Walker* w) noexcept nogil:
    """Advance to the next palindrome; False once the prefixes run out."""
    cdef int j = w.h - 1
    cdef int64_t top = w.base - 1
    while j >= 0 and w.digits[j] == top:
        w.digits[j] = 0
        w.val -= top * w.weights[j]
        j -= 1
    if j < 0:
        return False
    w.digits[j] += 1
    w.val += w.weights[j]
    return True


def mark_bits(uint8_t[::1] bits, int k, int64_t b_lo, int64_t b_hi, int64_t N):
    """Set bit n of ``bits`` for every k-palindrome n <= N in bases b_lo..b_hi."""
    cdef Walker w
    cdef int64_t dbuf[MAXD]
    cdef int64_t wbuf[MAXD]
    cdef int64_t b, v, visited = 0
    w.digits = dbuf
    w.weights = wbuf
    if k > MAXD:
        raise ValueError("length too large for compiled kernel")
    with nogil:
        for b in range(b_lo, b_hi + 1):
            if not _init(&w, k, b, 1):
                continue
            while w.val <= N:
                v = w.val
                bits[v >> 3] |= <uint8_t>(1 << (v & 7))
                visited += 1
                if not _step(&w):
                    break
    return visited


def tally(uint16_t[::1] counts, int k, int64_t b_lo, int64_t b_hi, int64_t N):
    """counts[n] += 1 (saturating) for every k-palindrome n <= N per base."""
    cdef Walker w
    cdef int64_t dbuf[MAXD]
    cdef int64_t wbuf[MAXD]
    cdef int64_t b, visited = 0
    w.digits = dbuf
    w.weights = wbuf
    if k > MAXD:
        raise ValueError("length too large for compiled kernel")
    with nogil:
        for b in range(b_lo, b_hi + 1):
            if not _init(&w, k, b, 1):
                continue
            while w.val <= N:
                if counts[w.val] != 65535:
                    counts[w.val] += 1
                visited += 1
                if not _step(&w):
                    break
    return visited


cdef inline void _sift_down(Walker* ws, int* heap, int size, int i) noexcept nogil:
    cdef int c, t
    while True:
        c = 2 * i + 1
        if c >= size:
            return
        if c + 1 < size and ws[heap[c + 1]].val < ws[heap[c]].val:
            c += 1
        if ws[heap[i]].val <= ws[heap[c]].val:
            return
        t = heap[i]
        heap[i] = heap[c]
        heap[c] = t
        i = c


def merge_histogram(int k, int64_t b_lo, int64_t b_hi, int64_t lo, int64_t hi, int collect_ell=0):
    """k-way merge of the per-base streams restricted to [lo, hi].

    Returns ``(hist, collected)``: ``hist[m]`` counts distinct values met by
    exactly m streams; ``collected`` lists values met by >= collect_ell
    streams (empty when collect_ell is 0).
    """
    cdef int nb, size = 0, i, top
    cdef int h = k - k // 2
    cdef int64_t b, cur = -1, run = 0
    cdef Walker* ws
    cdef int* heap
    cdef int64_t* store
    cdef vector[int64_t] coll
    cdef int64_t[::1] hv
    if k > MAXD:
        raise ValueError("length too large for compiled kernel")
    nb = <int>max(b_hi - b_lo + 1, 0)
    hist = np.zeros(nb + 2, dtype=np.int64)
    hv = hist
    if nb == 0 or lo > hi:
        return hist, []
    ws = <Walker*>malloc(nb * sizeof(Walker))
    heap = <int*>malloc(nb * sizeof(int))
    store = <int64_t*>malloc(2 * nb * h * sizeof(int64_t))
    if ws == NULL or heap == NULL or store == NULL:
        free(ws)
        free(heap)
        free(store)
        raise MemoryError()
    try:
        with nogil:
            for i in range(nb):
                b = b_lo + i
                ws[i].digits = store + 2 * i * h
                ws[i].weights = store + 2 * i * h + h
                if _init(&ws[i], k, b, lo) and ws[i].val <= hi:
                    heap[size] = i
                    size += 1
            for i in range(size // 2 - 1, -1, -1):
                _sift_down(ws, heap, size, i)
            while size > 0:
                top = heap[0]
                if ws[top].val == cur:
                    run += 1
                else:
                    if run > 0:
                        hv[run] += 1
                        if collect_ell > 0 and run >= collect_ell:
                            coll.push_back(cur)
                    cur = ws[top].val
                    run = 1
                if not _step(&ws[top]) or ws[top].val > hi:
                    size -= 1
                    heap[0] = heap[size]
                _sift_down(ws, heap, size, 0)
            if run > 0:
                hv[run] += 1
                if collect_ell > 0 and run >= collect_ell:
                    coll.push_back(cur)
    finally:
        free(ws)
        free(heap)
        free(store)
    return hist, [coll[i] for i in range(<int>coll.size())]
