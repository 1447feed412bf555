"""Base-independent counting: Phi_k(N), mu_k(n), mu_{>=k}(n), Phi_{k,l}(N).

Counting walks every admissible base with the kernels in :mod:`palin.kernels`
and removes duplicates either with a one-bit-per-integer presence table
("bitset") or by k-way merging the ascending per-base streams
("sorted-merge").
"""

from __future__ import annotations

import enum
import logging
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import kernels
from .criterion3 import residue as _residue3
from .palgen import PalindromeWitness
from .radix import digit_list, integer_root, is_k_palindromic

log = logging.getLogger(__name__)

DEFAULT_MEMORY_BUDGET = 2**30
# kernels hold values in int64 and add one weight (<= N) past the limit
KERNEL_MAX_N = 2**62


class Strategy(str, enum.Enum):
    BITSET = "bitset"
    MERGE = "sorted-merge"


class MemoryBudgetError(RuntimeError):
    pass


class _Infinite:
    """The value of mu_1(n). Not a number: arithmetic on it is a TypeError."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "Infinite"

    def __str__(self) -> str:
        return "inf"

    def __ge__(self, other):
        if isinstance(other, int):
            return True
        return NotImplemented

    def __gt__(self, other):
        if isinstance(other, int):
            return True
        return NotImplemented

    def __le__(self, other):
        return other is self

    def __lt__(self, other):
        return False


INFINITE = _Infinite()


@dataclass(frozen=True)
class CountResult:
    k: int
    N: int
    ell: int
    count: int
    elapsed: float = field(compare=False)
    strategy: Strategy

    def as_dict(self) -> dict:
        return {
            "k": self.k,
            "N": self.N,
            "ell": self.ell,
            "count": self.count,
            "strategy": self.strategy.value,
        }


@dataclass(frozen=True)
class MultiplicityProfile:
    value: int
    k: int
    witnesses: tuple[PalindromeWitness, ...]
    mu: int | _Infinite

    @property
    def bases(self) -> list[int]:
        return [w.base for w in self.witnesses]

    def as_dict(self) -> dict:
        return {
            "value": self.value,
            "k": self.k,
            "mu": str(self.mu) if self.mu is INFINITE else self.mu,
            "witnesses": [
                {"base": w.base, "length": w.length, "digits": digit_list(w.value, w.base)}
                for w in self.witnesses
            ],
        }


def memory_budget() -> int:
    raw = os.environ.get("PALIN_MEMORY_BUDGET_BYTES")
    return int(raw) if raw else DEFAULT_MEMORY_BUDGET


def default_jobs() -> int:
    return os.cpu_count() or 1


def base_range(k: int, n: int, *, single: bool = False) -> tuple[int, int]:
    """Closed interval of bases that can host a length-k palindrome.

    By default ``n`` is a counting limit N: bases with ``b**(k-1) + 1 <= N``.
    With ``single`` the lower end also requires ``n <= b**k - 1`` so the
    range fits one number's length-k expansions. An empty range has
    ``b_min > b_max``.
    """
    if k < 2:
        raise ValueError("base range is unbounded for k = 1")
    b_max = integer_root(n - 1, k - 1) if n >= 2 else 1
    b_min = max(2, integer_root(n, k) + 1) if single else 2
    return b_min, b_max


def _check_kernel_limit(N: int) -> None:
    if N >= KERNEL_MAX_N:
        raise ValueError(f"N = {N} beyond the 64-bit kernel limit 2**62")


def _work_split(k: int, b_min: int, b_max: int, N: int, parts: int) -> list[tuple[int, int]]:
    """Cut [b_min, b_max] into contiguous chunks of roughly equal walk length."""
    parts = max(1, min(parts, b_max - b_min + 1))
    if parts == 1:
        return [(b_min, b_max)]
    # estimate on at most ~4k sample bases, each standing for its gap
    xs = np.unique(np.linspace(b_min, b_max, min(b_max - b_min + 1, 4097)).astype(np.int64))
    b = xs.astype(np.float64)
    i, h = k // 2, k - k // 2
    est = np.minimum((b - 1) * b ** (h - 1), N / b**i + 1.0) * np.diff(xs, append=xs[-1] + 1)
    cum = np.cumsum(est)
    cuts = np.searchsorted(cum, cum[-1] * np.arange(1, parts) / parts)
    inner = sorted({int(xs[c]) + 1 for c in cuts if xs[c] + 1 <= b_max})
    edges = [b_min] + inner + [b_max + 1]
    return [(lo, hi - 1) for lo, hi in zip(edges, edges[1:]) if lo <= hi - 1]


def _map(fn, items: Sequence, jobs: int) -> list:
    if jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


def _resolve(memory: str, table_bytes: int) -> Strategy:
    if memory in ("merge", Strategy.MERGE, Strategy.MERGE.value):
        return Strategy.MERGE
    fits = table_bytes <= memory_budget()
    if memory in ("bitset", Strategy.BITSET):
        if not fits:
            raise MemoryBudgetError(
                f"presence table needs {table_bytes} bytes, budget is {memory_budget()}; "
                "raise PALIN_MEMORY_BUDGET_BYTES or use --memory merge"
            )
        return Strategy.BITSET
    if memory != "auto":
        raise ValueError(f"unknown memory strategy {memory!r}")
    return Strategy.BITSET if fits else Strategy.MERGE


def _table_chunks(k: int, N: int, jobs: int, per_table: int) -> list[tuple[int, int]]:
    b_min, b_max = base_range(k, N)
    if b_min > b_max:
        return []
    # each concurrent chunk owns a private table
    jobs = max(1, min(jobs, memory_budget() // max(per_table, 1)))
    return _work_split(k, b_min, b_max, N, jobs)


def _bitset_count(k: int, N: int, jobs: int) -> int:
    nbytes = N // 8 + 1
    chunks = _table_chunks(k, N, jobs, nbytes)
    if not chunks:
        return 0

    def run(chunk):
        bits = np.zeros(nbytes, dtype=np.uint8)
        kernels.mark_bits(bits, k, chunk[0], chunk[1], N)
        return bits

    tables = _map(run, chunks, jobs)
    bits = tables[0]
    for t in tables[1:]:
        np.bitwise_or(bits, t, out=bits)
    return int(np.bitwise_count(bits).sum())


def tally_table(k: int, N: int, jobs: int | None = 1) -> np.ndarray:
    """Array ``c`` with ``c[n] = min(mu_k(n), 65535)`` for 0 <= n <= N (k >= 2)."""
    _check_kernel_limit(N)
    jobs = jobs or default_jobs()
    nbytes = 2 * (N + 1)
    if nbytes > memory_budget():
        raise MemoryBudgetError(
            f"tally table needs {nbytes} bytes, budget is {memory_budget()}; "
            "raise PALIN_MEMORY_BUDGET_BYTES or use --memory merge"
        )
    chunks = _table_chunks(k, N, jobs, nbytes)
    if not chunks:
        return np.zeros(N + 1, dtype=np.uint16)

    def run(chunk):
        counts = np.zeros(N + 1, dtype=np.uint16)
        kernels.tally(counts, k, chunk[0], chunk[1], N)
        return counts

    tables = _map(run, chunks, jobs)
    total = tables[0]
    for t in tables[1:]:
        s = total.astype(np.uint32) + t
        np.minimum(s, 65535, out=s)
        total = s.astype(np.uint16)
    return total


def merge_histogram(k: int, N: int, jobs: int | None = 1, collect_ell: int = 0) -> tuple[np.ndarray, list[int]]:
    """Multiplicity histogram over n <= N by k-way merging per-base streams.

    The value range is split into ``jobs`` contiguous segments; histograms
    add up and collected values concatenate in segment order.
    """
    _check_kernel_limit(N)
    jobs = jobs or default_jobs()
    b_min, b_max = base_range(k, N)
    if b_min > b_max:
        return np.zeros(2, dtype=np.int64), []
    segs = max(1, min(jobs, N))
    edges = [1 + (N * s) // segs for s in range(segs)] + [N + 1]
    spans = [(lo, hi - 1) for lo, hi in zip(edges, edges[1:]) if lo <= hi - 1]
    parts = _map(lambda s: kernels.merge_histogram(k, b_min, b_max, s[0], s[1], collect_ell), spans, jobs)
    hist = np.zeros(b_max - b_min + 3, dtype=np.int64)
    collected: list[int] = []
    for h, c in parts:
        hist[: len(h)] += h
        collected.extend(c)
    return hist, collected


def phi(k: int, N: int, *, memory: str = "auto", jobs: int | None = None) -> CountResult:
    """Phi_k(N): how many n <= N are k-palindromic in at least one base."""
    if k < 1 or N < 1:
        raise ValueError("need k >= 1 and N >= 1")
    jobs = jobs or default_jobs()
    t0 = time.perf_counter()
    strategy = _resolve(memory, N // 8 + 1)
    if k == 1:
        count = N  # n = (n)_{n+1}
    else:
        _check_kernel_limit(N)
        if strategy is Strategy.BITSET:
            count = _bitset_count(k, N, jobs)
        else:
            hist, _ = merge_histogram(k, N, jobs)
            count = int(hist[1:].sum())
    elapsed = time.perf_counter() - t0
    log.debug("phi(%d, %d) = %d via %s in %.3fs", k, N, count, strategy.value, elapsed)
    return CountResult(k, N, 1, count, elapsed, strategy)


def phi_multi(k: int, ell: int, N: int, *, memory: str = "auto", jobs: int | None = None) -> CountResult:
    """Phi_{k,ell}(N): how many n <= N have mu_k(n) >= ell."""
    if ell < 1 or k < 1 or N < 1:
        raise ValueError("need k >= 1, ell >= 1 and N >= 1")
    jobs = jobs or default_jobs()
    t0 = time.perf_counter()
    strategy = _resolve(memory, 2 * (N + 1))
    if k == 1:
        count = N
    elif strategy is Strategy.BITSET:
        count = int(np.count_nonzero(tally_table(k, N, jobs) >= ell))
    else:
        hist, _ = merge_histogram(k, N, jobs)
        count = int(hist[ell:].sum())
    return CountResult(k, N, ell, count, time.perf_counter() - t0, strategy)


def mu(k: int, n: int) -> MultiplicityProfile:
    """mu_k(n) with its witnesses, bases ascending.

    For k = 1 the multiplicity is :data:`INFINITE`; the only witness listed
    is base n + 1.
    """
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    if k == 1:
        return MultiplicityProfile(n, 1, (PalindromeWitness(n, n + 1, 1),), INFINITE)
    b_min, b_max = base_range(k, n, single=True)
    wit = tuple(PalindromeWitness(n, b, k) for b in range(b_min, b_max + 1) if is_k_palindromic(n, k, b))
    return MultiplicityProfile(n, k, wit, len(wit))


def mu_ge(k: int, n: int) -> MultiplicityProfile:
    """mu_{>=k}(n): bases where n is a palindrome of length at least k."""
    if k < 2:
        raise ValueError("mu_{>=1} is infinite; need k >= 2")
    if n < 1:
        raise ValueError("need n >= 1")
    wit = []
    # length >= k  <=>  b**(k-1) <= n
    for b in range(2, integer_root(n, k - 1) + 1):
        d = digit_list(n, b)
        if d == d[::-1]:
            wit.append(PalindromeWitness(n, b, len(d)))
    return MultiplicityProfile(n, k, tuple(wit), len(wit))


def _has_witness(k: int, n: int) -> bool:
    if k == 1:
        return True
    b_min, b_max = base_range(k, n, single=True)
    if k == 3:
        return any(1 <= _residue3(n, b) <= b for b in range(b_max, b_min - 1, -1))
    return any(is_k_palindromic(n, k, b) for b in range(b_max, b_min - 1, -1))


def phi_window(k: int, start: int, width: int) -> int:
    """Phi_k(start + width) - Phi_k(start), by testing each n in the window."""
    if width < 1 or start < 0:
        raise ValueError("need width >= 1 and start >= 0")
    return sum(_has_witness(k, n) for n in range(start + 1, start + width + 1))


def frontier_search(k: int, ell: int, N: int, *, memory: str = "auto", jobs: int | None = None) -> list[MultiplicityProfile]:
    """Every n <= N with mu_k(n) >= ell, with full witness lists."""
    if k < 2 or ell < 1:
        raise ValueError("need k >= 2 and ell >= 1")
    jobs = jobs or default_jobs()
    if _resolve(memory, 2 * (N + 1)) is Strategy.BITSET:
        values = np.flatnonzero(tally_table(k, N, jobs) >= ell).tolist()
    else:
        _, values = merge_histogram(k, N, jobs, collect_ell=ell)
    return [mu(k, int(n)) for n in values]
