"""Naive reference implementations used as ground truth.

Nothing here touches palgen, the kernels or :func:`intrinsic.base_range`;
digits are recomputed from scratch with divmod so a shared bug cannot
hide in both paths.
"""

from __future__ import annotations

import numpy as np

ORACLE_CAP = 10**5


class OracleCapError(ValueError):
    pass


def _digits(n: int, b: int) -> list[int]:
    out = []
    while n:
        out.append(n % b)
        n //= b
    return out[::-1]


def brute_mu(k: int, n: int) -> int:
    """Scan every base 2..n+1 and count length-k palindromic expansions."""
    if n < 1 or k < 2:
        raise ValueError("need n >= 1 and k >= 2")
    count = 0
    for b in range(2, n + 2):
        d = _digits(n, b)
        if len(d) == k and d == d[::-1]:
            count += 1
    return count


def brute_mu_table(k: int, N: int, cap: int = ORACLE_CAP) -> np.ndarray:
    """``t[n] = mu_k(n)`` for 0 <= n <= N, vectorised over n, one base at a time.

    Bases run upward from 2. The expansion length of N is nonincreasing in
    the base, so the scan stops at the first base where N itself has fewer
    than k digits; that bound is observed, not computed from roots.
    """
    if k < 2:
        raise ValueError("need k >= 2")
    if N > cap:
        raise OracleCapError(f"N = {N} exceeds oracle cap {cap}")
    n = np.arange(N + 1, dtype=np.int64)
    table = np.zeros(N + 1, dtype=np.int64)
    for b in range(2, N + 2):
        digits = []
        q = n.copy()
        while q.any():
            digits.append(q % b)
            q //= b
        length = np.zeros(N + 1, dtype=np.int64)
        for j, d in enumerate(digits):
            length[n >= b**j] = j + 1
        if length[N] < k:
            break
        # digits[j] holds a_j (least significant first)
        ok = (length == k) & (n > 0)
        for j in range(k // 2):
            ok &= digits[j] == digits[k - 1 - j]
        table += ok
    return table


def brute_phi(k: int, N: int, cap: int = ORACLE_CAP) -> int:
    if N > cap:
        raise OracleCapError(f"N = {N} exceeds oracle cap {cap}")
    if k == 1:
        return N
    return int(np.count_nonzero(brute_mu_table(k, N, cap)[1:] >= 1))


def brute_phi_multi(k: int, ell: int, N: int, cap: int = ORACLE_CAP) -> int:
    if N > cap:
        raise OracleCapError(f"N = {N} exceeds oracle cap {cap}")
    if k == 1:
        return N
    return int(np.count_nonzero(brute_mu_table(k, N, cap)[1:] >= ell))


def brute_count_base(k: int, b: int, N: int) -> int:
    """Phi_k(N, b) by expanding every n <= N."""
    if N > ORACLE_CAP:
        raise OracleCapError(f"N = {N} exceeds oracle cap {ORACLE_CAP}")
    total = 0
    for n in range(1, N + 1):
        d = _digits(n, b)
        if len(d) == k and d == d[::-1]:
            total += 1
    return total


def brute_enumerate(k: int, b: int, N: int) -> list[int]:
    if N > ORACLE_CAP:
        raise OracleCapError(f"N = {N} exceeds oracle cap {ORACLE_CAP}")
    out = []
    for n in range(1, N + 1):
        d = _digits(n, b)
        if len(d) == k and d == d[::-1]:
            out.append(n)
    return out
