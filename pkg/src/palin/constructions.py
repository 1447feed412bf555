"""Explicit multi-base constructions and exact checks of the counting bounds.

Values here may exceed 64 bits, so this module works with plain Python
integers and calls the radix helpers with ``checked=False``.
"""

from __future__ import annotations

from dataclasses import dataclass

from mpmath import iv

from .intrinsic import tally_table
from .palgen import PalindromeWitness
from .radix import digit_list, from_digits, is_palindromic


def mu2_power_witnesses(u: int) -> list[PalindromeWitness]:
    """Two-digit witnesses for ``n = 2**(2u+1)``.

    For ``v + w = 2u + 1`` with ``v < w``, ``n = (2**v, 2**v)`` in base
    ``2**w - 1``. Each witness is re-verified from its digits.
    """
    if u < 1:
        raise ValueError("need u >= 1")
    n = 2 ** (2 * u + 1)
    out = []
    for v in range(u + 1):
        w = 2 * u + 1 - v
        base = 2**w - 1
        digits = digit_list(n, base)
        if digits != [2**v, 2**v] or from_digits(digits, base, checked=False) != n:
            raise AssertionError(f"construction failed for u={u}, v={v}")
        out.append(PalindromeWitness(n, base, 2))
    return out


@dataclass(frozen=True)
class Repdigit:
    base: int
    length: int
    digit: int


def repunit_family(L: int) -> list[Repdigit]:
    """Repdigit forms of ``2**(2**L) - 1`` in the bases ``2**(2**l)``, l = 0..L."""
    if L < 0:
        raise ValueError("need L >= 0")
    n = 2 ** (2**L) - 1
    out = []
    for ell in range(L + 1):
        base = 2 ** (2**ell)
        rep = Repdigit(base, 2 ** (L - ell), base - 1)
        digits = [rep.digit] * rep.length
        if from_digits(digits, base, checked=False) != n or not is_palindromic(digits):
            raise AssertionError(f"repdigit form failed for L={L}, l={ell}")
        if digit_list(n, base) != digits:
            raise AssertionError(f"expansion mismatch for L={L}, l={ell}")
        out.append(rep)
    return out


def repunit_mu_ge_holds(L: int, k: int) -> bool:
    """#{l : 2**(L-l) >= k} >= L - log2(k), compared as k * 2**count >= 2**L."""
    if k < 1:
        raise ValueError("need k >= 1")
    count = sum(1 for rep in repunit_family(L) if rep.length >= k)
    return k * 2**count >= 2**L


def zeta(b: int, N: int) -> int:
    """Largest z with ``z*(b^2+1) + (b-1)*b <= N``, clamped to [0, b-1]."""
    if b < 2:
        raise ValueError("base must be >= 2")
    room = N - (b - 1) * b
    if room < 0:
        return 0
    return min(room // (b * b + 1), b - 1)


def theta(b: int, k: int, N: int) -> int:
    """floor(N / (b^(k-1) + 1)): bound on the leading digit of a k-palindrome <= N."""
    if b < 2 or k < 2:
        raise ValueError("need b >= 2 and k >= 2")
    return N // (b ** (k - 1) + 1)


def thm1_bound_holds(k: int, N: int, phi_value: int) -> bool:
    """phi_value <= 4 (N+1)^((i+r+1)/k), checked as phi^k <= 4^k (N+1)^(i+r+1)."""
    if k < 4:
        raise ValueError("bound stated for k >= 4")
    exp = k - k // 2 + 1
    return phi_value**k <= 4**k * (N + 1) ** exp


def mu3_threshold(N: int) -> int:
    """Least integer m with ``m >= ln(N+1)/7``, i.e. ``exp(7m) >= N+1``.

    ``exp(7m)`` is enclosed with interval arithmetic; an enclosure that
    straddles N+1 raises instead of guessing.
    """
    target = N + 1
    if target <= 1:
        return 0
    m = 1
    while True:
        # interval comparison is three-valued: None when the enclosure straddles
        above = iv.exp(7 * m) >= target
        if above is True:
            return m
        if above is False:
            m += 1
            continue
        raise ArithmeticError(f"cannot separate exp({7 * m}) from {target}")


@dataclass(frozen=True)
class Thm3Row:
    N: int
    threshold: int
    n: int | None
    mu3: int

    @property
    def found(self) -> bool:
        return self.n is not None


def thm3_sequence(N_max: int, jobs: int | None = 1) -> list[Thm3Row]:
    """Per decade N = 10^2 .. N_max: smallest n <= N with mu_3(n) >= ln(N+1)/7."""
    if N_max < 100:
        raise ValueError("need N_max >= 100")
    table = tally_table(3, N_max, jobs)
    rows = []
    N = 100
    while N <= N_max:
        t = mu3_threshold(N)
        hits = (table[1 : N + 1] >= t).nonzero()[0]
        if hits.size:
            n = int(hits[0]) + 1
            rows.append(Thm3Row(N, t, n, int(table[n])))
        else:
            rows.append(Thm3Row(N, t, None, 0))
        N *= 10
    return rows
