"""Per-base k-palindromes: generation in ascending order and counting."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .radix import WORD_MAX, digit_list, is_k_palindromic


@dataclass(frozen=True)
class PalindromeShape:
    """Length ``k`` split as ``k = 2*i + r``; the free prefix has ``i + r`` digits."""

    k: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError(f"length must be >= 1, got {self.k}")

    @property
    def i(self) -> int:
        return self.k // 2

    @property
    def r(self) -> int:
        return self.k % 2

    @property
    def half(self) -> int:
        return self.i + self.r


@dataclass(frozen=True, order=True)
class PalindromeWitness:
    value: int
    base: int
    length: int

    def verify(self) -> bool:
        return is_k_palindromic(self.value, self.length, self.base)


def _mirror(prefix: Sequence[int], k: int) -> list[int]:
    tail = list(prefix[: k // 2])
    tail.reverse()
    return list(prefix) + tail


def prefix_to_palindrome(prefix: Sequence[int], b: int, shape: PalindromeShape | int) -> int:
    """The unique k-palindrome in base ``b`` whose high digits are ``prefix``."""
    if isinstance(shape, int):
        shape = PalindromeShape(shape)
    if len(prefix) != shape.half:
        raise ValueError(f"prefix needs {shape.half} digits, got {len(prefix)}")
    if prefix[0] == 0:
        raise ValueError("leading prefix digit must be nonzero")
    n = 0
    for d in _mirror(prefix, shape.k):
        if not 0 <= d < b:
            raise ValueError(f"digit {d} out of range for base {b}")
        n = n * b + d
    return n


def palindrome_from_code(code: int, b: int, k: int) -> int:
    """Palindrome whose prefix, read as a base-``b`` integer, equals ``code``."""
    digits = digit_list(code, b)
    n = 0
    for d in _mirror(digits, k):
        n = n * b + d
    return n


def prefix_weights(k: int, b: int) -> list[int]:
    """Value contributed by one unit of each prefix digit, outermost first."""
    w = []
    for j in range(k - k // 2):
        hi, lo = k - 1 - j, j
        w.append(b**hi + b**lo if hi != lo else b**hi)
    return w


def enumerate_palindromes(k: int, b: int, limit: int, start: int = 1) -> Iterator[PalindromeWitness]:
    """Yield every k-palindrome ``n`` in base ``b`` with ``start <= n <= limit``, ascending.

    Prefixes are walked as an odometer; since prefix order is value order
    the walk stops at the first value past ``limit``.
    """
    if k < 1 or b < 2:
        raise ValueError("need k >= 1 and b >= 2")
    h = k - k // 2
    lo_code = b ** (h - 1)
    skip = count_upto(k, b, start - 1) if start > 1 else 0
    if skip >= count_all(k, b):
        return
    digits = digit_list(lo_code + skip, b)
    weights = prefix_weights(k, b)
    val = sum(d * w for d, w in zip(digits, weights))
    top = b - 1
    while val <= limit:
        yield PalindromeWitness(val, b, k)
        j = h - 1
        while j >= 0 and digits[j] == top:
            digits[j] = 0
            val -= top * weights[j]
            j -= 1
        if j < 0:
            return
        digits[j] += 1
        val += weights[j]


def count_all(k: int, b: int) -> int:
    """Total number of k-palindromes in base ``b``: ``(b-1) * b**(i+r-1)``."""
    if k < 1 or b < 2:
        raise ValueError("need k >= 1 and b >= 2")
    return (b - 1) * b ** (k - k // 2 - 1)


def count_upto(k: int, b: int, N: int) -> int:
    """Number of k-palindromes in base ``b`` that are ``<= N``.

    Locates the largest admissible prefix directly from the digits of N:
    the prefix of N itself works iff its mirror does not exceed N.
    """
    if k < 1 or b < 2:
        raise ValueError("need k >= 1 and b >= 2")
    if N < 1:
        return 0
    nd = digit_list(N, b)
    if len(nd) < k:
        return 0
    if len(nd) > k:
        return count_all(k, b)
    h = k - k // 2
    head = nd[:h]
    code = 0
    for d in head:
        code = code * b + d
    base_code = b ** (h - 1)
    if _mirror(head, k) <= nd:
        return code - base_code + 1
    return code - base_code


def max_palindrome(k: int, b: int, *, checked: bool = True) -> int:
    """Largest k-palindrome in base ``b``, all digits ``b - 1``: ``b**k - 1``."""
    if k < 1 or b < 2:
        raise ValueError("need k >= 1 and b >= 2")
    n = b**k - 1
    if checked and n > WORD_MAX:
        raise OverflowError(f"{b}**{k} - 1 exceeds the 64-bit core word")
    return n
