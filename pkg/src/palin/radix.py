"""Exact base-b digit expansions, palindrome predicates and integer roots."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

# Core modules emulate a fixed 64-bit word; anything past this is reported.
WORD_MAX = 2**64 - 1


@dataclass(frozen=True)
class RadixExpansion:
    """Digits of a value in ``base``, most-significant first."""

    base: int
    digits: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.base < 2:
            raise ValueError(f"base must be >= 2, got {self.base}")
        if not self.digits:
            raise ValueError("expansion needs at least one digit")
        if self.digits[0] == 0:
            raise ValueError("leading digit must be nonzero")
        for d in self.digits:
            if not 0 <= d < self.base:
                raise ValueError(f"digit {d} out of range for base {self.base}")

    def __len__(self) -> int:
        return len(self.digits)

    def reversed(self) -> tuple[int, ...]:
        return self.digits[::-1]

    def __str__(self) -> str:
        return f"({','.join(map(str, self.digits))})_{self.base}"


def _check_base(b: int) -> None:
    if b < 2:
        raise ValueError(f"base must be >= 2, got {b}")


def digit_list(n: int, b: int) -> list[int]:
    """Raw digit list of ``n >= 1`` in base ``b``, most-significant first."""
    out = []
    while n:
        n, d = divmod(n, b)
        out.append(d)
    out.reverse()
    return out


def to_digits(n: int, b: int) -> RadixExpansion:
    if n < 1:
        raise ValueError(f"only n >= 1 has an expansion, got {n}")
    _check_base(b)
    return RadixExpansion(b, tuple(digit_list(n, b)))


def from_digits(e: RadixExpansion | Sequence[int], base: int | None = None, *, checked: bool = True) -> int:
    """Reconstruct ``sum(a_j * b**j)``.

    Accepts either a :class:`RadixExpansion` or a raw digit sequence plus
    ``base``. With ``checked`` the result must fit the 64-bit core word;
    the constructions module passes ``checked=False`` for big values.
    """
    if not isinstance(e, RadixExpansion):
        if base is None:
            raise TypeError("base is required for a raw digit sequence")
        e = RadixExpansion(base, tuple(e))
    n = 0
    for d in e.digits:
        n = n * e.base + d
        if checked and n > WORD_MAX:
            raise OverflowError(f"value exceeds 64-bit core word ({e})")
    return n


def is_palindromic(e: RadixExpansion | Sequence[int]) -> bool:
    digits = e.digits if isinstance(e, RadixExpansion) else tuple(e)
    return digits == digits[::-1]


def is_k_palindromic(n: int, k: int, b: int) -> bool:
    if n < 1 or k < 1 or b < 2:
        return False
    digits = digit_list(n, b)
    return len(digits) == k and digits == digits[::-1]


def integer_root(n: int, k: int) -> int:
    """Largest ``r`` with ``r**k <= n``, using integer Newton steps only."""
    if n < 0:
        raise ValueError("integer_root needs n >= 0")
    if k < 1:
        raise ValueError("integer_root needs k >= 1")
    if k == 1 or n < 2:
        return n
    # Start above the root; Newton iterates decrease monotonically to it.
    x = 1 << -(-n.bit_length() // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    while x**k > n:
        x -= 1
    while (x + 1) ** k <= n:
        x += 1
    return x
