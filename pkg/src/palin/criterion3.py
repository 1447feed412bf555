"""Fractional-part test for 3-palindromicity, in exact modular arithmetic.

For ``b**2 + 1 <= n <= b**3 - 1`` write ``m = b**2 + 1`` and
``rho = ((n + 1) * b) mod m``. Then n is a 3-palindrome in base b iff
``1 <= rho <= b``, and the middle digit is ``b - rho``.

The strict form ``{(n+1) b/m} < b/m`` reads ``rho < b`` in
integers. It disagrees with the digits exactly when m divides n
(``rho == b``, a palindrome ``(e,0,e)``) or m divides n + 1 (``rho == 0``,
the non-palindrome ``(e,0,e-1)``). Both verdicts are exposed so the
difference stays auditable; everything else uses the corrected one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple


class Criterion3Verdict(NamedTuple):
    n: int
    b: int
    residue: int
    literal_paper_verdict: bool
    corrected_verdict: bool


def _check(n: int, b: int) -> None:
    if b < 2:
        raise ValueError(f"base must be >= 2, got {b}")
    if not b * b + 1 <= n <= b**3 - 1:
        raise ValueError(f"n = {n} is outside [b^2+1, b^3-1] for b = {b}")


def residue(n: int, b: int) -> int:
    """((n + 1) * b) mod (b**2 + 1), no range check."""
    return (n + 1) * b % (b * b + 1)


def verdict(n: int, b: int) -> Criterion3Verdict:
    _check(n, b)
    rho = residue(n, b)
    return Criterion3Verdict(n, b, rho, rho < b, 1 <= rho <= b)


def half_digits(n: int, b: int) -> tuple[int, int] | None:
    """Outer and middle digit ``(e, f)`` with ``n = e*(b^2+1) + f*b``, or None.

    Uses ``l = floor((n+1) b / (b^2+1))``; then ``e = n - l*b`` and
    ``f = l*(b^2+1) - n*b``.
    """
    _check(n, b)
    m = b * b + 1
    ell, rho = divmod((n + 1) * b, m)
    if not 1 <= rho <= b:
        return None
    e = n - ell * b
    f = ell * m - n * b
    if not (0 < e < b and 0 <= f < b):  # pragma: no cover - excluded by the range check
        return None
    return e, f


@dataclass(frozen=True)
class Discrepancy:
    n: int
    b: int
    residue: int


def discrepancy_scan(b_max: int, b_min: int = 2) -> list[Discrepancy]:
    """All (n, b) with b_min <= b <= b_max where the two verdicts differ.

    Ordered by base, then n.
    """
    if b_max < 2:
        raise ValueError("b_max must be >= 2")
    out = []
    for b in range(max(2, b_min), b_max + 1):
        for n in range(b * b + 1, b**3):
            v = verdict(n, b)
            if v.literal_paper_verdict != v.corrected_verdict:
                out.append(Discrepancy(n, b, v.residue))
    return out
