import pytest
from hypothesis import given, strategies as st

from palin.radix import (
    WORD_MAX,
    RadixExpansion,
    from_digits,
    integer_root,
    is_k_palindromic,
    is_palindromic,
    to_digits,
)


@pytest.mark.parametrize(
    "n, b, digits",
    [
        (894111498, 13, (1, 1, 3, 3, 1, 4, 3, 7, 7)),
        (894111498, 10, (8, 9, 4, 1, 1, 1, 4, 9, 8)),
        (3074, 6, (2, 2, 1, 2, 2)),
        (3074, 5, (4, 4, 2, 4, 4)),
        (7, 10, (7,)),
        (19040, 19, (2, 14, 14, 2)),
    ],
)
def test_to_digits_examples(n, b, digits):
    assert to_digits(n, b).digits == digits


@pytest.mark.parametrize(
    "digits, base, value",
    [((8, 8, 8, 8), 13, 19040), ((1, 1), 41, 42), ((5,), 9, 5)],
)
def test_from_digits_examples(digits, base, value):
    assert from_digits(RadixExpansion(base, digits)) == value


def test_from_digits_overflow_reported():
    with pytest.raises(OverflowError):
        from_digits([1] + [0] * 64, 2)
    assert from_digits([1] * 64, 2) == WORD_MAX
    assert from_digits([1] + [0] * 64, 2, checked=False) == 2**64


@pytest.mark.parametrize(
    "base, digits",
    [(10, (0, 1)), (10, (1, 10)), (10, ()), (1, (0,))],
)
def test_invalid_expansions(base, digits):
    with pytest.raises(ValueError):
        RadixExpansion(base, digits)


def test_to_digits_rejects_zero_and_small_base():
    with pytest.raises(ValueError):
        to_digits(0, 10)
    with pytest.raises(ValueError):
        to_digits(5, 1)


def test_is_palindromic_examples():
    assert is_palindromic(RadixExpansion(5, (4, 4, 2, 4, 4)))
    assert not is_palindromic(to_digits(894111498, 13))
    assert is_palindromic([3])


@pytest.mark.parametrize(
    "n, k, b, expected",
    [
        (19040, 4, 19, True),
        (894111498, 9, 13, False),
        (894111498, 9, 10, True),
        (42, 2, 41, True),
        (42, 3, 41, False),
        (5, 1, 6, True),
    ],
)
def test_is_k_palindromic(n, k, b, expected):
    assert is_k_palindromic(n, k, b) is expected


@pytest.mark.parametrize("n, k, r", [(1000, 3, 10), (999, 3, 9), (624, 3, 8), (1, 5, 1), (2**64 - 1, 2, 2**32 - 1)])
def test_integer_root_examples(n, k, r):
    assert integer_root(n, k) == r


def test_integer_root_exhaustive_small():
    for k in range(1, 11):
        for n in range(1, 20001):
            r = integer_root(n, k)
            assert r**k <= n < (r + 1) ** k


@given(st.integers(1, 10**6), st.integers(1, 10))
def test_integer_root_property(n, k):
    r = integer_root(n, k)
    assert r**k <= n < (r + 1) ** k


@given(st.integers(1, 10**40), st.integers(1, 40))
def test_integer_root_big(n, k):
    r = integer_root(n, k)
    assert r**k <= n < (r + 1) ** k


@given(st.integers(1, 10**6), st.integers(2, 64))
def test_round_trip_and_length_law(n, b):
    e = to_digits(n, b)
    assert from_digits(e) == n
    k = len(e)
    assert b ** (k - 1) <= n <= b**k - 1


@given(st.lists(st.integers(0, 30), min_size=1, max_size=12), st.integers(31, 40))
def test_reversal_involution(digits, b):
    digits = [max(digits[0], 1)] + digits[1:]
    e = RadixExpansion(b, tuple(digits))
    assert tuple(reversed(e.reversed())) == e.digits
    assert is_palindromic(e) == (e.digits == e.reversed())


@given(st.integers(3, 10**9))
def test_top_bases(n):
    assert to_digits(n, n + 1).digits == (n,)
    assert to_digits(n, n - 1).digits == (1, 1)
