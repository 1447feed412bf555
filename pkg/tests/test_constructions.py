import math

import pytest

from palin.constructions import (
    mu2_power_witnesses,
    mu3_threshold,
    repunit_family,
    repunit_mu_ge_holds,
    theta,
    thm1_bound_holds,
    thm3_sequence,
    zeta,
)
from palin.intrinsic import mu_ge
from palin.palgen import count_upto
from palin.radix import integer_root, is_palindromic, to_digits


def test_mu2_witnesses_u3():
    wit = mu2_power_witnesses(3)
    assert sorted(w.base for w in wit) == [15, 31, 63, 127]
    assert all(w.value == 128 and w.length == 2 and w.verify() for w in wit)


def test_mu2_small():
    assert 7 in [w.base for w in mu2_power_witnesses(1)]


@pytest.mark.parametrize("u", range(1, 21))
def test_mu2_at_least_u(u):
    wit = mu2_power_witnesses(u)
    assert len(wit) >= u
    assert len({w.base for w in wit}) == len(wit)


def test_repunit_examples():
    fam = repunit_family(2)
    assert [(r.base, r.length, r.digit) for r in fam] == [(2, 4, 1), (4, 2, 3), (16, 1, 15)]
    assert [(r.base, r.length, r.digit) for r in repunit_family(0)] == [(2, 1, 1)]
    assert len(repunit_family(6)) == 7


def test_repunit_mu_ge_matches_direct_count():
    for L in range(1, 5):
        n = 2 ** (2**L) - 1
        for k in (2, 4):
            assert repunit_mu_ge_holds(L, k)
            assert mu_ge(k, n).mu >= L - math.log2(k)


@pytest.mark.parametrize("b, N, z", [(10, 10**4, 9), (100, 10**4, 0), (32, 10**4, 8)])
def test_zeta(b, N, z):
    assert zeta(b, N) == z


def test_zeta_lower_bound():
    for N in (10**4, 10**6):
        for b in range(integer_root(N, 3), integer_root(N, 2) + 1):
            z = zeta(b, N)
            assert 0 <= z <= b - 1
            assert count_upto(3, b, N) >= z * b


@pytest.mark.parametrize("b, k, N, t", [(10, 3, 10**4, 99), (2, 4, 100, 11), (10, 4, 1000, 0)])
def test_theta(b, k, N, t):
    assert theta(b, k, N) == t


def test_theta_upper_bound():
    for k in (3, 4, 5):
        for N in (10**3, 10**5, 10**6):
            for b in range(2, 60):
                assert count_upto(k, b, N) <= theta(b, k, N) * b ** (k - k // 2 - 1)


def test_thm1_checker():
    assert thm1_bound_holds(4, 10**4, 628)
    assert thm1_bound_holds(9, 10**9 - 1, 4 * 10**5)
    assert not thm1_bound_holds(4, 10**4, 10**4)
    with pytest.raises(ValueError):
        thm1_bound_holds(3, 100, 1)


def test_mu3_threshold():
    # ln(N+1)/7 at 10^2..10^7: 0.66, 0.99, 1.32, 1.64, 1.97, 2.30
    assert [mu3_threshold(10**j) for j in range(2, 8)] == [1, 1, 2, 2, 2, 3]
    for N in (10, 1096, 1097, 1202604, 1202605):
        assert mu3_threshold(N) == math.ceil(math.log(N + 1) / 7)


def test_thm3_small():
    rows = thm3_sequence(10**4)
    assert [r.N for r in rows] == [100, 1000, 10000]
    assert all(r.found and r.mu3 >= r.threshold and r.n <= r.N for r in rows)


def test_squared_repunit():
    assert 111111**2 == 12345654321
    assert is_palindromic(to_digits(12345654321, 10))


from hypothesis import given, settings, strategies as st


@settings(max_examples=200, deadline=None)
@given(st.integers(3, 8), st.integers(2, 10**4), st.integers(1, 10**18))
def test_theta_bound_property(k, b, N):
    assert count_upto(k, b, N) <= theta(b, k, N) * b ** (k - k // 2 - 1)


@settings(max_examples=200, deadline=None)
@given(st.integers(2, 10**5), st.integers(1, 10**15))
def test_zeta_bound_property(b, N):
    assert count_upto(3, b, N) >= zeta(b, N) * b
