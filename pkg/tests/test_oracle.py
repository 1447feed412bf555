import pytest

from palin.oracle import (
    OracleCapError,
    brute_count_base,
    brute_mu,
    brute_mu_table,
    brute_phi,
    brute_phi_multi,
)


def test_brute_mu_examples():
    assert brute_mu(4, 910) == 2
    assert brute_mu(5, 3074) == 2
    assert brute_mu(4, 624) == 2
    assert brute_mu(3, 3074) >= 0


def test_brute_phi_examples():
    assert brute_phi(2, 100) == 98
    assert brute_phi(1, 100) == 100


def test_brute_multi():
    assert brute_phi_multi(4, 2, 10**4) == 13
    for k in (2, 3, 4):
        assert brute_phi_multi(k, 1, 2000) == brute_phi(k, 2000)


def test_table_matches_scalar_scan():
    for k in (2, 3, 4, 5):
        t = brute_mu_table(k, 600)
        assert [int(x) for x in t[1:]] == [brute_mu(k, n) for n in range(1, 601)]


def test_cap():
    with pytest.raises(OracleCapError):
        brute_phi(3, 10**6)
    with pytest.raises(OracleCapError):
        brute_count_base(3, 10, 10**6)
