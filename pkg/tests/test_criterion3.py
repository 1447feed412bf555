import pytest
from hypothesis import given, strategies as st

from palin.criterion3 import discrepancy_scan, half_digits, residue, verdict
from palin.radix import digit_list, is_k_palindromic


@pytest.mark.parametrize(
    "n, b, rho, literal, corrected",
    [(52, 5, 5, False, True), (51, 5, 0, True, False), (53, 5, 10, False, False), (121, 10, 8, True, True)],
)
def test_verdict_examples(n, b, rho, literal, corrected):
    v = verdict(n, b)
    assert v.residue == rho
    assert v.literal_paper_verdict is literal
    assert v.corrected_verdict is corrected


@pytest.mark.parametrize("n, b", [(25, 5), (125, 5), (3074, 5), (1, 2)])
def test_verdict_rejects_wrong_length(n, b):
    with pytest.raises(ValueError):
        verdict(n, b)


@pytest.mark.parametrize("n, b, ef", [(52, 5, (2, 0)), (121, 10, (1, 2)), (123, 10, None), (999, 10, (9, 9))])
def test_half_digits(n, b, ef):
    assert half_digits(n, b) == ef


@given(st.integers(2, 300).flatmap(lambda b: st.tuples(st.just(b), st.integers(b * b + 1, b**3 - 1))))
def test_corrected_matches_digits(bn):
    b, n = bn
    v = verdict(n, b)
    assert v.corrected_verdict == is_k_palindromic(n, 3, b)
    hd = half_digits(n, b)
    if v.corrected_verdict:
        e, f = hd
        assert e * (b * b + 1) + f * b == n
        assert digit_list(n, b) == [e, f, e]
        assert v.residue == b - f
    else:
        assert hd is None


def test_discrepancy_scan_small():
    found = discrepancy_scan(5)
    pairs = {(d.n, d.b): d.residue for d in found}
    assert pairs[(51, 5)] == 0
    assert pairs[(52, 5)] == 5
    for d in found:
        m = d.b * d.b + 1
        assert d.n % m == 0 or (d.n + 1) % m == 0
        assert d.residue in (0, d.b)


def test_residue_plain():
    assert residue(52, 5) == 265 % 26
