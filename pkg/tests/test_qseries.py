"""Integer-series arithmetic: exactness, ring laws, the named products."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from singover.errors import DegreeMismatchError, NonUnitDivisorError, ParameterError
from singover.qseries import (
    TruncSeriesZ,
    div,
    eta_product,
    generalized_pentagonals,
    mul,
    pochhammer_neg,
    theta_sum,
)

coeffs = st.integers(-9, 9)


@st.composite
def series_pair(draw, max_degree=24):
    n = draw(st.integers(0, max_degree))
    a = draw(st.lists(coeffs, min_size=n + 1, max_size=n + 1))
    b = draw(st.lists(coeffs, min_size=n + 1, max_size=n + 1))
    return TruncSeriesZ(a), TruncSeriesZ(b)


@st.composite
def series_triple(draw, max_degree=16):
    n = draw(st.integers(0, max_degree))
    rows = [
        draw(st.lists(coeffs, min_size=n + 1, max_size=n + 1)) for _ in range(3)
    ]
    return tuple(TruncSeriesZ(r) for r in rows)


@st.composite
def unit_divisor_pair(draw, max_degree=24):
    s, t = draw(series_pair(max_degree))
    unit = draw(st.sampled_from((1, -1)))
    return s, TruncSeriesZ((unit,) + t.coeffs[1:])


# --- independent little oracles used to freeze expected values -------------


def partition_count(n, max_part=None):
    """Plain recursive partition count, no series anywhere."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    if max_part is None:
        max_part = n
    total = 0
    for v in range(min(n, max_part), 0, -1):
        total += partition_count(n - v, v)
    return total


def distinct_ap_count(a, b, n):
    """Partitions of n into distinct parts a, a+b, a+2b, ..."""
    parts = list(range(a, n + 1, b))

    def rec(rem, idx):
        if rem == 0:
            return 1
        if idx == len(parts) or parts[idx] > rem:
            return 0
        return rec(rem - parts[idx], idx + 1) + rec(rem, idx + 1)

    return rec(n, 0)


# --- multiplication ---------------------------------------------------------


def test_mul_identity():
    one = TruncSeriesZ.constant(1, 5)
    t = TruncSeriesZ([3, -1, 4, 1, -5, 9])
    assert mul(one, t) == t


def test_mul_binomial():
    s = TruncSeriesZ([1, 1, 0])
    assert mul(s, s).coeffs == (1, 2, 1)


def test_mul_eta_against_its_inverse():
    n = 50
    eta = eta_product(1, n)
    inv = div(TruncSeriesZ.constant(1, n), eta)
    assert mul(eta, inv) == TruncSeriesZ.constant(1, n)


def test_mul_degree_mismatch():
    with pytest.raises(DegreeMismatchError):
        mul(TruncSeriesZ([1, 2]), TruncSeriesZ([1, 2, 3]))


@given(series_pair())
def test_mul_commutes(pair):
    s, t = pair
    assert mul(s, t) == mul(t, s)


@given(series_triple())
@settings(deadline=None)
def test_mul_associates(triple):
    s, t, u = triple
    assert mul(mul(s, t), u) == mul(s, mul(t, u))


@given(series_pair(), st.integers(0, 24))
def test_mul_truncation_consistency(pair, cut):
    s, t = pair
    cut = min(cut, s.trunc_degree)
    full = mul(s, t).truncate(cut)
    direct = mul(s.truncate(cut), t.truncate(cut))
    assert full == direct


# --- division ----------------------------------------------------------------


def test_div_identity():
    s = TruncSeriesZ([5, 0, -2, 7])
    assert div(s, TruncSeriesZ.constant(1, 3)) == s


def test_div_partition_numbers():
    # 1/(q;q) enumerates partitions; expected values recomputed by the
    # recursive counter above and frozen here.
    expected = (1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42)
    assert tuple(partition_count(n) for n in range(11)) == expected
    got = div(TruncSeriesZ.constant(1, 10), eta_product(1, 10))
    assert got.coeffs == expected


def test_div_simple_factor():
    s = TruncSeriesZ([1, 0, -1, 0, 0, 0])
    t = TruncSeriesZ([1, -1, 0, 0, 0, 0])
    assert div(s, t).coeffs == (1, 1, 0, 0, 0, 0)


def test_div_nonunit_rejected():
    with pytest.raises(NonUnitDivisorError):
        div(TruncSeriesZ([1, 1]), TruncSeriesZ([2, 1]))


@given(unit_divisor_pair())
@settings(deadline=None)
def test_div_mul_roundtrip(pair):
    s, t = pair
    assert mul(div(s, t), t) == s


@given(unit_divisor_pair(), st.integers(0, 24))
@settings(deadline=None)
def test_div_truncation_consistency(pair, cut):
    s, t = pair
    cut = min(cut, s.trunc_degree)
    assert div(s, t).truncate(cut) == div(s.truncate(cut), t.truncate(cut))


# --- eta products ------------------------------------------------------------


def test_eta_small_expansion():
    # support 0,1,2,5,7 with signs +,-,-,+,+
    assert eta_product(1, 7).coeffs == (1, -1, -1, 0, 0, 1, 0, 1)


def test_eta_scaled_is_substitution():
    assert eta_product(2, 4).coeffs == (1, 0, -1, 0, -1)
    n = 60
    base = eta_product(1, n // 2)
    scaled = eta_product(2, n)
    for e in range(n + 1):
        expect = base[e // 2] if e % 2 == 0 else 0
        assert scaled[e] == expect


@pytest.mark.parametrize("m", [1, 2, 3, 5])
def test_eta_support_is_pentagonal(m):
    n = 400
    series = eta_product(m, n)
    # independent scan of the exponents m * j(3j -+ 1)/2
    expected = set()
    j = 0
    while m * j * (3 * j - 1) // 2 <= n or j < 2:
        for e in (m * j * (3 * j - 1) // 2, m * j * (3 * j + 1) // 2):
            if e <= n:
                expected.add(e)
        j += 1
    assert set(series.support()) == expected
    assert all(c in (-1, 0, 1) for c in series.coeffs)


def test_eta_rejects_bad_step():
    with pytest.raises(ParameterError):
        eta_product(0, 10)


def test_generalized_pentagonals():
    assert generalized_pentagonals(15) == frozenset({1, 2, 5, 7, 12, 15})
    assert 0 in generalized_pentagonals(15, include_zero=True)


# --- negative Pochhammer products ---------------------------------------------


def test_pochhammer_distinct_odd_parts():
    got = pochhammer_neg(1, 2, 6)
    expected = tuple(distinct_ap_count(1, 2, n) for n in range(7))
    assert got.coeffs == expected == (1, 1, 0, 1, 1, 1, 1)


def test_pochhammer_beyond_truncation_is_one():
    assert pochhammer_neg(5, 7, 4) == TruncSeriesZ.constant(1, 4)


def test_pochhammer_step_three():
    got = pochhammer_neg(1, 3, 3)
    expected = tuple(distinct_ap_count(1, 3, n) for n in range(4))
    assert got.coeffs == expected == (1, 1, 0, 0)
    assert got[2] == 0


@given(st.integers(1, 6), st.integers(1, 6), st.integers(0, 40))
@settings(deadline=None, max_examples=40)
def test_pochhammer_matches_enumeration(a, b, n):
    series = pochhammer_neg(a, b, n)
    for e in range(n + 1):
        assert series[e] == distinct_ap_count(a, b, e)


def test_pochhammer_rejects_bad_offsets():
    with pytest.raises(ParameterError):
        pochhammer_neg(0, 2, 5)
    with pytest.raises(ParameterError):
        pochhammer_neg(1, 0, 5)


# --- theta numerator -----------------------------------------------------------


def theta_exponent_count(k, i, e):
    """Directly count n >= 0 with k(n^2-n)/2 + in = e plus n >= 1 with
    k(n^2+n)/2 - in = e. Both exponent maps are increasing in n."""
    count = 0
    n = 0
    while True:
        v = k * (n * n - n) // 2 + i * n
        if v > e:
            break
        if v == e:
            count += 1
        n += 1
    n = 1
    while True:
        v = k * (n * n + n) // 2 - i * n
        if v > e:
            break
        if v == e:
            count += 1
        n += 1
    return count


def test_theta_small_supports():
    t = theta_sum(3, 1, 7)
    assert t.support() == (0, 1, 2, 5, 7)
    assert all(t[e] == 1 for e in t.support())
    # direct exponent evaluation: 0, 1, 7, 18 and 4, 13, 27
    t = theta_sum(5, 1, 12)
    assert t.support() == (0, 1, 4, 7)
    assert all(t[e] == 1 for e in t.support())


@pytest.mark.parametrize("k,i", [(3, 1), (5, 2), (7, 3), (11, 1)])
def test_theta_constant_term(k, i):
    assert theta_sum(k, i, 0)[0] == 1


@given(st.integers(3, 12), st.data(), st.integers(0, 80))
@settings(deadline=None, max_examples=40)
def test_theta_counts_representations(k, data, n):
    i = data.draw(st.integers(1, k // 2))
    series = theta_sum(k, i, n)
    for e in range(n + 1):
        assert series[e] == theta_exponent_count(k, i, e)


def test_theta_double_hits_when_i_is_half_k():
    # k - 2i = 0 collapses the two exponent families onto each other
    t = theta_sum(4, 2, 20)
    assert t[2] == 2 and t[8] == 2 and t[18] == 2


def test_theta_rejects_out_of_range_i():
    with pytest.raises(ParameterError):
        theta_sum(5, 3, 10)
    with pytest.raises(ParameterError):
        theta_sum(5, 0, 10)
    with pytest.raises(ParameterError):
        theta_sum(2, 1, 10)
