"""Packed parity-series arithmetic against the exact integer path."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from singover.errors import DegreeMismatchError, NonUnitDivisorError
from singover.qseries import (
    TruncSeriesF2,
    TruncSeriesZ,
    div,
    div_f2,
    eta_product,
    inv_f2,
    mul,
    mul_f2,
    reduce_mod2,
    theta_sum,
)


def test_reduce_mod2_eta():
    assert reduce_mod2(eta_product(1, 7)).support() == (0, 1, 2, 5, 7)


def test_reduce_mod2_kills_even_coefficients():
    assert reduce_mod2(TruncSeriesZ([0, 0, 0, 0])).bits == 0
    assert reduce_mod2(TruncSeriesZ([2, 2, 2])).bits == 0
    assert reduce_mod2(TruncSeriesZ([-1, -3, 4])).support() == (0, 1)


def test_mul_f2_identity_and_cancellation():
    one = TruncSeriesF2(1, 2)
    s = TruncSeriesF2.from_bits([1, 1, 0], 2)
    assert mul_f2(one, s) == s
    # (1 + q)^2 = 1 + q^2 in characteristic 2
    assert mul_f2(s, s).support() == (0, 2)


def test_mul_f2_degree_mismatch():
    with pytest.raises(DegreeMismatchError):
        mul_f2(TruncSeriesF2(1, 2), TruncSeriesF2(1, 3))


def test_mul_f2_against_integer_path_bulk():
    # 1000 seeded random pairs at degree 512, with random integer lifts
    # of each bit pattern; the packed product must equal the reduction
    # of the exact integer product.
    rng = random.Random(0x5E12)
    n = 512
    for _ in range(1000):
        sbits = rng.getrandbits(n + 1)
        tbits = rng.getrandbits(n + 1)
        lift_s = [((sbits >> e) & 1) + 2 * rng.randrange(3) for e in range(n + 1)]
        lift_t = [((tbits >> e) & 1) + 2 * rng.randrange(3) for e in range(n + 1)]
        fast = mul_f2(TruncSeriesF2(sbits, n), TruncSeriesF2(tbits, n))
        exact = reduce_mod2(mul(TruncSeriesZ(lift_s), TruncSeriesZ(lift_t)))
        assert fast == exact


@given(st.integers(0, 60), st.data())
@settings(deadline=None)
def test_mul_f2_matches_reduced_mul(n, data):
    a = data.draw(st.lists(st.integers(-5, 5), min_size=n + 1, max_size=n + 1))
    b = data.draw(st.lists(st.integers(-5, 5), min_size=n + 1, max_size=n + 1))
    s, t = TruncSeriesZ(a), TruncSeriesZ(b)
    assert mul_f2(reduce_mod2(s), reduce_mod2(t)) == reduce_mod2(mul(s, t))


@given(st.integers(0, 200), st.integers(0, 1 << 64))
def test_inv_f2_roundtrip(n, seed_bits):
    bits = (seed_bits | 1) & ((1 << (n + 1)) - 1)
    t = TruncSeriesF2(bits, n)
    prod = mul_f2(t, inv_f2(t))
    assert prod.bits == 1


def test_inv_f2_needs_unit():
    with pytest.raises(NonUnitDivisorError):
        inv_f2(TruncSeriesF2(0b10, 3))


@pytest.mark.parametrize("k,i,n", [(3, 1, 300), (5, 1, 257), (7, 3, 128)])
def test_div_f2_matches_exact_quotient(k, i, n):
    num = theta_sum(k, i, n)
    den = eta_product(1, n)
    fast = div_f2(reduce_mod2(num), reduce_mod2(den))
    exact = reduce_mod2(div(num, den))
    assert fast == exact


def test_truncate_f2():
    s = TruncSeriesF2.from_bits([1, 0, 1, 1], 3)
    assert s.truncate(2).support() == (0, 2)
    assert s.bit(3) == 1
    with pytest.raises(IndexError):
        s.bit(4)
