from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from gdc.semiring import (
    BOOL, NAT, NAT2, NAT_DUAL, RAT_NONNEG, NotFASError, check_fas, get_semiring, nat_image, splittings,
)


def test_nat_splittings_small():
    assert splittings(0) == [(0, 0)]
    assert splittings(1) == [(0, 1), (1, 0)]
    assert splittings(3) == [(0, 3), (1, 2), (2, 1), (3, 0)]


@given(st.integers(0, 40))
def test_nat_splittings_are_exactly_the_additive_preimage(r):
    brute = [(s, t) for s in range(r + 1) for t in range(r + 1) if s + t == r]
    assert splittings(r) == brute


def test_nat_dual_splittings_are_componentwise():
    got = splittings((1, 1), NAT_DUAL)
    assert len(got) == 4
    assert all(NAT_DUAL.add(s, t) == (1, 1) for s, t in got)
    assert splittings(NAT_DUAL.one, NAT_DUAL) == [((0, 0), (1, 0)), ((1, 0), (0, 0))]


def test_fas_reports():
    assert check_fas(NAT, 20).passed
    assert check_fas(NAT_DUAL, 10).passed
    bad = check_fas(NAT2, 10)
    # the componentwise unit (1,1) has the extra splitting (0,1) + (1,0)
    assert not bad.passed and bad.condition == "ii"
    assert bad.counterexample == {"element": (1, 1), "splitting": ((0, 1), (1, 0))}
    bad = check_fas(BOOL, 2)
    assert not bad.passed and bad.condition == "ii"
    assert "fail at condition (ii)" in str(bad)


def test_nonnegative_rationals_are_not_fas():
    # 1 = 1/2 + 1/2 is a nontrivial splitting of the unit
    assert not check_fas(RAT_NONNEG, 3).passed
    with pytest.raises(NotFASError):
        splittings(Fraction(1), RAT_NONNEG)


def test_splittings_rejects_foreign_elements():
    with pytest.raises(ValueError):
        splittings(-1)


def test_nat_image():
    assert nat_image(0) == 0
    assert nat_image(1) == 1
    assert nat_image(3, RAT_NONNEG) == Fraction(3)
    assert nat_image(2, NAT2) == (2, 2)
    with pytest.raises(ValueError):
        nat_image(-1)


@given(*[st.tuples(st.integers(0, 5), st.integers(0, 5))] * 3)
def test_nat_dual_is_a_semiring(a, b, c):
    sr = NAT_DUAL
    assert sr.mul(sr.mul(a, b), c) == sr.mul(a, sr.mul(b, c))
    assert sr.mul(a, sr.add(b, c)) == sr.add(sr.mul(a, b), sr.mul(a, c))
    assert sr.mul(a, sr.one) == a == sr.mul(sr.one, a)
    assert sr.mul(a, sr.zero) == sr.zero


def test_lookup():
    assert get_semiring("nat") is NAT
    with pytest.raises(KeyError):
        get_semiring("reals")
