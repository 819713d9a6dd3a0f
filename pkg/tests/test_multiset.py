import itertools

import pytest
from hypothesis import given, strategies as st

from gdc.multiset import (
    CarrierError, Multiset, delta, enumerate_multisets, msum, multichoose, submultisets,
    zero_multiset,
)

AB = ("a", "b")
counts = st.dictionaries(st.sampled_from("abc"), st.integers(0, 3))


def test_delta():
    assert delta("a", AB) == Multiset(["a"])
    assert delta("b", AB).render() == "[b]"
    assert all(delta(x, AB).degree == 1 for x in AB)
    with pytest.raises(CarrierError):
        delta("z", AB)


def test_msum():
    assert msum(Multiset("a"), Multiset("a")) == Multiset("aa")
    assert msum(Multiset("ab"), zero_multiset()) == Multiset("ab")
    assert msum(Multiset("aa"), Multiset("ab")).degree == 4


@given(counts, counts)
def test_msum_is_pointwise_and_additive_in_degree(f, g):
    a, b = Multiset(f), Multiset(g)
    s = a + b
    assert s.degree == a.degree + b.degree
    assert all(s[x] == f.get(x, 0) + g.get(x, 0) for x in "abc")
    assert s - b == a


def test_enumerate_small():
    assert [m.render() for m in enumerate_multisets(AB, 2)] == ["[a,a]", "[a,b]", "[b,b]"]
    assert enumerate_multisets(AB, 0) == [Multiset()]
    assert enumerate_multisets(("a",), 3) == [Multiset("aaa")]


@pytest.mark.parametrize("k,n", [(k, n) for k in range(4) for n in range(5)])
def test_enumerate_matches_brute_force(k, n):
    carrier = "abcd"[:k]
    # oracle: every map X -> {0..n}, filtered by degree
    brute = {Multiset(dict(zip(carrier, ks)))
             for ks in itertools.product(range(n + 1), repeat=k) if sum(ks) == n}
    got = enumerate_multisets(carrier, n)
    assert len(got) == len(set(got)) == multichoose(k, n)
    assert set(got) == brute


@given(counts, st.integers(0, 6))
def test_submultisets(f, n):
    m = Multiset(f)
    subs = list(submultisets(m, n))
    assert len(subs) == len(set(subs))
    assert all(g.degree == n and g.le(m) for g in subs)
    brute = {g for g in enumerate_multisets("abc", n) if g.le(m)}
    assert set(subs) == brute


def test_negative_multiplicity_is_rejected():
    with pytest.raises(ValueError):
        Multiset({"a": -1})
