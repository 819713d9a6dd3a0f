from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from gdc import frel
from gdc.frel import (
    BoundaryError, FinSet, Rel, Tagged, biproduct, codiagonal, compose, identity, injection,
    projection, radd, rel_equal, rsum, rzero, scale, symmetry, tensor, tensor_objects,
)

A = FinSet(["a", "b"])
C = FinSet(["c", "d"])
E = FinSet(["e"])


def rel(src, tgt, pairs):
    return Rel(src, tgt, pairs)


@st.composite
def relations(draw, src=A, tgt=C):
    cells = [(x, y) for x in src for y in tgt]
    return Rel(src, tgt, draw(st.sets(st.sampled_from(cells))))


def test_compose_examples():
    assert rel_equal(compose(rel(A, C, [("a", "c")]), rel(C, E, [("c", "e")])),
                     rel(A, E, [("a", "e")]))
    both = rel(A, C, [("a", "c"), ("a", "d")])
    assert rel_equal(compose(both, rel(C, E, [("c", "e")])), rel(A, E, [("a", "e")]))


def test_boundary_mismatch_is_reported():
    with pytest.raises(BoundaryError):
        compose(identity(A), identity(C))


@given(relations(), relations(C, A), relations(A, A))
def test_category_laws(s, t, u):
    assert rel_equal(compose(s, identity(C)), s)
    assert rel_equal(compose(identity(A), s), s)
    assert rel_equal(compose(compose(u, s), t), compose(u, compose(s, t)))


@given(relations(), relations(C, A))
def test_tensor_is_functorial(s, t):
    lhs = compose(tensor(s, t), tensor(t, s))
    rhs = tensor(compose(s, t), compose(t, s))
    assert rel_equal(lhs, rhs)


def test_tensor_examples():
    one_a, one_b = FinSet(["a"]), FinSet(["b"])
    assert rel_equal(tensor(identity(one_a), identity(one_b)),
                     identity(tensor_objects(one_a, one_b)))
    assert len(tensor(rel(A, C, [("a", "c")]), rzero(A, C))) == 0


def test_symmetry_is_an_involution():
    assert rel_equal(compose(symmetry(A, C), symmetry(C, A)), identity(tensor_objects(A, C)))


@given(relations(), relations())
def test_union_enrichment(s, t):
    assert rel_equal(radd(s, s), s)
    assert rel_equal(radd(s, rzero(A, C)), s)
    assert rel_equal(radd(s, t), radd(t, s))
    assert rel_equal(scale(Fraction(1, 2), s), s)
    assert rel_equal(scale(0, s), rzero(A, C))


def test_biproduct_laws():
    summands = [A, C]
    for i in range(2):
        for j in range(2):
            got = compose(injection(summands, j), projection(summands, i))
            want = identity(summands[i]) if i == j else rzero(summands[j], summands[i])
            assert rel_equal(got, want)
    total = rsum([compose(projection(summands, j), injection(summands, j)) for j in range(2)],
                 biproduct(A, C), biproduct(A, C))
    assert rel_equal(total, identity(biproduct(A, C)))


def test_codiagonal():
    nabla = codiagonal(A)
    assert nabla.image(Tagged(0, "a")) == {"a"} == nabla.image(Tagged(1, "a"))


def test_equality():
    s = rel(A, C, [("a", "c")])
    assert rel_equal(s, s)
    assert not rel_equal(s, rel(A, C, [("a", "d")]))
    assert s == compose(s, identity(C))


def test_carrier_sizes():
    assert len(frel.bang_set(2, A)) == 3
    assert len(tensor_objects(A, C, E)) == 4
    assert len(biproduct(A, E)) == 3
