import itertools
from fractions import Fraction
from math import comb

import pytest
import sympy
from hypothesis import given, strategies as st

from gdc.checker import check, get_adapter, select
from gdc.frel import atoms, permutation
from gdc.multiset import Multiset
from gdc.sympoly import (
    HomPoly, Monomial, NotInvertibleError, PolyError, Tensor2, contract, derive, eps_poly,
    from_basis, from_rel, identity, monomials, poly_mul, rho_poly, shuffle_split, sig_poly, substitute, to_basis,
)

XY = ("x", "y")
XYZ = ("x", "y", "z")


def P(text, vars=XY):
    return HomPoly.parse(text, vars)


def mono(*exps):
    return Monomial(tuple(exps))


@st.composite
def hompolys(draw, vars=XYZ, max_degree=4):
    n = draw(st.integers(0, max_degree))
    basis = monomials(len(vars), n)
    coeffs = draw(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=4),
                           min_size=len(basis), max_size=len(basis)))
    return HomPoly(vars, n, dict(zip(basis, coeffs)))


def test_parse_and_print():
    p = P("2*x^2*y + y^3")
    assert p.degree == 3 and str(p) == "2*x^2*y + y^3"
    assert str(P("1/3*y - 2*x")) == "-2*x + 1/3*y"
    with pytest.raises(PolyError):
        P("x + y^2")
    with pytest.raises(PolyError):
        P("x*w")


def test_poly_mul_examples():
    assert poly_mul(P("x"), P("y")) == P("x*y")
    assert poly_mul(P("x"), P("x")) == P("x^2")
    assert poly_mul(P("x + y"), P("x")) == P("x^2 + x*y")


@given(hompolys(), hompolys())
def test_poly_mul_agrees_with_sympy(p, q):
    syms = sympy.symbols(XYZ)
    as_expr = lambda h: sum((sympy.Rational(c.numerator, c.denominator)
                             * sympy.prod([s ** e for s, e in zip(syms, m.exps)])
                             for m, c in h.terms.items()), sympy.Integer(0))
    got = as_expr(poly_mul(p, q))
    assert sympy.expand(got - as_expr(p) * as_expr(q)) == 0


def test_shuffle_split_examples():
    assert shuffle_split(P("x*y"), 1, 1) == Tensor2(XY, (1, 1), {
        (mono(1, 0), mono(0, 1)): 1, (mono(0, 1), mono(1, 0)): 1})
    assert shuffle_split(P("x^2"), 1, 1) == Tensor2(XY, (1, 1), {(mono(1, 0), mono(1, 0)): 2})
    p = P("x^2 + 3*x*y")
    assert shuffle_split(p, 2, 0) == Tensor2(XY, (2, 0), {
        (mono(2, 0), mono(0, 0)): 1, (mono(1, 1), mono(0, 0)): 3})


@given(hompolys(), st.data())
def test_shuffle_then_multiply_is_a_binomial_multiple(p, data):
    n = data.draw(st.integers(0, p.degree))
    back = contract(shuffle_split(p, n, p.degree - n))
    assert back == p.scaled(comb(p.degree, n))


def test_substitute_examples():
    u, uv = HomPoly.parse("u^2", ("u",)), HomPoly.parse("u*v", ("u", "v"))
    assert substitute(u, {"u": P("x*y")}) == P("x^2*y^2")
    p = P("x^2 - x*y")
    assert substitute(HomPoly.parse("u", ("u",)), {"u": p}) == p
    assert substitute(uv, {"u": P("x"), "v": P("y")}) == P("x*y")
    with pytest.raises(PolyError):
        substitute(uv, {"u": P("x")})


def test_derive_examples():
    expected = Tensor2(XY, (2, 1), {(mono(1, 1), mono(1, 0)): 2, (mono(2, 0), mono(0, 1)): 1})
    assert derive(P("x^2*y")) == expected
    assert str(expected) == "2·(x*y ⊗ x) + (x^2 ⊗ y)"
    assert str(derive(HomPoly.parse("x", ("x",)))) == "(1 ⊗ x)"
    with pytest.raises(PolyError):
        derive(HomPoly.parse("3", ("x",)))


@given(hompolys())
def test_derive_matches_partial_derivatives(p):
    if p.degree == 0:
        return
    syms = sympy.symbols(XYZ)
    expr = sum((sympy.Rational(c.numerator, c.denominator)
                * sympy.prod([s ** e for s, e in zip(syms, m.exps)])
                for m, c in p.terms.items()), sympy.Integer(0))
    t = derive(p)
    for i, s in enumerate(syms):
        # the x_i-component of the tensor is ∂p/∂x_i
        part = sum((sympy.Rational(c.numerator, c.denominator)
                    * sympy.prod([v ** e for v, e in zip(syms, a.exps)])
                    for (a, b), c in t.terms.items() if b.exps[i] == 1), sympy.Integer(0))
        assert sympy.expand(part - sympy.diff(expr, s)) == 0


@pytest.mark.parametrize("k", [1, 2, 3])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_euler_identity_on_every_monomial(k, n):
    vars = XYZ[:k]
    for m in monomials(k, n):
        p = HomPoly(vars, n, {m: 1})
        assert contract(derive(p)) == p.scaled(n)


def test_splitting_examples():
    eps2 = eps_poly(2, XY)
    assert eps2({Multiset("xx"): 1}) == {("x", "x"): 1}
    assert eps2({Multiset("xy"): 1}) == {("x", "y"): Fraction(1, 2), ("y", "x"): Fraction(1, 2)}
    assert sig_poly(2, XY)({("x", "y"): 1}) == {Multiset("xy"): 1}


@pytest.mark.parametrize("n", range(4))
@pytest.mark.parametrize("k", [1, 2, 3])
def test_symmetric_power_splitting_over_q(n, k):
    vars = XYZ[:k]
    eps, sig, rho = eps_poly(n, vars), sig_poly(n, vars), rho_poly(n, vars)
    assert eps >> sig == identity(eps.source)
    assert sig >> eps == rho
    assert rho >> rho == rho
    x = atoms(k, vars)
    for perm in itertools.permutations(range(n)):
        tau = from_rel(permutation([x] * n, perm))
        assert tau >> rho == rho == rho >> tau
        assert eps >> tau == eps
        assert tau >> sig == sig


def test_natural_number_scalars_cannot_split():
    assert sig_poly(3, XY, k="N") is not None
    assert eps_poly(1, XY, k="N") is not None
    with pytest.raises(NotInvertibleError):
        eps_poly(2, XY, k="N")


@given(hompolys(vars=XY, max_degree=3))
def test_basis_roundtrip(p):
    assert from_basis(to_basis(p), XY, p.degree) == p


@pytest.mark.parametrize("key", ["sympoly", "sympoly-primal"])
@pytest.mark.parametrize("eq_id,max_grade", [("D-LINEAR", 1), ("D-CHAIN", 2), ("E10-BIMONOID", 2)])
def test_adapter_examples(key, eq_id, max_grade):
    model = get_adapter(key)
    (eq,) = select([eq_id])
    for g in eq.grade_tuples(max_grade):
        assert check(model, eq, g, (2,) * len(eq.slots)).ok


@pytest.mark.parametrize("key", ["sympoly", "sympoly-primal"])
def test_cocontraction_promotion_law_fails_in_both_orientations(key):
    # one variable: flattening then shuffling [a,a,a,a] into 2+2 weighs C(4,2) = 6,
    # shuffling each block and taking marginals weighs 2·2 = 4
    (eq,) = select(["E13-CBAR-PROM"])
    res = check(get_adapter(key), eq, (2, 1, 1), (1,))
    assert res.status == "fail"
    assert sorted(res.counterexample["lhs"].values()) == ["6"]
    assert sorted(res.counterexample["rhs"].values()) == ["4"]
