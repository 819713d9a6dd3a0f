import itertools

import pytest
from hypothesis import given, strategies as st

from gdc import frel, frel_model as fm
from gdc.frel import (
    FinSet, Rel, atoms, bang_set, compose, identity, rel_equal, tensor, tensor_objects,
)
from gdc.multiset import Multiset, enumerate_multisets, multichoose
from gdc.semiring import splittings

AB = atoms(2)
A1 = FinSet(["a"])
CARRIERS = [atoms(n) for n in range(4)]


def ms(text):
    return Multiset(list(text))


def comprehension_deriving(n, x):
    # ∂_n = {((f, x), f + δ_x)}, built from the comprehension directly
    pairs = [((f, a), f + Multiset([a])) for f in enumerate_multisets(x, n) for a in x]
    return Rel(tensor_objects(bang_set(n, x), x), bang_set(n + 1, x), pairs)


def comprehension_codereliction(x):
    return Rel(x, bang_set(1, x), [(a, Multiset([a])) for a in x])


def test_bang_obj():
    assert [m.render() for m in fm.bang_obj(2, AB)] == ["[a,a]", "[a,b]", "[b,b]"]
    assert list(fm.bang_obj(0, AB)) == [Multiset()]
    assert len(fm.bang_obj(1, AB)) == len(AB)


def test_bang_rel():
    assert rel_equal(fm.bang_rel(2, identity(AB)), identity(bang_set(2, AB)))
    c = FinSet(["c"])
    s = Rel(AB, c, [("a", "c")])
    assert fm.bang_rel(1, s).pairs == {(ms("a"), ms("c"))}
    assert fm.bang_rel(0, s).pairs == {(Multiset(), Multiset())}


def test_coalgebra_maps():
    assert fm.dereliction(AB).pairs == {(ms("a"), "a"), (ms("b"), "b")}
    assert fm.contraction(1, 1, A1).pairs == {(ms("aa"), (ms("a"), ms("a")))}
    for n in range(4):
        lhs = compose(fm.promotion(n, 1, AB), fm.bang_rel(n, fm.dereliction(AB)))
        assert rel_equal(lhs, identity(bang_set(n, AB)))


def test_promotion_counts():
    # [a,a,b,b] splits into two blocks of size 2 as [[a,a],[b,b]] or [[a,b],[a,b]]
    img = fm.promotion(2, 2, AB).image(ms("aabb"))
    assert {m.render() for m in img} == {"[[a,a],[b,b]]", "[[a,b],[a,b]]"}


def test_monoidal_maps():
    c = FinSet(["c"])
    assert fm.mu_tensor(1, A1, c).pairs == {((ms("a"), ms("c")), Multiset([("a", "c")]))}
    assert rel_equal(compose(fm.mu_unit(0), fm.weakening(frel.UNIT)), identity(frel.UNIT))
    assert rel_equal(compose(fm.mu_unit(1), fm.dereliction(frel.UNIT)), identity(frel.UNIT))


def test_monoid_maps():
    assert fm.cocontraction(1, 1, A1).pairs == {((ms("a"), ms("a")), ms("aa"))}
    assert rel_equal(compose(fm.coweakening(AB), fm.weakening(AB)), identity(frel.UNIT))


def test_differential_maps():
    assert fm.deriving(1, A1).pairs == {((ms("a"), "a"), ms("aa"))}
    assert rel_equal(compose(fm.codereliction(AB), fm.dereliction(AB)), identity(AB))
    lhs = compose(fm.deriving(0, AB), fm.dereliction(AB))
    assert rel_equal(lhs, tensor(fm.weakening(AB), identity(AB)))


def test_der_then_coder_is_identity_on_bang_one():
    # every element of !_1 X is a singleton, so d;d̄ = 1 there
    assert rel_equal(compose(fm.dereliction(AB), fm.codereliction(AB)),
                     identity(bang_set(1, AB)))


@pytest.mark.parametrize("n", range(4))
@pytest.mark.parametrize("x", CARRIERS[1:])
def test_symmetric_power_splitting(n, x):
    eps, sig, rho = fm.epsilon(n, x), fm.varsigma(n, x), fm.rho(n, x)
    assert rel_equal(compose(eps, sig), identity(bang_set(n, x)))
    assert rel_equal(compose(sig, eps), rho)
    assert rel_equal(compose(rho, rho), rho)
    power = [x] * n
    for perm in itertools.permutations(range(n)):
        tau = frel.permutation(power, perm)
        assert rel_equal(compose(tau, rho), rho)
        assert rel_equal(compose(rho, tau), rho)
        assert rel_equal(compose(tau, sig), sig)
        assert rel_equal(compose(eps, tau), eps)


def test_epsilon_lists_each_ordering_once():
    img = fm.epsilon(3, AB).image(ms("aab"))
    assert img == {("a", "a", "b"), ("a", "b", "a"), ("b", "a", "a")}


@pytest.mark.parametrize("r", range(4))
@pytest.mark.parametrize("nx,ny", [(a, b) for a in range(3) for b in range(3)])
def test_seely_roundtrip(r, nx, ny):
    x, y = atoms(nx, "ab"), atoms(ny, "cd")
    fwd, bwd = fm.seely(r, x, y), fm.seely_inv(r, x, y)
    assert rel_equal(compose(fwd, bwd), identity(fwd.source))
    assert rel_equal(compose(bwd, fwd), identity(fwd.target))
    assert frel.is_bijection(fwd)


def test_seely_unit():
    fwd, bwd = fm.seely_unit(), fm.seely_unit_inv()
    assert rel_equal(compose(fwd, bwd), identity(fwd.source))
    assert rel_equal(compose(bwd, fwd), identity(fwd.target))


@pytest.mark.parametrize("r", range(6))
@pytest.mark.parametrize("nx,ny", [(a, b) for a in range(4) for b in range(4)])
def test_seely_cardinality(r, nx, ny):
    x, y = atoms(nx, "abc"), atoms(ny, "def")
    lhs = len(bang_set(r, frel.biproduct(x, y)))
    rhs = sum(len(bang_set(s, x)) * len(bang_set(t, y)) for s, t in splittings(r))
    assert lhs == rhs == multichoose(nx + ny, r)


def test_seely_cardinality_frozen():
    # |!_2 ({a,b} ⊔ {c})| = 6 = 1·1 + 2·1 + 3·1
    x, y = atoms(2, "ab"), atoms(1, "c")
    parts = [len(bang_set(s, x)) * len(bang_set(t, y)) for s, t in splittings(2)]
    assert parts == [1, 2, 3]
    assert len(bang_set(2, frel.biproduct(x, y))) == 6


@pytest.mark.parametrize("r", range(4))
@pytest.mark.parametrize("x", CARRIERS)
def test_coder_and_deriving_correspond(r, x):
    assert rel_equal(fm.deriving(r, x), comprehension_deriving(r, x))
    assert rel_equal(fm.codereliction(x), comprehension_codereliction(x))
    assert rel_equal(fm.coder_to_deriving(r, x), comprehension_deriving(r, x))
    assert rel_equal(fm.deriving_to_coder(x), comprehension_codereliction(x))
    # roundtrips: each construction applied to the other's output
    back = fm.deriving_to_coder(x, deriving0=fm.coder_to_deriving(0, x))
    assert rel_equal(back, fm.codereliction(x))
    again = fm.coder_to_deriving(r, x, coder=fm.deriving_to_coder(x))
    assert rel_equal(again, fm.deriving(r, x))


@pytest.mark.parametrize("r,s", [(r, s) for r in range(4) for s in range(4) if r + s <= 3])
@pytest.mark.parametrize("x", CARRIERS[:3])
def test_cbar_from_seely(r, s, x):
    assert rel_equal(fm.cbar_from_seely(r, s, x), fm.cocontraction(r, s, x))


@pytest.mark.parametrize("x", CARRIERS[:3])
def test_wbar_from_seely(x):
    assert rel_equal(fm.wbar_from_seely(x), fm.coweakening(x))


@pytest.mark.parametrize("n,m", [(n, m) for n in range(3) for m in range(3)])
def test_structure_from_splitting(n, m):
    x = AB
    assert rel_equal(fm.split_promotion(n, m, x), fm.promotion(n, m, x))
    assert rel_equal(fm.split_contraction(n, m, x), fm.contraction(n, m, x))
    assert rel_equal(fm.split_cocontraction(n, m, x), fm.cocontraction(n, m, x))
    assert rel_equal(fm.split_mu(n, x, A1), fm.mu_tensor(n, x, A1))
    assert rel_equal(fm.split_deriving(n, x), fm.deriving(n, x))


@given(st.integers(0, 3), st.integers(0, 3), st.sampled_from(CARRIERS[1:3]))
def test_contraction_then_cocontraction_covers_identity(n, m, x):
    # every multiset of degree n+m splits as n + m, so c;c̄ contains the identity
    loop = compose(fm.contraction(n, m, x), fm.cocontraction(n, m, x))
    for f in loop.source:
        assert f in loop.image(f)
