"""One test per acceptance criterion; each prints a single PASS/FAIL line."""
import itertools
import time

import pytest

from gdc import frel, frel_model as fm
from gdc.checker import CheckConfig, check_all, get_adapter, mutation_report
from gdc.frel import Rel, atoms, bang_set, compose, identity, rel_equal, tensor_objects
from gdc.gdill import Bang, Plus, Sequent, Ten, Atom, denote, equal_denotation, infer, load_corpus, make_env
from gdc.gdill.core import plus_n
from gdc.multiset import Multiset, enumerate_multisets, multichoose
from gdc.semiring import splittings
from gdc.sympoly import (
    HomPoly, Monomial, Tensor2, contract, derive, eps_poly, from_rel, identity as lin_id,
    monomials, rho_poly, sig_poly,
)


@pytest.fixture
def verdict(capsys):
    def say(n, ok, detail):
        with capsys.disabled():
            print(f"\ncriterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
        return ok
    return say


def _failing(report):
    return sorted({r.equation for r in report.failures})


def test_criterion_1_frel_catalog(verdict):
    start = time.perf_counter()
    report = check_all(get_adapter("frel"), CheckConfig(max_grade=3, max_set=3))
    seconds = time.perf_counter() - start
    bad = _failing(report)
    ok = report.ok and seconds <= 300
    verdict(1, ok, f"{len(report.results)} checks, {len(report.failures)} failed "
                   f"{bad or ''} in {seconds:.1f}s")
    assert seconds <= 300
    assert not bad, "failing equations"


def test_criterion_2_seely(verdict):
    problems = []
    for r in range(4):
        for na, nb in itertools.product(range(3), repeat=2):
            x, y = atoms(na, "ab"), atoms(nb, "cd")
            fwd, bwd = fm.seely(r, x, y), fm.seely_inv(r, x, y)
            if not (rel_equal(compose(fwd, bwd), identity(fwd.source))
                    and rel_equal(compose(bwd, fwd), identity(bwd.source))
                    and frel.is_bijection(fwd)):
                problems.append(("roundtrip", r, na, nb))
    for r in range(6):
        for na, nb in itertools.product(range(4), repeat=2):
            x, y = atoms(na, "abc"), atoms(nb, "def")
            lhs = len(bang_set(r, frel.biproduct(x, y)))
            rhs = sum(multichoose(na, s) * multichoose(nb, t) for s, t in splittings(r))
            if lhs != rhs or lhs != multichoose(na + nb, r):
                problems.append(("cardinality", r, na, nb))
    verdict(2, not problems, f"roundtrips r<=3 |A|,|B|<=2; cardinality r<=5 |X|,|Y|<=3; "
                             f"{len(problems)} problems")
    assert not problems


def test_criterion_3_deriving_codereliction(verdict):
    problems = []
    for n in range(4):
        x = atoms(n)
        coder = Rel(x, bang_set(1, x), [(a, Multiset([a])) for a in x])
        if not rel_equal(fm.deriving_to_coder(x), coder):
            problems.append(("coder", n))
        if not rel_equal(fm.deriving_to_coder(x, deriving0=fm.coder_to_deriving(0, x)),
                         fm.codereliction(x)):
            problems.append(("roundtrip coder", n))
        for r in range(4):
            deriv = Rel(tensor_objects(bang_set(r, x), x), bang_set(r + 1, x),
                        [((f, a), f + Multiset([a])) for f in enumerate_multisets(x, r) for a in x])
            if not rel_equal(fm.coder_to_deriving(r, x), deriv):
                problems.append(("deriving", r, n))
            if not rel_equal(fm.coder_to_deriving(r, x, coder=fm.deriving_to_coder(x)),
                             fm.deriving(r, x)):
                problems.append(("roundtrip deriving", r, n))
    verdict(3, not problems, f"carriers <=3, grades <=3; {len(problems)} problems")
    assert not problems


def test_criterion_4_cocontraction_from_seely(verdict):
    problems = [(r, s, n) for n in range(3) for r in range(4) for s in range(4 - r)
                if not rel_equal(fm.cbar_from_seely(r, s, atoms(n)),
                                 fm.cocontraction(r, s, atoms(n)))]
    verdict(4, not problems, f"r+s<=3, carriers <=2; {len(problems)} problems")
    assert not problems


def _splitting_ok(compose_, eq, eps, sig, rho, ident, perms):
    if not (eq(compose_(eps, sig), ident) and eq(compose_(sig, eps), rho)
            and eq(compose_(rho, rho), rho)):
        return False
    return all(eq(compose_(t, rho), rho) and eq(compose_(rho, t), rho)
               and eq(compose_(eps, t), eps) and eq(compose_(t, sig), sig) for t in perms)


def test_criterion_5_symmetric_power_splitting(verdict):
    problems = []
    for n in range(4):
        for k in range(1, 4):
            x = atoms(k)
            perms = [frel.permutation([x] * n, p) for p in itertools.permutations(range(n))]
            if not _splitting_ok(compose, rel_equal, fm.epsilon(n, x), fm.varsigma(n, x),
                                 fm.rho(n, x), identity(bang_set(n, x)), perms):
                problems.append(("frel", n, k))
            names = ("x", "y", "z")[:k]
            v = atoms(k, names)
            eps = eps_poly(n, names)
            lperms = [from_rel(frel.permutation([v] * n, p)) for p in itertools.permutations(range(n))]
            if not _splitting_ok(lambda f, g: f >> g, lambda f, g: f == g, eps, sig_poly(n, names),
                                 rho_poly(n, names), lin_id(eps.source), lperms):
                problems.append(("sympoly", n, k))
    verdict(5, not problems, f"n<=3, <=3 letters, both models; {len(problems)} problems")
    assert not problems


def test_criterion_6_polynomial_differentiation(verdict):
    xy = ("x", "y")
    expected = Tensor2(xy, (2, 1), {(Monomial((1, 1)), Monomial((1, 0))): 2,
                                    (Monomial((2, 0)), Monomial((0, 1))): 1})
    exact = derive(HomPoly.parse("x^2*y", xy)) == expected
    euler_bad = []
    for k in range(1, 4):
        vars = ("x", "y", "z")[:k]
        for n in range(1, 5):
            for m in monomials(k, n):
                p = HomPoly(vars, n, {m: 1})
                if contract(derive(p)) != p.scaled(n):
                    euler_bad.append((vars, m.exps))
    report = check_all(get_adapter("sympoly"), CheckConfig(max_grade=3, max_set=2))
    bad = _failing(report)
    ok = exact and not euler_bad and report.ok
    verdict(6, ok, f"derive(x^2*y) exact: {exact}; Euler failures: {len(euler_bad)}; "
                   f"dual catalog: {len(report.results)} checks, {len(report.failures)} failed {bad or ''}")
    assert exact
    assert not euler_bad
    assert not bad, "failing equations"


def test_criterion_7_proof_corpus(verdict):
    seely = load_corpus("seely")
    rules = load_corpus("rules")
    A, B = Atom("A"), Atom("B")
    problems = []
    for r in range(3):
        total = plus_n([Ten(Bang(s, A), Bang(t, B)) for s, t in splittings(r)])
        left = seely["seely-l"].derivation
        right = seely["seely-r"].derivation
        if infer(left, {"r": r}) != Sequent((Bang(r, Plus(A, B)),), total):
            problems.append(("sequent-l", r))
        if infer(right, {"r": r}) != Sequent((total,), Bang(r, Plus(A, B))):
            problems.append(("sequent-r", r))
        for na, nb in itertools.product((1, 2), repeat=2):
            env = make_env({"A": na, "B": nb})
            dl, dr = denote(left, env, {"r": r}), denote(right, env, {"r": r})
            if not (rel_equal(compose(dl, dr), identity(dl.source))
                    and rel_equal(compose(dr, dl), identity(dr.source))):
                problems.append(("inverse", r, na, nb))
    for n in (1, 2):
        if not equal_denotation(rules["p11-der-cut"].derivation,
                                rules["p11-der-direct"].derivation, make_env({"A": n})):
            problems.append(("p11;d", n))
    verdict(7, not problems, f"Seely r<=2, atoms <=2, cut pair; {len(problems)} problems")
    assert not problems


def test_criterion_8_mutation_sensitivity(verdict):
    missed = {}
    for key in ("frel", "sympoly"):
        found = mutation_report(get_adapter(key))
        missed[key] = [fam for fam, res in found.items() if res is None]
    ok = not any(missed.values())
    verdict(8, ok, "undetected families: " + (
        ", ".join(f"{k}: {v}" for k, v in missed.items() if v) or "none"))
    assert ok
