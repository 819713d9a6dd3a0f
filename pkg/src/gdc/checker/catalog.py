"""The fixed list of equations checked against a model.

Each entry builds both sides as composition trees for concrete grades.
Identifiers are stable; the leading tag groups equations by the law they
come from (E2..E14 for the coherence families, D- for the
deriving transformation, C- for codereliction, and so on).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb
from typing import Callable, Iterable

from ..semiring import NAT, splittings
from .terms import (
    NIL, ONE, Bang, BangM, Codiag, Given, Id, Inj, Perm, Proj, Scale, Struct, Sym, V,
    Zero, par, plus, power, seq, ten, total,
)

X, Y, Z = V("X"), V("Y"), V("Z")


# -- structure map shorthands ------------------------------------------------------

def d(a): return Struct("d", (), (a,))
def w(a): return Struct("w", (), (a,))
def c(r, s, a): return Struct("c", (r, s), (a,))
def p(r, s, a): return Struct("p", (r, s), (a,))
def mu(r, a, b): return Struct("mu", (r,), (a, b))
def muI(r): return Struct("muI", (r,), ())
def cb(r, s, a): return Struct("cbar", (r, s), (a,))
def wb(a): return Struct("wbar", (), (a,))
def der(r, a): return Struct("deriv", (r,), (a,))
def db(a): return Struct("coder", (), (a,))
def eps(n, a): return Struct("eps", (n,), (a,))
def sig(n, a): return Struct("sig", (n,), (a,))
def rho(n, a): return Struct("rho", (n,), (a,))
def chi(r, a, b): return Struct("seely", (r,), (a, b))
def chi_inv(r, a, b): return Struct("seelyInv", (r,), (a, b))
CHI_I = Struct("seelyI", (), ())
CHI_I_INV = Struct("seelyIInv", (), ())


def one(a): return Id(a)
def B(r, a): return Bang(r, a)


@dataclass(frozen=True)
class Equation:
    id: str
    caption: str
    formula: str
    grades: tuple
    build: Callable = field(repr=False, compare=False)
    slots: tuple = ("X",)
    where: Callable | None = field(default=None, repr=False, compare=False)
    grade_source: Callable | None = field(default=None, repr=False, compare=False)
    wide: bool = False
    given: tuple = ()

    def grade_tuples(self, max_grade: int) -> list:
        """Grade assignments (as tuples in ``self.grades`` order) up to ``max_grade``."""
        if self.grade_source is not None:
            return [tuple(g) for g in self.grade_source(max_grade)]
        out = []
        for combo in itertools.product(range(max_grade + 1), repeat=len(self.grades)):
            env = dict(zip(self.grades, combo))
            if self.where is None or self.where(**env):
                out.append(combo)
        return out

    def sides(self, grades: tuple) -> list:
        pairs = self.build(**dict(zip(self.grades, grades)))
        return pairs if isinstance(pairs, list) else [pairs]


CATALOG: list = []


def law(id, caption, formula, grades="", **kw):
    def register(fn):
        CATALOG.append(Equation(id, caption, formula, tuple(grades.split()), fn, **kw))
        return fn
    return register


def unit_splittings(_max_grade: int):
    """The two splittings of 1, as (r, s)."""
    return splittings(1, NAT)


# ============================================================================
# graded coalgebra modality
# ============================================================================

@law("E2-COMONAD-COUNIT-L", "graded comonad: left counit", "p_{1,r};d = 1", "r")
def _(r):
    return p(1, r, X) >> d(B(r, X)), one(B(r, X))


@law("E2-COMONAD-COUNIT-R", "graded comonad: right counit", "p_{r,1};!_r(d) = 1", "r")
def _(r):
    return p(r, 1, X) >> BangM(r, d(X)), one(B(r, X))


@law("E2-COMONAD-ASSOC", "graded comonad: coassociativity",
     "p_{rs,t};p_{r,s} = p_{r,st};!_r(p_{s,t})", "r s t", wide=True)
def _(r, s, t):
    return p(r * s, t, X) >> p(r, s, B(t, X)), p(r, s * t, X) >> BangM(r, p(s, t, X))


@law("E3-COMONOID-ASSOC", "graded comonoid: coassociativity",
     "c_{r+s,t};(c_{r,s}⊗1) = c_{r,s+t};(1⊗c_{s,t})", "r s t", wide=True)
def _(r, s, t):
    lhs = c(r + s, t, X) >> (c(r, s, X) @ one(B(t, X)))
    rhs = c(r, s + t, X) >> (one(B(r, X)) @ c(s, t, X))
    return lhs, rhs


@law("E3-COMONOID-COUNIT-R", "graded comonoid: right counit", "c_{r,0};(1⊗w) = 1", "r")
def _(r):
    return c(r, 0, X) >> (one(B(r, X)) @ w(X)), one(B(r, X))


@law("E3-COMONOID-COUNIT-L", "graded comonoid: left counit", "c_{0,r};(w⊗1) = 1", "r")
def _(r):
    return c(0, r, X) >> (w(X) @ one(B(r, X))), one(B(r, X))


@law("E3-COMONOID-COMM", "graded comonoid: cocommutativity", "c_{r,s};σ = c_{s,r}", "r s")
def _(r, s):
    return c(r, s, X) >> Sym(B(r, X), B(s, X)), c(s, r, X)


@law("E4-PROM-COMULT", "promotion is a comonoid morphism: comultiplication",
     "p_{r+s,t};c_{r,s} = c_{rt,st};(p_{r,t}⊗p_{s,t})", "r s t", wide=True)
def _(r, s, t):
    return (p(r + s, t, X) >> c(r, s, B(t, X)),
            c(r * t, s * t, X) >> (p(r, t, X) @ p(s, t, X)))


@law("E4-PROM-COUNIT", "promotion is a comonoid morphism: counit", "p_{0,r};w = w", "r")
def _(r):
    return p(0, r, X) >> w(B(r, X)), w(X)


# ============================================================================
# graded monoidal coalgebra modality
# ============================================================================

@law("E5-MU-ASSOC", "graded monoidal functor: associativity",
     "(μ⊗_r⊗1);μ⊗_r = (1⊗μ⊗_r);μ⊗_r", "r", slots=("X", "Y", "Z"), wide=True)
def _(r):
    lhs = (mu(r, X, Y) @ one(B(r, Z))) >> mu(r, ten(X, Y), Z)
    rhs = (one(B(r, X)) @ mu(r, Y, Z)) >> mu(r, X, ten(Y, Z))
    return lhs, rhs


@law("E5-MU-UNIT-L", "graded monoidal functor: left unit", "(μI_r⊗1);μ⊗_r = 1", "r")
def _(r):
    return (muI(r) @ one(B(r, X))) >> mu(r, ONE, X), one(B(r, X))


@law("E5-MU-UNIT-R", "graded monoidal functor: right unit", "(1⊗μI_r);μ⊗_r = 1", "r")
def _(r):
    return (one(B(r, X)) @ muI(r)) >> mu(r, X, ONE), one(B(r, X))


@law("E5-MU-SYM", "graded monoidal functor: symmetry", "σ;μ⊗_r = μ⊗_r;!_r(σ)", "r",
     slots=("X", "Y"))
def _(r):
    return (Sym(B(r, X), B(r, Y)) >> mu(r, Y, X),
            mu(r, X, Y) >> BangM(r, Sym(X, Y)))


@law("E6-PROM-MU", "promotion is monoidal",
     "μ⊗_{rs};p_{r,s} = (p_{r,s}⊗p_{r,s});μ⊗_r;!_r(μ⊗_s)", "r s", slots=("X", "Y"), wide=True)
def _(r, s):
    return (mu(r * s, X, Y) >> p(r, s, ten(X, Y)),
            (p(r, s, X) @ p(r, s, Y)) >> mu(r, B(s, X), B(s, Y)) >> BangM(r, mu(s, X, Y)))


@law("E6-PROM-MUI", "promotion is monoidal: unit", "μI_{rs};p_{r,s} = μI_r;!_r(μI_s)", "r s",
     slots=())
def _(r, s):
    return muI(r * s) >> p(r, s, ONE), muI(r) >> BangM(r, muI(s))


@law("E6-DER-MU", "dereliction is monoidal", "μ⊗_1;d = d⊗d", slots=("X", "Y"))
def _():
    return mu(1, X, Y) >> d(ten(X, Y)), d(X) @ d(Y)


@law("E6-DER-MUI", "dereliction is monoidal: unit", "μI_1;d = 1", slots=())
def _():
    return muI(1) >> d(ONE), one(ONE)


@law("E7-CONTR-MU", "contraction is monoidal",
     "μ⊗_{r+s};c_{r,s} = (c_{r,s}⊗c_{r,s});(1⊗σ⊗1);(μ⊗_r⊗μ⊗_s)", "r s", slots=("X", "Y"),
     wide=True)
def _(r, s):
    lhs = mu(r + s, X, Y) >> c(r, s, ten(X, Y))
    rhs = seq(c(r, s, X) @ c(r, s, Y),
              par(one(B(r, X)), Sym(B(s, X), B(r, Y)), one(B(s, Y))),
              mu(r, X, Y) @ mu(s, X, Y))
    return lhs, rhs


@law("E7-CONTR-MUI", "contraction is monoidal: unit", "μI_{r+s};c_{r,s} = μI_r⊗μI_s", "r s",
     slots=())
def _(r, s):
    return muI(r + s) >> c(r, s, ONE), muI(r) @ muI(s)


@law("E7-WEAK-MU", "weakening is monoidal", "μ⊗_0;w = w⊗w", slots=("X", "Y"))
def _():
    return mu(0, X, Y) >> w(ten(X, Y)), w(X) @ w(Y)


@law("E7-WEAK-MUI", "weakening is monoidal: unit", "μI_0;w = 1", slots=())
def _():
    return muI(0) >> w(ONE), one(ONE)


@law("E8-PROM-CONTR", "contraction is a coalgebra morphism",
     "p_{r,s+t};!_r(c_{s,t}) = c_{rs,rt};(p_{r,s}⊗p_{r,t});μ⊗_r", "r s t", wide=True)
def _(r, s, t):
    return (p(r, s + t, X) >> BangM(r, c(s, t, X)),
            seq(c(r * s, r * t, X), p(r, s, X) @ p(r, t, X), mu(r, B(s, X), B(t, X))))


@law("E8-PROM-WEAK", "weakening is a coalgebra morphism", "p_{r,0};!_r(w) = w;μI_r", "r")
def _(r):
    return p(r, 0, X) >> BangM(r, w(X)), w(X) >> muI(r)


# ============================================================================
# deriving transformation
# ============================================================================

@law("D-LINEAR", "deriving transformation: linear rule", "∂_0;d = w⊗1")
def _():
    return der(0, X) >> d(X), w(X) @ one(X)


@law("D-PRODUCT", "deriving transformation: product rule",
     "∂_{r+s+1};c_{r+1,s+1} = (c_{r+1,s}⊗1);(1⊗∂_s) + (c_{r,s+1}⊗1);(1⊗σ);(∂_r⊗1)",
     "r s", wide=True)
def _(r, s):
    lhs = der(r + s + 1, X) >> c(r + 1, s + 1, X)
    rhs = (seq(c(r + 1, s, X) @ one(X), one(B(r + 1, X)) @ der(s, X))
           + seq(c(r, s + 1, X) @ one(X), one(B(r, X)) @ Sym(B(s + 1, X), X),
                 der(r, X) @ one(B(s + 1, X))))
    return lhs, rhs


@law("D-CHAIN", "deriving transformation: chain rule",
     "∂_{rs+r+s};p_{r+1,s+1} = (c_{rs+r,s}⊗1);(p_{r,s+1}⊗∂_s);∂_r", "r s", wide=True)
def _(r, s):
    lhs = der(r * s + r + s, X) >> p(r + 1, s + 1, X)
    rhs = seq(c(r * s + r, s, X) @ one(X), p(r, s + 1, X) @ der(s, X), der(r, B(s + 1, X)))
    return lhs, rhs


@law("D-SYMMETRY", "deriving transformation: symmetry rule",
     "(1⊗σ);(∂_r⊗1);∂_{r+1} = (∂_r⊗1);∂_{r+1}", "r")
def _(r):
    lhs = seq(one(B(r, X)) @ Sym(X, X), der(r, X) @ one(X), der(r + 1, X))
    rhs = seq(der(r, X) @ one(X), der(r + 1, X))
    return lhs, rhs


@law("D-MONOIDAL", "deriving transformation: monoidal rule",
     "(1⊗∂_r);μ⊗_{r+1} = (c_{r,1}⊗1⊗1);(1⊗d⊗1⊗1);(1⊗σ⊗1);(μ⊗_r⊗1);∂_r", "r",
     slots=("X", "Y"), wide=True)
def _(r):
    lhs = (one(B(r + 1, X)) @ der(r, Y)) >> mu(r + 1, X, Y)
    rhs = seq(par(c(r, 1, X), one(B(r, Y)), one(Y)),
              par(one(B(r, X)), d(X), one(B(r, Y)), one(Y)),
              par(one(B(r, X)), Sym(X, B(r, Y)), one(Y)),
              par(mu(r, X, Y), one(ten(X, Y))),
              der(r, ten(X, Y)))
    return lhs, rhs


@law("D-PRODUCT-ZERO", "deriving transformation: product rule at zero",
     "∂_0;c_{r,s} = δ_{r,0}·(c_{0,0}⊗1);(1⊗∂_0) + δ_{0,s}·(c_{0,0}⊗1);(1⊗σ);(∂_0⊗1),  r+s=1",
     "r s", grade_source=unit_splittings)
def _(r, s):
    lhs = der(0, X) >> c(r, s, X)
    if r == 0:
        rhs = seq(c(0, 0, X) @ one(X), one(B(0, X)) @ der(0, X))
    else:
        rhs = seq(c(0, 0, X) @ one(X), one(B(0, X)) @ Sym(B(0, X), X), der(0, X) @ one(B(0, X)))
    return lhs, rhs


# ============================================================================
# graded additive bialgebra modality
# ============================================================================

@law("E9-MONOID-ASSOC", "graded monoid: associativity",
     "(c̄_{r,s}⊗1);c̄_{r+s,t} = (1⊗c̄_{s,t});c̄_{r,s+t}", "r s t", wide=True)
def _(r, s, t):
    return ((cb(r, s, X) @ one(B(t, X))) >> cb(r + s, t, X),
            (one(B(r, X)) @ cb(s, t, X)) >> cb(r, s + t, X))


@law("E9-MONOID-UNIT-L", "graded monoid: left unit", "(w̄⊗1);c̄_{0,r} = 1", "r")
def _(r):
    return (wb(X) @ one(B(r, X))) >> cb(0, r, X), one(B(r, X))


@law("E9-MONOID-UNIT-R", "graded monoid: right unit", "(1⊗w̄);c̄_{r,0} = 1", "r")
def _(r):
    return (one(B(r, X)) @ wb(X)) >> cb(r, 0, X), one(B(r, X))


@law("E9-MONOID-COMM", "graded monoid: commutativity", "σ;c̄_{s,r} = c̄_{r,s}", "r s")
def _(r, s):
    return Sym(B(r, X), B(s, X)) >> cb(s, r, X), cb(r, s, X)


@law("E10-BIMONOID", "graded bimonoid: multiplication against comultiplication",
     "c̄_{r,s};c_{t,u} = Σ_{a+b=r, c+d=s, a+c=t, b+d=u} (c_{a,b}⊗c_{c,d});(1⊗σ⊗1);(c̄_{a,c}⊗c̄_{b,d}),"
     "  u = r+s-t", "r s t", where=lambda r, s, t: t <= r + s, wide=True)
def _(r, s, t):
    u = r + s - t
    terms = []
    for a in range(r + 1):
        b, cc = r - a, t - a
        dd = s - cc
        if cc < 0 or dd < 0:
            continue
        terms.append(seq(c(a, b, X) @ c(cc, dd, X),
                         par(one(B(a, X)), Sym(B(b, X), B(cc, X)), one(B(dd, X))),
                         cb(a, cc, X) @ cb(b, dd, X)))
    src = ten(B(r, X), B(s, X))
    return cb(r, s, X) >> c(t, u, X), total(terms, src, ten(B(t, X), B(u, X)))


@law("E10-UNIT-COUNIT", "graded bimonoid: unit against counit", "w̄;w = 1")
def _():
    return wb(X) >> w(X), one(ONE)


@law("E10-UNIT-COMULT", "graded bimonoid: unit against comultiplication", "w̄;c_{0,0} = w̄⊗w̄")
def _():
    return wb(X) >> c(0, 0, X), wb(X) @ wb(X)


@law("E10-MULT-COUNIT", "graded bimonoid: multiplication against counit", "c̄_{0,0};w = w⊗w")
def _():
    return cb(0, 0, X) >> w(X), w(X) @ w(X)


@law("E11-DER-CBAR", "dereliction against cocontraction",
     "c̄_{r,s};d = δ_{r,0}·(w⊗d) + δ_{0,s}·(d⊗w),  r+s=1", "r s", grade_source=unit_splittings)
def _(r, s):
    return cb(r, s, X) >> d(X), (w(X) @ d(X)) if r == 0 else (d(X) @ w(X))


@law("E12-BANG-SUM", "! turns sums into convolution",
     "!_r(f+g) = Σ_{s+t=r} c_{s,t};(!_s(f)⊗!_t(g));c̄_{s,t}", "r", slots=("X", "Y"),
     wide=True, given=(("f", "X", "Y"), ("g", "X", "Y")))
def _(r):
    f, g = Given("f"), Given("g")
    terms = [seq(c(s, t, X), BangM(s, f) @ BangM(t, g), cb(s, t, Y)) for s, t in splittings(r, NAT)]
    return BangM(r, f + g), total(terms, B(r, X), B(r, Y))


@law("E12-BANG-ZERO", "! of the zero map", "!_r(0) = w;w̄ if r = 0, else 0", "r",
     slots=("X", "Y"))
def _(r):
    lhs = BangM(r, Zero(X, Y))
    rhs = (w(X) >> wb(Y)) if r == 0 else Zero(B(r, X), B(r, Y))
    return lhs, rhs


# ============================================================================
# graded monoidal additive bialgebra modality
# ============================================================================

@law("E13-CBAR-PROM", "cocontraction is a coalgebra morphism",
     "c̄_{rs,rt};p_{r,s+t} = (p_{r,s}⊗p_{r,t});μ⊗_r;!_r(c̄_{s,t})", "r s t", wide=True)
def _(r, s, t):
    return (cb(r * s, r * t, X) >> p(r, s + t, X),
            seq(p(r, s, X) @ p(r, t, X), mu(r, B(s, X), B(t, X)), BangM(r, cb(s, t, X))))


@law("E13-WBAR-PROM", "coweakening is a coalgebra morphism", "w̄;p_{r,0} = μI_r;!_r(w̄)", "r")
def _(r):
    return wb(X) >> p(r, 0, X), muI(r) >> BangM(r, wb(X))


@law("E14-CBAR-MU", "cocontraction against the monoidal structure",
     "(1⊗c̄_{r,s});μ⊗_{r+s} = (c_{r,s}⊗1⊗1);(1⊗σ⊗1);(μ⊗_r⊗μ⊗_s);c̄_{r,s}", "r s",
     slots=("X", "Y"), wide=True)
def _(r, s):
    lhs = (one(B(r + s, X)) @ cb(r, s, Y)) >> mu(r + s, X, Y)
    rhs = seq(par(c(r, s, X), one(B(r, Y)), one(B(s, Y))),
              par(one(B(r, X)), Sym(B(s, X), B(r, Y)), one(B(s, Y))),
              mu(r, X, Y) @ mu(s, X, Y),
              cb(r, s, ten(X, Y)))
    return lhs, rhs


@law("E14-WBAR-MU", "coweakening against the monoidal structure", "(1⊗w̄);μ⊗_0 = w;w̄",
     slots=("X", "Y"))
def _():
    return (one(B(0, X)) @ wb(Y)) >> mu(0, X, Y), w(X) >> wb(ten(X, Y))


# ============================================================================
# codereliction
# ============================================================================

@law("C-LINEAR", "codereliction: linear rule", "d̄;d = 1")
def _():
    return db(X) >> d(X), one(X)


@law("C-PRODUCT", "codereliction: product rule",
     "d̄;c_{r,s} = δ_{r,0}·(w̄⊗d̄) + δ_{0,s}·(d̄⊗w̄),  r+s=1", "r s", grade_source=unit_splittings)
def _(r, s):
    return db(X) >> c(r, s, X), (wb(X) @ db(X)) if r == 0 else (db(X) @ wb(X))


@law("C-CHAIN", "codereliction: chain rule", "d̄;p_{1,1} = (w̄⊗d̄);(p_{0,1}⊗d̄);c̄_{0,1}")
def _():
    return (db(X) >> p(1, 1, X),
            seq(wb(X) @ db(X), p(0, 1, X) @ db(B(1, X)), cb(0, 1, B(1, X))))


@law("C-MONOIDAL", "codereliction: monoidal rule", "(1⊗d̄);μ⊗_1 = (d⊗1);d̄", slots=("X", "Y"))
def _():
    return (one(B(1, X)) @ db(Y)) >> mu(1, X, Y), (d(X) @ one(Y)) >> db(ten(X, Y))


# ============================================================================
# Seely isomorphisms and the theorems relating the structures
# ============================================================================

def seely_summands(r, a, b):
    return tuple(ten(B(s, a), B(t, b)) for s, t in splittings(r, NAT))


@law("SEELY-RT1", "Seely isomorphism: χ⊗ then its inverse", "χ⊗_r;(χ⊗_r)⁻¹ = 1", "r",
     slots=("X", "Y"), wide=True)
def _(r):
    return chi(r, X, Y) >> chi_inv(r, X, Y), one(B(r, plus(X, Y)))


@law("SEELY-RT2", "Seely isomorphism: inverse then χ⊗", "(χ⊗_r)⁻¹;χ⊗_r = 1", "r",
     slots=("X", "Y"), wide=True)
def _(r):
    return chi_inv(r, X, Y) >> chi(r, X, Y), one(plus(*seely_summands(r, X, Y)))


@law("SEELY-UNIT-RT1", "Seely isomorphism on the zero object: χI then inverse", "χI;χI⁻¹ = 1",
     slots=())
def _():
    return CHI_I >> CHI_I_INV, one(B(0, NIL))


@law("SEELY-UNIT-RT2", "Seely isomorphism on the zero object: inverse then χI", "χI⁻¹;χI = 1",
     slots=())
def _():
    return CHI_I_INV >> CHI_I, one(ONE)


@law("SEELY-CBAR", "cocontraction recovered from the Seely inverse",
     "ι_{r,s};(χ⊗_{r+s})⁻¹;!_{r+s}(∇) = c̄_{r,s}", "r s",
     where=lambda r, s: True, wide=True)
def _(r, s):
    n = r + s
    j = splittings(n, NAT).index((r, s))
    inj = Inj(seely_summands(n, X, X), j, f"{r},{s}")
    return seq(inj, chi_inv(n, X, X), BangM(n, Codiag(X))), cb(r, s, X)


@law("SEELY-WBAR", "coweakening recovered from the Seely inverse", "χI⁻¹;!_0(0) = w̄")
def _():
    return CHI_I_INV >> BangM(0, Zero(NIL, X)), wb(X)


@law("CODER-TO-DERIV", "deriving transformation built from codereliction",
     "(1⊗d̄);c̄_{r,1} = ∂_r", "r")
def _(r):
    return (one(B(r, X)) @ db(X)) >> cb(r, 1, X), der(r, X)


@law("DERIV-TO-CODER", "codereliction built from the deriving transformation",
     "(w̄⊗1);∂_0 = d̄")
def _():
    return (wb(X) @ one(X)) >> der(0, X), db(X)


@law("CODER-RT", "codereliction survives the round trip",
     "(w̄⊗1);(1⊗d̄);c̄_{0,1} = d̄")
def _():
    return seq(wb(X) @ one(X), one(B(0, X)) @ db(X), cb(0, 1, X)), db(X)


@law("DERIV-RT", "deriving transformation survives the round trip",
     "(1⊗((w̄⊗1);∂_0));c̄_{r,1} = ∂_r", "r")
def _(r):
    coder = (wb(X) @ one(X)) >> der(0, X)
    return (one(B(r, X)) @ coder) >> cb(r, 1, X), der(r, X)


# ============================================================================
# symmetric powers
# ============================================================================

@law("SPLIT-EPS-SIG", "ε_n is split by ς_n", "ε_n;ς_n = 1", "n")
def _(n):
    return eps(n, X) >> sig(n, X), one(B(n, X))


@law("SPLIT-SIG-EPS", "ς_n;ε_n is the symmetrising idempotent", "ς_n;ε_n = ρ(n)", "n")
def _(n):
    return sig(n, X) >> eps(n, X), rho(n, X)


@law("SPLIT-RHO-IDEM", "ρ(n) is idempotent", "ρ(n);ρ(n) = ρ(n)", "n")
def _(n):
    return rho(n, X) >> rho(n, X), rho(n, X)


@law("SPLIT-RHO-PERM", "ρ(n) equalises and coequalises every permutation",
     "τ;ρ(n) = ρ(n) = ρ(n);τ for all τ", "n")
def _(n):
    objs = (X,) * n
    out = []
    for perm in itertools.permutations(range(n)):
        tau = Perm(objs, perm, "τ")
        out.append((tau >> rho(n, X), rho(n, X)))
        out.append((rho(n, X) >> tau, rho(n, X)))
    return out


def _theta(n, a, b):
    order = tuple(k for i in range(n) for k in (i, n + i))
    return Perm((a,) * n + (b,) * n, order, "θ")


@law("SPLIT-P", "promotion from the splitting", "p_{n,m} = ε_{nm};ς_m^{⊗n};ς_n", "n m",
     wide=True)
def _(n, m):
    inner = par(*([sig(m, X)] * n)) if n else one(ONE)
    return p(n, m, X), seq(eps(n * m, X), inner, sig(n, B(m, X)))


@law("SPLIT-C", "contraction from the splitting", "c_{n,m} = ε_{n+m};(ς_n⊗ς_m)", "n m")
def _(n, m):
    return c(n, m, X), eps(n + m, X) >> (sig(n, X) @ sig(m, X))


@law("SPLIT-MU", "μ⊗ from the splitting", "μ⊗_n = (ε_n⊗ε_n);θ;ς_n", "n", slots=("X", "Y"))
def _(n):
    return mu(n, X, Y), seq(eps(n, X) @ eps(n, Y), _theta(n, X, Y), sig(n, ten(X, Y)))


@law("SPLIT-CBAR", "cocontraction from the splitting",
     "c̄_{n,m} = C(n+m,n)·(ε_n⊗ε_m);ς_{n+m}", "n m")
def _(n, m):
    return cb(n, m, X), Scale(comb(n + m, n), (eps(n, X) @ eps(m, X)) >> sig(n + m, X))


@law("SPLIT-DERIV", "deriving transformation from the splitting",
     "∂_n = (n+1)·(ε_n⊗1);ς_{n+1}", "n")
def _(n):
    return der(n, X), Scale(n + 1, (eps(n, X) @ one(X)) >> sig(n + 1, X))


@law("SPLIT-UNITS", "the degree 0 and 1 maps from the splitting",
     "d = ε_1, d̄ = ς_1, w = ε_0, w̄ = ς_0")
def _():
    return [(d(X), eps(1, X)), (db(X), sig(1, X)), (w(X), eps(0, X)), (wb(X), sig(0, X))]


@law("SPLIT-MUI", "μI from the splitting", "μI_n;ε_n = 1", "n", slots=())
def _(n):
    return muI(n) >> eps(n, ONE), one(ONE)


# ============================================================================
# naturality
# ============================================================================

F = Given("f")
G = Given("g")
NAT_XY = dict(slots=("X", "Y"), wide=True, given=(("f", "X", "Y"),))


def tpow(m, n, a):
    return par(*([m] * n)) if n else one(ONE)


@law("NAT-D", "naturality of dereliction", "d;f = !_1(f);d", **NAT_XY)
def _():
    return d(X) >> F, BangM(1, F) >> d(Y)


@law("NAT-W", "naturality of weakening", "w = !_0(f);w", **NAT_XY)
def _():
    return w(X), BangM(0, F) >> w(Y)


@law("NAT-C", "naturality of contraction", "c_{r,s};(!_r(f)⊗!_s(f)) = !_{r+s}(f);c_{r,s}",
     "r s", **NAT_XY)
def _(r, s):
    return c(r, s, X) >> (BangM(r, F) @ BangM(s, F)), BangM(r + s, F) >> c(r, s, Y)


@law("NAT-P", "naturality of promotion", "p_{r,s};!_r(!_s(f)) = !_{rs}(f);p_{r,s}", "r s",
     **NAT_XY)
def _(r, s):
    return p(r, s, X) >> BangM(r, BangM(s, F)), BangM(r * s, F) >> p(r, s, Y)


@law("NAT-MU", "naturality of μ⊗", "(!_r(f)⊗!_r(g));μ⊗_r = μ⊗_r;!_r(f⊗g)", "r",
     slots=("X", "Y"), wide=True, given=(("f", "X", "Y"), ("g", "X", "Y")))
def _(r):
    return (BangM(r, F) @ BangM(r, G)) >> mu(r, Y, Y), mu(r, X, X) >> BangM(r, F @ G)


@law("NAT-CBAR", "naturality of cocontraction",
     "(!_r(f)⊗!_s(f));c̄_{r,s} = c̄_{r,s};!_{r+s}(f)", "r s", **NAT_XY)
def _(r, s):
    return (BangM(r, F) @ BangM(s, F)) >> cb(r, s, Y), cb(r, s, X) >> BangM(r + s, F)


@law("NAT-WBAR", "naturality of coweakening", "w̄;!_0(f) = w̄", **NAT_XY)
def _():
    return wb(X) >> BangM(0, F), wb(Y)


@law("NAT-DERIV", "naturality of the deriving transformation",
     "(!_r(f)⊗f);∂_r = ∂_r;!_{r+1}(f)", "r", **NAT_XY)
def _(r):
    return (BangM(r, F) @ F) >> der(r, Y), der(r, X) >> BangM(r + 1, F)


@law("NAT-CODER", "naturality of codereliction", "d̄;!_1(f) = f;d̄", **NAT_XY)
def _():
    return db(X) >> BangM(1, F), F >> db(Y)


@law("NAT-EPS", "naturality of ε", "ε_n;f^{⊗n} = !_n(f);ε_n", "n", **NAT_XY)
def _(n):
    return eps(n, X) >> tpow(F, n, X), BangM(n, F) >> eps(n, Y)


@law("NAT-SIG", "naturality of ς", "ς_n;!_n(f) = f^{⊗n};ς_n", "n", **NAT_XY)
def _(n):
    return sig(n, X) >> BangM(n, F), tpow(F, n, X) >> sig(n, Y)


@law("NAT-RHO", "naturality of ρ", "ρ(n);f^{⊗n} = f^{⊗n};ρ(n)", "n", **NAT_XY)
def _(n):
    return rho(n, X) >> tpow(F, n, X), tpow(F, n, X) >> rho(n, Y)


def _sum_map(f, g, a, b):
    # f ⊕ g : a ⊕ a -> b ⊕ b, written with the biproduct maps
    return (seq(Proj((a, a), 0), f, Inj((b, b), 0)) + seq(Proj((a, a), 1), g, Inj((b, b), 1)))


@law("NAT-SEELY", "naturality of the Seely isomorphism",
     "χ⊗_r;⊕(!_s(f)⊗!_t(g)) = !_r(f⊕g);χ⊗_r", "r", slots=("X", "Y"), wide=True,
     given=(("f", "X", "Y"), ("g", "X", "Y")))
def _(r):
    src_summands = seely_summands(r, X, X)
    tgt_summands = seely_summands(r, Y, Y)
    terms = [seq(Proj(src_summands, j), BangM(s, F) @ BangM(t, G), Inj(tgt_summands, j))
             for j, (s, t) in enumerate(splittings(r, NAT))]
    both = total(terms, plus(*src_summands), plus(*tgt_summands))
    return chi(r, X, X) >> both, BangM(r, _sum_map(F, G, X, Y)) >> chi(r, Y, Y)


# ============================================================================

BY_ID = {e.id: e for e in CATALOG}
assert len(BY_ID) == len(CATALOG), "duplicate equation id"


def catalog() -> list:
    return list(CATALOG)


def select(only: Iterable[str] | None) -> list:
    if not only:
        return catalog()
    chosen = []
    for key in only:
        if key in BY_ID:
            chosen.append(BY_ID[key])
            continue
        matched = [e for e in CATALOG if e.id.startswith(key)]
        if not matched:
            raise KeyError(f"no equation matches {key!r}")
        chosen.extend(matched)
    seen, out = set(), []
    for e in chosen:
        if e.id not in seen:
            seen.add(e.id)
            out.append(e)
    return out
