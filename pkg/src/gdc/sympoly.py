"""Homogeneous polynomials and the symmetric-power model over the rationals.

The first half is a small polynomial calculus: monomials, homogeneous
polynomials, multiplication, shuffles, substitution, formal
differentiation and the splitting maps between symmetric and full tensor
powers.  The second half packages the same operations as exact linear
maps on monomial bases so the law checker can run on them, in either the
codifferential orientation (:func:`adapter`) or the primal one
(:func:`primal_adapter`).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod
from typing import Callable, Mapping, Sequence

from . import frel
from ._render import render, sort_key
from .frel import UNIT, BoundaryError, FinSet, bang_set, join, parts, split, tensor_objects
from .frel_model import _block_decompositions, _couplings, distinct_orderings
from .multiset import Multiset, msum, submultisets, zero_multiset

DEFAULT_VARS = ("x", "y", "z")
SCALARS = ("Q", "N")


class PolyError(ValueError):
    """Variable-list, degree or homogeneity mismatch."""


class NotInvertibleError(ArithmeticError):
    """A division the coefficient semiring cannot perform."""


# -- monomials and polynomials ---------------------------------------------------

@dataclass(frozen=True)
class Monomial:
    exps: tuple

    def __post_init__(self):
        if any(e < 0 for e in self.exps):
            raise PolyError("exponents must be non-negative")

    @property
    def degree(self) -> int:
        return sum(self.exps)

    def sort_key(self):
        # graded lexicographic, x^2 before x*y before y^2
        return (self.degree, tuple(-e for e in self.exps))

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(a + b for a, b in zip(self.exps, other.exps)))

    def render(self, names: Sequence[str] = DEFAULT_VARS) -> str:
        bits = []
        for name, e in zip(names, self.exps):
            if e == 1:
                bits.append(name)
            elif e > 1:
                bits.append(f"{name}^{e}")
        return "*".join(bits) or "1"

    def letters(self) -> list:
        """The monomial as a sorted word of variable indices."""
        return [i for i, e in enumerate(self.exps) for _ in range(e)]


def unit_monomial(nvars: int) -> Monomial:
    return Monomial((0,) * nvars)


def variable(i: int, nvars: int) -> Monomial:
    return Monomial(tuple(int(j == i) for j in range(nvars)))


def monomials(nvars: int, degree: int) -> list:
    """All monomials of the given degree, in graded-lex order."""
    out = []
    for combo in itertools.combinations_with_replacement(range(nvars), degree):
        exps = [0] * nvars
        for i in combo:
            exps[i] += 1
        out.append(Monomial(tuple(exps)))
    return sorted(out, key=Monomial.sort_key)


def _clean(terms: Mapping) -> dict:
    return {k: Fraction(v) for k, v in terms.items() if v != 0}


def _fmt_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


class HomPoly:
    """A homogeneous polynomial of fixed degree in named variables."""

    __slots__ = ("vars", "degree", "terms")

    def __init__(self, vars: Sequence[str], degree: int, terms: Mapping | None = None):
        self.vars = tuple(vars)
        self.degree = degree
        self.terms = _clean(terms or {})
        for m in self.terms:
            if len(m.exps) != len(self.vars):
                raise PolyError(f"monomial {m.exps} does not fit variables {self.vars}")
            if m.degree != degree:
                raise PolyError(f"monomial of degree {m.degree} in a degree-{degree} polynomial")

    @classmethod
    def monomial(cls, vars: Sequence[str], exps: Sequence[int], coeff=1) -> "HomPoly":
        m = Monomial(tuple(exps))
        return cls(vars, m.degree, {m: coeff})

    @classmethod
    def parse(cls, text: str, vars: Sequence[str] = DEFAULT_VARS, degree: int | None = None) -> "HomPoly":
        """Read ``2*x^2*y + y^3``; ``^`` and ``**`` both mean a power."""
        import sympy

        syms = sympy.symbols(list(vars))
        try:
            expr = sympy.sympify(text.replace("^", "**"), locals=dict(zip(vars, syms)))
        except (sympy.SympifyError, SyntaxError, TypeError) as exc:
            raise PolyError(f"cannot parse {text!r}: {exc}") from None
        extra = expr.free_symbols - set(syms)
        if extra:
            names = ", ".join(sorted(str(s) for s in extra))
            raise PolyError(f"unknown variable(s) {names}; declared: {', '.join(vars)}")
        poly = sympy.Poly(expr, *syms)
        terms = {}
        for exps, c in poly.terms():
            if not c.is_Rational:
                raise PolyError(f"coefficient {c} is not rational")
            terms[Monomial(tuple(exps))] = Fraction(int(c.p), int(c.q))
        degrees = {m.degree for m, c in terms.items() if c}
        if len(degrees) > 1:
            raise PolyError(f"{text!r} is not homogeneous (degrees {sorted(degrees)})")
        if degrees:
            (found,) = degrees
            if degree is not None and degree != found:
                raise PolyError(f"{text!r} has degree {found}, expected {degree}")
            degree = found
        elif degree is None:
            raise PolyError("the zero polynomial needs an explicit degree")
        return cls(vars, degree, terms)

    def items(self) -> list:
        return sorted(self.terms.items(), key=lambda kv: kv[0].sort_key())

    def __eq__(self, other):
        if not isinstance(other, HomPoly):
            return NotImplemented
        return (self.vars, self.degree, self.terms) == (other.vars, other.degree, other.terms)

    def __hash__(self):
        return hash((self.vars, self.degree, frozenset(self.terms.items())))

    def _same(self, other: "HomPoly") -> None:
        if self.vars != other.vars:
            raise PolyError(f"variable lists differ: {self.vars} vs {other.vars}")

    def __add__(self, other: "HomPoly") -> "HomPoly":
        self._same(other)
        if self.degree != other.degree:
            raise PolyError("cannot add polynomials of different degrees")
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return HomPoly(self.vars, self.degree, out)

    def scaled(self, q) -> "HomPoly":
        return HomPoly(self.vars, self.degree, {m: c * q for m, c in self.terms.items()})

    def __mul__(self, other: "HomPoly") -> "HomPoly":
        return poly_mul(self, other)

    def evaluate(self, point: Sequence) -> Fraction:
        total = Fraction(0)
        for m, c in self.terms.items():
            total += c * prod(Fraction(v) ** e for v, e in zip(point, m.exps))
        return total

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for m, c in self.items():
            body = m.render(self.vars)
            if body == "1":
                term = _fmt_coeff(abs(c))
            elif abs(c) == 1:
                term = body
            else:
                term = f"{_fmt_coeff(abs(c))}*{body}"
            out.append(("- " if c < 0 else "+ ") + term)
        text = " ".join(out)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self) -> str:
        return f"HomPoly({str(self)!r}, degree={self.degree})"


class Tensor2:
    """An element of ``S^n M ⊗ S^m M``: pairs of monomials with coefficients."""

    __slots__ = ("vars", "bidegree", "terms")

    def __init__(self, vars: Sequence[str], bidegree: tuple, terms: Mapping | None = None):
        self.vars = tuple(vars)
        self.bidegree = tuple(bidegree)
        self.terms = _clean(terms or {})
        n, m = self.bidegree
        for a, b in self.terms:
            if a.degree != n or b.degree != m:
                raise PolyError(f"term of bidegree {(a.degree, b.degree)} in a {self.bidegree} tensor")

    def items(self) -> list:
        return sorted(self.terms.items(), key=lambda kv: (kv[0][1].sort_key(), kv[0][0].sort_key()))

    def __eq__(self, other):
        if not isinstance(other, Tensor2):
            return NotImplemented
        return (self.vars, self.bidegree, self.terms) == (other.vars, other.bidegree, other.terms)

    def __hash__(self):
        return hash((self.vars, self.bidegree, frozenset(self.terms.items())))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for (a, b), c in self.items():
            pair_ = f"({a.render(self.vars)} ⊗ {b.render(self.vars)})"
            out.append(pair_ if c == 1 else f"{_fmt_coeff(c)}·{pair_}")
        return " + ".join(out)

    def __repr__(self) -> str:
        return f"Tensor2({str(self)!r}, bidegree={self.bidegree})"


def poly_mul(p: HomPoly, q: HomPoly) -> HomPoly:
    """Ordinary product; degrees add."""
    p._same(q)
    out: dict = {}
    for a, c in p.terms.items():
        for b, e in q.terms.items():
            m = a * b
            out[m] = out.get(m, 0) + c * e
    return HomPoly(p.vars, p.degree + q.degree, out)


def shuffle_split(p: HomPoly, n: int, m: int) -> Tensor2:
    """Sum over the (n, m)-shuffles of each monomial's letters.

    A monomial ``x^a`` splits as ``x^b ⊗ x^(a-b)`` once for every way of
    choosing which letters go left, i.e. ``Π C(a_i, b_i)`` times.
    """
    if p.degree != n + m:
        raise PolyError(f"shuffle_split of a degree-{p.degree} polynomial into ({n}, {m})")
    out: dict = {}
    for mono, c in p.terms.items():
        for left in _sub_exponents(mono.exps, n):
            right = tuple(a - b for a, b in zip(mono.exps, left))
            weight = prod(comb(a, b) for a, b in zip(mono.exps, left))
            key = (Monomial(left), Monomial(right))
            out[key] = out.get(key, 0) + c * weight
    return Tensor2(p.vars, (n, m), out)


def _sub_exponents(exps: tuple, n: int):
    """Exponent vectors ``b ≤ exps`` with ``Σ b = n``."""
    if not exps:
        if n == 0:
            yield ()
        return
    head, rest = exps[0], exps[1:]
    for b in range(min(head, n), -1, -1):
        for tail in _sub_exponents(rest, n - b):
            yield (b,) + tail


def substitute(outer: HomPoly, assignments: Mapping[str, HomPoly]) -> HomPoly:
    """Replace each variable of ``outer`` by a polynomial of a common degree."""
    missing = [v for v in outer.vars if v not in assignments]
    if missing:
        raise PolyError(f"no assignment for {', '.join(missing)}")
    values = [assignments[v] for v in outer.vars]
    if not values:
        raise PolyError("outer polynomial has no variables")
    inner_vars = values[0].vars
    degrees = {q.degree for q in values}
    if len(degrees) != 1:
        raise PolyError(f"assignments must share one degree, got {sorted(degrees)}")
    for q in values:
        if q.vars != inner_vars:
            raise PolyError("assignments use different variable lists")
    (n,) = degrees
    result = HomPoly(inner_vars, outer.degree * n)
    for mono, c in outer.terms.items():
        term = HomPoly(inner_vars, 0, {unit_monomial(len(inner_vars)): c})
        for q, e in zip(values, mono.exps):
            for _ in range(e):
                term = poly_mul(term, q)
        result = result + term
    return result


def derive(p: HomPoly) -> Tensor2:
    """``Σ_i ∂p/∂x_i ⊗ x_i``."""
    if p.degree < 1:
        raise PolyError("cannot differentiate a constant")
    k = len(p.vars)
    out: dict = {}
    for mono, c in p.terms.items():
        for i, e in enumerate(mono.exps):
            if e:
                lowered = Monomial(tuple(a - (j == i) for j, a in enumerate(mono.exps)))
                key = (lowered, variable(i, k))
                out[key] = out.get(key, 0) + c * e
    return Tensor2(p.vars, (p.degree - 1, 1), out)


def contract(t: Tensor2) -> HomPoly:
    """Multiply the two tensor factors back together."""
    n, m = t.bidegree
    out: dict = {}
    for (a, b), c in t.terms.items():
        out[a * b] = out.get(a * b, 0) + c
    return HomPoly(t.vars, n + m, out)


# -- exact linear maps on finite bases -----------------------------------------------

def _vec(pairs) -> dict:
    out: dict = {}
    for y, c in pairs:
        if c:
            out[y] = out.get(y, 0) + c
    return {y: c for y, c in out.items() if c != 0}


class LinMap:
    """A linear map between free modules with finite bases.

    ``image(x)`` gives the target combination of a source basis element
    as a dict of nonzero :class:`Fraction` coefficients; it is memoised.
    """

    __slots__ = ("source", "target", "_fn", "_cache")

    def __init__(self, source: FinSet, target: FinSet, image: Callable):
        self.source = source
        self.target = target
        self._fn = image
        self._cache: dict = {}

    def image(self, x) -> dict:
        hit = self._cache.get(x)
        if hit is None:
            hit = {y: Fraction(c) for y, c in self._fn(x).items() if c != 0}
            self._cache[x] = hit
        return hit

    def __call__(self, vector: Mapping) -> dict:
        out: dict = {}
        for x, c in vector.items():
            for y, e in self.image(x).items():
                out[y] = out.get(y, 0) + c * e
        return {y: c for y, c in out.items() if c != 0}

    def entries(self) -> list:
        """Sorted ``(x, y, coeff)`` triples."""
        out = []
        for x in self.source:
            for y, c in sorted(self.image(x).items(), key=lambda kv: sort_key(kv[0])):
                out.append((x, y, c))
        return out

    def __eq__(self, other):
        if not isinstance(other, LinMap):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and first_difference(self, other) is None)

    __hash__ = None

    def __rshift__(self, other: "LinMap") -> "LinMap":
        return compose(self, other)

    def __matmul__(self, other: "LinMap") -> "LinMap":
        return tensor(self, other)

    def __add__(self, other: "LinMap") -> "LinMap":
        return add(self, other)

    def __repr__(self) -> str:
        return f"LinMap({self.source.describe()} -> {self.target.describe()})"


def _boundary(a: FinSet, b: FinSet, what: str) -> None:
    if a != b:
        raise BoundaryError(f"{what}: {a.describe()} vs {b.describe()}")


def identity(x: FinSet) -> LinMap:
    return LinMap(x, x, lambda v: {v: 1})


def from_rel(r: frel.Rel) -> LinMap:
    """Each related pair with coefficient 1 (used for permutations and biproduct maps)."""
    return LinMap(r.source, r.target, lambda v: {y: 1 for y in r.image(v)})


def compose(*maps: LinMap) -> LinMap:
    """Diagrammatic: ``compose(f, g)`` is f then g."""
    acc = maps[0]
    for g in maps[1:]:
        _boundary(acc.target, g.source, "composite")
        acc = _compose2(acc, g)
    return acc


def _compose2(f: LinMap, g: LinMap) -> LinMap:
    return LinMap(f.source, g.target, lambda v: g(f.image(v)))


def tensor(*maps: LinMap) -> LinMap:
    if not maps:
        return identity(UNIT)
    acc = maps[0]
    for g in maps[1:]:
        acc = _tensor2(acc, g)
    return acc


def _tensor2(f: LinMap, g: LinMap) -> LinMap:
    objs = [f.source, g.source]
    tx, ty = f.target, g.target

    def image(z):
        a, b = split(z, objs)
        ia = f.image(a)
        if not ia:
            return {}
        ib = g.image(b)
        return {frel.pair(u, tx, v, ty): c * e for u, c in ia.items() for v, e in ib.items()}

    return LinMap(tensor_objects(f.source, g.source), tensor_objects(tx, ty), image)


def add(f: LinMap, g: LinMap) -> LinMap:
    _boundary(f.source, g.source, "sum (source)")
    _boundary(f.target, g.target, "sum (target)")

    def image(v):
        out = dict(f.image(v))
        for y, c in g.image(v).items():
            out[y] = out.get(y, 0) + c
        return out

    return LinMap(f.source, f.target, image)


def zero(x: FinSet, y: FinSet) -> LinMap:
    return LinMap(x, y, lambda v: {})


def scale(q, f: LinMap) -> LinMap:
    q = Fraction(q)
    return LinMap(f.source, f.target, lambda v: {y: q * c for y, c in f.image(v).items()})


def first_difference(f: LinMap, g: LinMap):
    for x in f.source:
        a, b = f.image(x), g.image(x)
        if a != b:
            return x, a, b
    return None


def lin_equal(f: LinMap, g: LinMap) -> bool:
    _boundary(f.source, g.source, "equality (source)")
    _boundary(f.target, g.target, "equality (target)")
    return first_difference(f, g) is None


def bang_map(n: int, f: LinMap) -> LinMap:
    """The symmetric power ``S^n(f)``: multiply the images of the letters."""
    src, tgt = bang_set(n, f.source), bang_set(n, f.target)
    base = f.target

    def image(mono: Multiset):
        acc = {zero_multiset(base): Fraction(1)}
        for a in mono.elements():
            step: dict = {}
            for m, c in acc.items():
                for b, e in f.image(a).items():
                    key = msum(m, Multiset._trusted({b: 1}, base))
                    step[key] = step.get(key, 0) + c * e
            acc = step
        return acc

    return LinMap(src, tgt, image)


def all_01_maps(x: FinSet, y: FinSet) -> list:
    """Every map whose matrix has entries 0 or 1."""
    cells = list(itertools.product(x.elements, y.elements))
    out = []
    for mask in range(1 << len(cells)):
        table: dict = {}
        for i, (a, b) in enumerate(cells):
            if mask >> i & 1:
                table.setdefault(a, {})[b] = 1
        out.append(LinMap(x, y, lambda v, t=table: t.get(v, {})))
    return out


def generic_map(x: FinSet, y: FinSet) -> LinMap:
    """A map with pairwise distinct, non-integral entries."""
    ys = y.elements
    rows = {a: {b: Fraction(i * len(ys) + j + 2, j + 3) * (-1) ** (i + j)
                for j, b in enumerate(ys)}
            for i, a in enumerate(x.elements)}
    return LinMap(x, y, lambda v: rows[v])


# -- splitting maps on monomial bases -------------------------------------------------

def _require_division(k: str, n: int) -> None:
    if k not in SCALARS:
        raise PolyError(f"unknown scalars {k!r}; known: {', '.join(SCALARS)}")
    if k == "N" and factorial(n) != 1:
        raise NotInvertibleError(f"{n}! is not invertible in the naturals")


def _variables(vars: Sequence[str]) -> FinSet:
    return frel.atoms(len(vars), vars)


def _weight(f: Multiset) -> Fraction:
    """``Π f(x)! / n!``: the symmetriser weight of each distinct ordering of f."""
    return Fraction(prod(factorial(k) for _, k in f.sorted_items()), factorial(f.degree))


def _orderings(f: Multiset, x: FinSet):
    for t in distinct_orderings(f):
        yield join([e for part in t for e in parts(part, x)]) if t else ()


@lru_cache(maxsize=1024)
def symmetriser(n: int, x: FinSet) -> LinMap:
    """``x_1 ⊗_s … ⊗_s x_n ↦ (1/n!) Σ_τ x_τ1 ⊗ … ⊗ x_τn``, from ``S^n`` to the full power."""
    w = lambda f: {t: _weight(f) for t in _orderings(f, x)}
    return LinMap(bang_set(n, x), frel.tensor_power(x, n), w)


@lru_cache(maxsize=1024)
def quotient(n: int, x: FinSet) -> LinMap:
    """``x_1 ⊗ … ⊗ x_n ↦ x_1 ⊗_s … ⊗_s x_n``."""
    def image(z):
        entries = split(z, [x] * n) if n else []
        return {Multiset(entries, x): 1}

    return LinMap(frel.tensor_power(x, n), bang_set(n, x), image)


@lru_cache(maxsize=1024)
def rho_map(n: int, x: FinSet) -> LinMap:
    """``(1/n!) Σ_τ τ`` on the n-fold tensor power."""
    obj = frel.tensor_power(x, n)
    w = Fraction(1, factorial(n))

    def image(z):
        entries = split(z, [x] * n) if n else []
        return _vec((join([e for p in perm for e in parts(p, x)]) if n else (), w)
                    for perm in itertools.permutations(entries))

    return LinMap(obj, obj, image)


def eps_poly(n: int, vars: Sequence[str] = DEFAULT_VARS[:2], k: str = "Q") -> LinMap:
    """The symmetriser ``S^n M -> M^⊗n`` on the monomial basis."""
    _require_division(k, n)
    return symmetriser(n, _variables(vars))


def sig_poly(n: int, vars: Sequence[str] = DEFAULT_VARS[:2], k: str = "Q") -> LinMap:
    """The quotient ``M^⊗n -> S^n M``."""
    _require_division(k, 0)
    return quotient(n, _variables(vars))


def rho_poly(n: int, vars: Sequence[str] = DEFAULT_VARS[:2], k: str = "Q") -> LinMap:
    _require_division(k, n)
    return rho_map(n, _variables(vars))


def to_basis(p: HomPoly) -> dict:
    """A polynomial as a combination of multisets over its variables."""
    x = _variables(p.vars)
    return {Multiset._trusted({v: e for v, e in zip(p.vars, m.exps) if e}, x): c
            for m, c in p.terms.items()}


def from_basis(vector: Mapping, vars: Sequence[str], degree: int) -> HomPoly:
    index = {v: i for i, v in enumerate(vars)}
    out = {}
    for f, c in vector.items():
        exps = [0] * len(vars)
        for v, e in f.sorted_items():
            exps[index[v]] = e
        out[Monomial(tuple(exps))] = c
    return HomPoly(vars, degree, out)


# -- structure maps -------------------------------------------------------------------

def _lin(src, tgt, fn) -> LinMap:
    return LinMap(src, tgt, fn)


def _one(x):
    return {x: 1}


def _shuffle_coeff(f: Multiset, g: Multiset) -> int:
    return prod(comb(k, g[v]) for v, k in f.sorted_items())


def _fact_prod(f: Multiset) -> int:
    return prod(factorial(k) for _, k in f.sorted_items())


def _flatten_blocks(F: Multiset, x: FinSet) -> Multiset:
    acc = zero_multiset(x)
    for g, k in F.sorted_items():
        acc = msum(acc, g.scaled(k))
    return acc


@lru_cache(maxsize=4096)
def codiff_map(family: str, grades: tuple, objs: tuple) -> LinMap:
    """Structure maps of the codifferential structure, in module direction."""
    g = grades
    if family == "d":
        (x,) = objs
        return _lin(x, bang_set(1, x), lambda v: {Multiset._trusted({v: 1}, x): 1})
    if family == "coder":
        (x,) = objs
        return _lin(bang_set(1, x), x, lambda f: {f.elements()[0]: 1})
    if family == "w":
        (x,) = objs
        return _lin(UNIT, bang_set(0, x), lambda _: {zero_multiset(x): 1})
    if family == "wbar":
        (x,) = objs
        return _lin(bang_set(0, x), UNIT, lambda _: {(): 1})
    if family == "c":
        (x,) = objs
        n, m = g
        src = tensor_objects(bang_set(n, x), bang_set(m, x))
        objs2 = [bang_set(n, x), bang_set(m, x)]
        return _lin(src, bang_set(n + m, x),
                    lambda z: (lambda a, b: {msum(a, b): 1})(*split(z, objs2)))
    if family == "cbar":
        (x,) = objs
        n, m = g
        tgt = tensor_objects(bang_set(n, x), bang_set(m, x))
        return _lin(bang_set(n + m, x), tgt,
                    lambda f: {(a, f - a): _shuffle_coeff(f, a) for a in submultisets(f, n)})
    if family == "p":
        (x,) = objs
        n, m = g
        inner = bang_set(m, x)
        return _lin(bang_set(n, inner), bang_set(n * m, x), lambda F: {_flatten_blocks(F, x): 1})
    if family == "mu":
        x, y = objs
        (n,) = g
        xy = tensor_objects(x, y)
        tgt = tensor_objects(bang_set(n, x), bang_set(n, y))
        return _lin(bang_set(n, xy), tgt, lambda h: {_marginals(h, x, y): 1})
    if family == "muI":
        (n,) = g
        return _lin(bang_set(n, UNIT), UNIT, lambda _: {(): 1})
    if family == "deriv":
        (x,) = objs
        (n,) = g
        tgt = tensor_objects(bang_set(n, x), x)
        return _lin(bang_set(n + 1, x), tgt,
                    lambda f: {(f - Multiset._trusted({v: 1}, x), v): k for v, k in f.sorted_items()}
                    if n else {(zero_multiset(x), v): k for v, k in f.sorted_items()})
    if family == "eps":
        (x,) = objs
        return quotient(g[0], x)
    if family == "sig":
        (x,) = objs
        return symmetriser(g[0], x)
    if family == "rho":
        (x,) = objs
        return rho_map(g[0], x)
    raise KeyError(family)


def _marginals(h: Multiset, x: FinSet, y: FinSet):
    left: dict = {}
    right: dict = {}
    for pr, k in h.sorted_items():
        a, b = split(pr, [x, y])
        left[a] = left.get(a, 0) + k
        right[b] = right.get(b, 0) + k
    return frel.pair(Multiset._trusted(left, x), bang_set(h.degree, x),
                     Multiset._trusted(right, y), bang_set(h.degree, y))


@lru_cache(maxsize=4096)
def primal_map(family: str, grades: tuple, objs: tuple) -> LinMap:
    """Structure maps built from the splitting of the symmetriser, arrows as written."""
    g = grades
    if family == "d":
        (x,) = objs
        return _lin(bang_set(1, x), x, lambda f: {f.elements()[0]: 1})
    if family == "coder":
        (x,) = objs
        return _lin(x, bang_set(1, x), lambda v: {Multiset._trusted({v: 1}, x): 1})
    if family == "w":
        (x,) = objs
        return _lin(bang_set(0, x), UNIT, lambda _: {(): 1})
    if family == "wbar":
        (x,) = objs
        return _lin(UNIT, bang_set(0, x), lambda _: {zero_multiset(x): 1})
    if family == "c":
        (x,) = objs
        n, m = g
        tgt = tensor_objects(bang_set(n, x), bang_set(m, x))
        total = comb(n + m, n)
        return _lin(bang_set(n + m, x), tgt,
                    lambda f: {(a, f - a): Fraction(_shuffle_coeff(f, a), total)
                               for a in submultisets(f, n)})
    if family == "cbar":
        (x,) = objs
        n, m = g
        objs2 = [bang_set(n, x), bang_set(m, x)]
        total = comb(n + m, n)
        return _lin(tensor_objects(*objs2), bang_set(n + m, x),
                    lambda z: (lambda a, b: {msum(a, b): total})(*split(z, objs2)))
    if family == "p":
        (x,) = objs
        n, m = g
        inner = bang_set(m, x)

        def image(f):
            out = {}
            for F in _block_decompositions(f, n, m, inner):
                orderings = Fraction(factorial(n), _fact_prod(F))
                within = prod(Fraction(factorial(m), _fact_prod(b)) ** k for b, k in F.sorted_items())
                out[F] = orderings * within * _weight(f)
            return out

        return _lin(bang_set(n * m, x), bang_set(n, inner), image)
    if family == "mu":
        x, y = objs
        (n,) = g
        xy = tensor_objects(x, y)
        carrier = bang_set(n, xy)
        objs2 = [bang_set(n, x), bang_set(n, y)]

        def image(z):
            f1, f2 = split(z, objs2)
            scale_ = Fraction(_fact_prod(f1) * _fact_prod(f2), factorial(n))
            return {h: scale_ / _fact_prod(h) for h in _couplings(f1, f2, x, y, xy)}

        return _lin(tensor_objects(*objs2), carrier, image)
    if family == "muI":
        (n,) = g
        point = Multiset._trusted({(): n} if n else {}, UNIT)
        return _lin(UNIT, bang_set(n, UNIT), lambda _: {point: 1})
    if family == "deriv":
        (x,) = objs
        (n,) = g
        src = tensor_objects(bang_set(n, x), x)
        objs2 = [bang_set(n, x), x]
        return _lin(src, bang_set(n + 1, x),
                    lambda z: (lambda f, v: {msum(f, Multiset._trusted({v: 1}, x)): n + 1})(
                        *split(z, objs2)))
    if family == "eps":
        (x,) = objs
        return symmetriser(g[0], x)
    if family == "sig":
        (x,) = objs
        return quotient(g[0], x)
    if family == "rho":
        (x,) = objs
        return rho_map(g[0], x)
    raise KeyError(family)


# -- checker adapters -------------------------------------------------------------------

def _adapter_base():
    from .checker.adapter import SLOT_NAMES, ModelAdapter

    class PolyAdapter(ModelAdapter):
        key = "sympoly"
        dual = True
        builder = staticmethod(codiff_map)

        def carrier(self, size, slot="X"):
            return frel.atoms(size, SLOT_NAMES.get(slot, "abcdefghij"))

        def unit(self):
            return UNIT

        def bang(self, r, x):
            return bang_set(r, x)

        def tensor_obj(self, *xs):
            return tensor_objects(*xs)

        def biproduct(self, xs):
            return frel.biproduct_n(list(xs))

        def identity(self, x):
            return identity(x)

        def compose(self, f, g):
            return compose(f, g)

        def tensor(self, *fs):
            return tensor(*fs)

        def add(self, f, g):
            return add(f, g)

        def zero(self, x, y):
            return zero(x, y)

        def scale(self, q, f):
            return scale(q, f)

        def symmetry(self, x, y):
            return from_rel(frel.symmetry(x, y))

        def permutation(self, objs, perm):
            return from_rel(frel.permutation(objs, perm))

        def bang_map(self, r, f):
            return bang_map(r, f)

        def injection(self, objs, j):
            return from_rel(frel.injection(objs, j))

        def projection(self, objs, j):
            return from_rel(frel.projection(objs, j))

        def codiagonal(self, x):
            return from_rel(frel.codiagonal(x))

        def diagonal(self, x):
            return from_rel(frel.diagonal(x))

        def equal(self, f, g):
            return lin_equal(f, g)

        def difference(self, f, g):
            hit = first_difference(f, g)
            if hit is None:
                return {}
            x, a, b = hit
            show = lambda v: {render(y): _fmt_coeff(c) for y, c in sorted(v.items(), key=lambda kv: sort_key(kv[0]))}
            return {"at": render(x), "lhs": show(a), "rhs": show(b)}

        def serialize(self, f):
            return [[render(x), render(y), _fmt_coeff(c)] for x, y, c in f.entries()]

        def morphisms(self, x, y):
            return _test_maps(x, y)

        def boundary(self, f):
            return f.source, f.target

        def primitive(self, family, grades, objs):
            return self.builder(family, tuple(grades), tuple(objs))

    return PolyAdapter


@lru_cache(maxsize=256)
def _test_maps(x: FinSet, y: FinSet) -> list:
    return all_01_maps(x, y) + [generic_map(x, y)]


def adapter():
    """The codifferential structure; the checker reads its arrows reversed."""
    return _adapter_base()()


def primal_adapter():
    """The structure obtained from the splitting, with arrows as written."""
    cls = _adapter_base()
    inst = cls()
    inst.key = "sympoly-primal"
    inst.dual = False
    inst.builder = primal_map
    return inst
