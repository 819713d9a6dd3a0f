"""The multiset exponential on finite relations.

Every structure map of the graded differential structure is built here
as a :class:`~gdc.frel.Rel`: promotion, dereliction, (co)contraction,
(co)weakening, the lax monoidal maps, the deriving transformation and
codereliction, the splitting of the symmetrising idempotent, and the
Seely isomorphisms.  Constructors are memoised, so the image caches of
the returned relations are shared between callers.
"""
from __future__ import annotations

import itertools
from functools import lru_cache
from math import comb

from . import frel
from .frel import (
    EMPTY, UNIT, ZERO, FinSet, Rel, bang_set, biproduct, biproduct_n, compose,
    identity, injection, join, pair, parts, projection, rsum, rzero, split, tensor,
    tensor_objects, tensor_power,
)
from ._render import sort_key
from .multiset import Multiset, msum, multisets_over, submultisets, zero_multiset
from .semiring import NAT, splittings

_CACHE = 4096


def bang_obj(n: int, x: FinSet) -> FinSet:
    """The set ``!_n X`` of degree-``n`` multisets over ``X``."""
    return bang_set(n, x)


def bang_rel(n: int, s: Rel) -> Rel:
    """Functor action: ``f`` is related to ``g`` when some degree-``n`` multiset
    of pairs of ``s`` has ``f`` and ``g`` as its two marginals."""
    src = bang_set(n, s.source)
    tgt = bang_set(n, s.target)
    if isinstance(s, frel._Identity):
        return identity(src)
    base = s.target

    def image(f: Multiset):
        acc = {zero_multiset(base)}
        for x, k in f.sorted_items():
            ys = sorted(s.image(x), key=sort_key)
            if not ys:
                return EMPTY
            options = list(multisets_over(ys, k, base))
            acc = {msum(a, b) for a in acc for b in options}
        return acc

    return Rel(src, tgt, image=image)


# -- coalgebra modality -----------------------------------------------------

@lru_cache(maxsize=_CACHE)
def dereliction(x: FinSet) -> Rel:
    """``d = {(δ_x, x)}``."""
    return Rel(bang_set(1, x), x, image=lambda f: frozenset(f.support))


@lru_cache(maxsize=_CACHE)
def weakening(x: FinSet) -> Rel:
    """``w = {([], *)}``."""
    return Rel(bang_set(0, x), UNIT, image=lambda f: frozenset(((),)))


@lru_cache(maxsize=_CACHE)
def contraction(n: int, m: int, x: FinSet) -> Rel:
    """``c_{n,m}`` relates ``f`` to every ``(g, h)`` with ``g + h = f``."""
    src = bang_set(n + m, x)
    tgt = tensor_objects(bang_set(n, x), bang_set(m, x))
    return Rel(src, tgt, image=lambda f: frozenset((g, f - g) for g in submultisets(f, n)))


def _block_decompositions(f: Multiset, n: int, m: int, inner: FinSet):
    """All multisets ``F`` of ``n`` degree-``m`` blocks with ``Σ F(g)·g = f``."""
    blocks = sorted(submultisets(f, m), key=sort_key)
    out = []

    def go(start: int, left: int, rest: Multiset, chosen: dict):
        if left == 0:
            if rest.degree == 0:
                out.append(Multiset._trusted(dict(chosen), inner))
            return
        for j in range(start, len(blocks)):
            g = blocks[j]
            if g.le(rest):
                chosen[g] = chosen.get(g, 0) + 1
                go(j, left - 1, rest - g, chosen)
                if chosen[g] == 1:
                    del chosen[g]
                else:
                    chosen[g] -= 1

    if f.degree == n * m:
        go(0, n, f, {})
    return out


@lru_cache(maxsize=_CACHE)
def promotion(n: int, m: int, x: FinSet) -> Rel:
    """``p_{n,m}`` relates ``f`` to each ``F`` with ``f = Σ_g F(g)·g``.

    The multiplicities ``F(g)`` matter: a repeated block contributes once
    per repetition, which keeps ``deg f = n·m``.
    """
    inner = bang_set(m, x)
    src = bang_set(n * m, x)
    tgt = bang_set(n, inner)
    return Rel(src, tgt, image=lambda f: _block_decompositions(f, n, m, inner))


# -- lax monoidal structure ----------------------------------------------

def _couplings(f1: Multiset, f2: Multiset, x: FinSet, y: FinSet, carrier: FinSet):
    """Multisets on ``x ⊗ y`` whose marginals are ``f1`` and ``f2``."""
    left = f1.sorted_items()
    right = [b for b, _ in f2.sorted_items()]
    out = []

    def go(i: int, cap: dict, acc: dict):
        if i == len(left):
            out.append(Multiset._trusted(dict(acc), carrier))
            return
        a, k = left[i]
        # distribute k copies of a among the right entries, within capacity
        def spread(j: int, k_left: int):
            if k_left == 0:
                go(i + 1, cap, acc)
                return
            if j == len(right):
                return
            b = right[j]
            for take in range(min(k_left, cap[b]), -1, -1):
                if take:
                    cap[b] -= take
                    acc[pair(a, x, b, y)] = take
                spread(j + 1, k_left - take)
                if take:
                    cap[b] += take
                    del acc[pair(a, x, b, y)]

        spread(0, k)

    if f1.degree == f2.degree:
        go(0, dict(f2.items()), {})
    return out


@lru_cache(maxsize=_CACHE)
def mu_tensor(n: int, x: FinSet, y: FinSet) -> Rel:
    """``μ⊗_n`` relates ``(f1, f2)`` to every coupling with those marginals."""
    xy = tensor_objects(x, y)
    src = tensor_objects(bang_set(n, x), bang_set(n, y))
    tgt = bang_set(n, xy)
    return Rel(src, tgt, image=lambda z: _couplings(z[0], z[1], x, y, xy))


@lru_cache(maxsize=_CACHE)
def mu_unit(n: int) -> Rel:
    """``μI_n`` sends ``*`` to the degree-``n`` multiset over ``{*}``."""
    tgt = bang_set(n, UNIT)
    point = Multiset._trusted({(): n} if n else {}, UNIT)
    return Rel(UNIT, tgt, image=lambda _: frozenset((point,)))


# -- additive bialgebra structure -------------------------------------------

@lru_cache(maxsize=_CACHE)
def cocontraction(n: int, m: int, x: FinSet) -> Rel:
    """``c̄_{n,m}`` adds the two multisets."""
    src = tensor_objects(bang_set(n, x), bang_set(m, x))
    return Rel(src, bang_set(n + m, x), image=lambda z: frozenset((msum(z[0], z[1]),)))


@lru_cache(maxsize=_CACHE)
def coweakening(x: FinSet) -> Rel:
    """``w̄ = {(*, [])}``."""
    empty = zero_multiset(x)
    return Rel(UNIT, bang_set(0, x), image=lambda _: frozenset((empty,)))


# -- differential structure ----------------------------------------------------

@lru_cache(maxsize=_CACHE)
def deriving(n: int, x: FinSet) -> Rel:
    """``∂_n`` relates ``(f, x)`` to ``f + δ_x``."""
    bx = bang_set(n, x)
    src = tensor_objects(bx, x)
    tgt = bang_set(n + 1, x)

    def image(z):
        f, v = split(z, [bx, x])
        return frozenset((msum(f, Multiset._trusted({v: 1}, x)),))

    return Rel(src, tgt, image=image)


@lru_cache(maxsize=_CACHE)
def codereliction(x: FinSet) -> Rel:
    """``d̄ = {(x, δ_x)}``."""
    return Rel(x, bang_set(1, x), image=lambda v: frozenset((Multiset._trusted({v: 1}, x),)))


# -- symmetric powers -------------------------------------------------------------

def distinct_orderings(f: Multiset):
    """Each distinct sequence whose entries form ``f``, in lexicographic order."""
    items = f.sorted_items()
    keys = [a for a, _ in items]
    counts = [k for _, k in items]
    n = f.degree
    seq: list = []

    def go():
        if len(seq) == n:
            yield tuple(seq)
            return
        for i, a in enumerate(keys):
            if counts[i]:
                counts[i] -= 1
                seq.append(a)
                yield from go()
                seq.pop()
                counts[i] += 1

    return go()


def _flatten(entries, x: FinSet):
    out: list = []
    for e in entries:
        out.extend(parts(e, x))
    return join(out)


@lru_cache(maxsize=_CACHE)
def epsilon(n: int, x: FinSet) -> Rel:
    """``ε_n`` relates ``f`` to every tuple whose entries form ``f``."""
    tgt = tensor_power(x, n)
    return Rel(bang_set(n, x), tgt,
               image=lambda f: frozenset(_flatten(t, x) for t in distinct_orderings(f)))


@lru_cache(maxsize=_CACHE)
def varsigma(n: int, x: FinSet) -> Rel:
    """``ς_n`` relates a tuple to the multiset of its entries."""
    src = tensor_power(x, n)
    tgt = bang_set(n, x)

    def image(z):
        entries = split(z, [x] * n) if n else []
        return frozenset((Multiset(entries, x),))

    return Rel(src, tgt, image=image)


@lru_cache(maxsize=_CACHE)
def rho(n: int, x: FinSet) -> Rel:
    """``ρ(n)``: union of all permutations of the ``n`` factors.

    The ``1/n!`` weight acts as the identity on relations.
    """
    obj = tensor_power(x, n)

    def image(z):
        entries = split(z, [x] * n) if n else []
        return frozenset(_flatten(p, x) for p in itertools.permutations(entries))

    return Rel(obj, obj, image=image)


# -- Seely isomorphisms ---------------------------------------------------------

def seely_summands(r: int, x: FinSet, y: FinSet) -> list:
    return [tensor_objects(bang_set(s, x), bang_set(t, y)) for s, t in splittings(r, NAT)]


@lru_cache(maxsize=_CACHE)
def seely(r: int, x: FinSet, y: FinSet) -> Rel:
    """``χ⊗_r : !_r(X ⊕ Y) -> ⊕_{s+t=r} !_s X ⊗ !_t Y``."""
    xy = biproduct(x, y)
    summands = seely_summands(r, x, y)
    target = biproduct_n(summands)
    terms = []
    for j, (s, t) in enumerate(splittings(r, NAT)):
        terms.append(compose(
            contraction(s, t, xy),
            tensor(bang_rel(s, projection([x, y], 0)), bang_rel(t, projection([x, y], 1))),
            injection(summands, j),
        ))
    return rsum(terms, bang_set(r, xy), target)


@lru_cache(maxsize=_CACHE)
def seely_inv(r: int, x: FinSet, y: FinSet) -> Rel:
    """``(χ⊗_r)⁻¹ = Σ π_{s,t}; (!_s ι₀ ⊗ !_t ι₁); c̄_{s,t}``."""
    xy = biproduct(x, y)
    summands = seely_summands(r, x, y)
    terms = []
    for j, (s, t) in enumerate(splittings(r, NAT)):
        terms.append(compose(
            projection(summands, j),
            tensor(bang_rel(s, injection([x, y], 0)), bang_rel(t, injection([x, y], 1))),
            cocontraction(s, t, xy),
        ))
    return rsum(terms, biproduct_n(summands), bang_set(r, xy))


def seely_unit() -> Rel:
    """``χI = w : !_0 0 -> I``."""
    return weakening(ZERO)


def seely_unit_inv() -> Rel:
    return coweakening(ZERO)


# -- constructions from the theorems -------------------------------------------

def coder_to_deriving(r: int, x: FinSet, coder: Rel | None = None,
                      cbar: Rel | None = None) -> Rel:
    """``∂_r := (1 ⊗ d̄); c̄_{r,1}``."""
    coder = codereliction(x) if coder is None else coder
    cbar = cocontraction(r, 1, x) if cbar is None else cbar
    return compose(tensor(identity(bang_set(r, x)), coder), cbar)


def deriving_to_coder(x: FinSet, deriving0: Rel | None = None,
                      wbar: Rel | None = None) -> Rel:
    """``d̄ := (w̄ ⊗ 1); ∂_0``."""
    deriving0 = deriving(0, x) if deriving0 is None else deriving0
    wbar = coweakening(x) if wbar is None else wbar
    return compose(tensor(wbar, identity(x)), deriving0)


def cbar_from_seely(r: int, s: int, x: FinSet, inverse: Rel | None = None) -> Rel:
    """``c̄_{r,s} := ι_{r,s}; (χ⊗_{r+s})⁻¹; !_{r+s}(∇)``."""
    n = r + s
    summands = seely_summands(n, x, x)
    j = splittings(n, NAT).index((r, s))
    inverse = seely_inv(n, x, x) if inverse is None else inverse
    return compose(injection(summands, j), inverse, bang_rel(n, frel.codiagonal(x)))


def wbar_from_seely(x: FinSet, unit_inverse: Rel | None = None) -> Rel:
    """``w̄ := (χI)⁻¹; !_0(0)``."""
    unit_inverse = seely_unit_inv() if unit_inverse is None else unit_inverse
    return compose(unit_inverse, bang_rel(0, rzero(ZERO, x)))


# -- the same structure obtained from the splitting of ρ(n) --------------------

def split_promotion(n: int, m: int, x: FinSet) -> Rel:
    """``ε_{nm}; ς_m^{⊗n}; ς_n``."""
    inner = bang_set(m, x)
    return compose(epsilon(n * m, x), tensor(*([varsigma(m, x)] * n)), varsigma(n, inner))


def split_contraction(n: int, m: int, x: FinSet) -> Rel:
    """``ε_{n+m}; (ς_n ⊗ ς_m)``."""
    return compose(epsilon(n + m, x), tensor(varsigma(n, x), varsigma(m, x)))


def interleave(n: int, x: FinSet, y: FinSet) -> Rel:
    """``θ : X^{⊗n} ⊗ Y^{⊗n} -> (X ⊗ Y)^{⊗n}``, keeping each side in order."""
    perm = [k for i in range(n) for k in (i, n + i)]
    return frel.permutation([x] * n + [y] * n, perm)


def split_mu(n: int, x: FinSet, y: FinSet) -> Rel:
    """``(ε_n ⊗ ε_n); θ; ς_n``."""
    return compose(tensor(epsilon(n, x), epsilon(n, y)), interleave(n, x, y),
                   varsigma(n, tensor_objects(x, y)))


def split_cocontraction(n: int, m: int, x: FinSet) -> Rel:
    """``C(n+m, n)·(ε_n ⊗ ε_m); ς_{n+m}``."""
    return frel.scale(comb(n + m, n), compose(tensor(epsilon(n, x), epsilon(m, x)),
                                              varsigma(n + m, x)))


def split_deriving(n: int, x: FinSet) -> Rel:
    """``(n+1)·(ε_n ⊗ 1); ς_{n+1}``."""
    return frel.scale(n + 1, compose(tensor(epsilon(n, x), identity(x)), varsigma(n + 1, x)))


# -- addressing structure maps by key ----------------------------------------

STRUCTURE_KEYS = {
    "d": (0, 1), "w": (0, 1), "c": (2, 1), "p": (2, 1), "mu": (1, 2), "muI": (1, 0),
    "cbar": (2, 1), "wbar": (0, 1), "coder": (0, 1), "deriv": (1, 1),
    "eps": (1, 1), "sig": (1, 1), "rho": (1, 1), "seely": (1, 2), "seelyInv": (1, 2),
}


def parse_key(key: str) -> tuple:
    """``"c:1,2"`` -> ``("c", (1, 2))``."""
    family, _, rest = key.partition(":")
    if family not in STRUCTURE_KEYS:
        raise KeyError(f"unknown structure map {family!r}; known: {', '.join(STRUCTURE_KEYS)}")
    grades = tuple(int(g) for g in rest.split(",")) if rest else ()
    want = STRUCTURE_KEYS[family][0]
    if len(grades) != want:
        raise ValueError(f"{family} takes {want} grade(s), got {len(grades)}")
    if any(g < 0 for g in grades):
        raise ValueError("grades must be natural numbers")
    return family, grades


def structure_map(key: str, *carriers: FinSet) -> Rel:
    """Build the structure map named by ``key`` over the given carriers."""
    family, g = parse_key(key)
    need = STRUCTURE_KEYS[family][1]
    if len(carriers) != need:
        raise ValueError(f"{family} takes {need} carrier(s), got {len(carriers)}")
    c = carriers
    table = {
        "d": lambda: dereliction(c[0]),
        "w": lambda: weakening(c[0]),
        "c": lambda: contraction(g[0], g[1], c[0]),
        "p": lambda: promotion(g[0], g[1], c[0]),
        "mu": lambda: mu_tensor(g[0], c[0], c[1]),
        "muI": lambda: mu_unit(g[0]),
        "cbar": lambda: cocontraction(g[0], g[1], c[0]),
        "wbar": lambda: coweakening(c[0]),
        "coder": lambda: codereliction(c[0]),
        "deriv": lambda: deriving(g[0], c[0]),
        "eps": lambda: epsilon(g[0], c[0]),
        "sig": lambda: varsigma(g[0], c[0]),
        "rho": lambda: rho(g[0], c[0]),
        "seely": lambda: seely(g[0], c[0], c[1]),
        "seelyInv": lambda: seely_inv(g[0], c[0], c[1]),
    }
    return table[family]()
