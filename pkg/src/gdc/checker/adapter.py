"""The interface a model exposes to the checker, and the relational model."""
from __future__ import annotations

from functools import lru_cache

from .. import frel, frel_model as fm
from .._render import render, sort_key
from ..semiring import NAT, splittings
from . import terms as T

FAMILIES = (
    "d", "w", "c", "p", "mu", "muI", "cbar", "wbar", "deriv", "coder",
    "eps", "sig", "rho", "seely", "seelyInv", "seelyI", "seelyIInv",
)

SLOT_NAMES = {"X": "abc", "Y": "xyz", "Z": "uvw"}


def seely_terms(r: int, x: T.ObjTerm, y: T.ObjTerm) -> tuple:
    """The Seely isomorphism and its inverse as composition trees."""
    xy = T.plus(x, y)
    summands = tuple(T.ten(T.Bang(s, x), T.Bang(t, y)) for s, t in splittings(r, NAT))
    fwd, bwd = [], []
    for j, (s, t) in enumerate(splittings(r, NAT)):
        label = f"{s},{t}"
        fwd.append(
            T.Struct("c", (s, t), (xy,))
            >> (T.BangM(s, T.Proj((x, y), 0)) @ T.BangM(t, T.Proj((x, y), 1)))
            >> T.Inj(summands, j, label)
        )
        bwd.append(
            T.Proj(summands, j, label)
            >> (T.BangM(s, T.Inj((x, y), 0)) @ T.BangM(t, T.Inj((x, y), 1)))
            >> T.Struct("cbar", (s, t), (xy,))
        )
    target = T.plus(*summands)
    return T.total(fwd, T.Bang(r, xy), target), T.total(bwd, target, T.Bang(r, xy))


class ModelAdapter:
    """Hom-values and structure maps of one model.

    ``compose`` is diagrammatic in the adapter's own category.  A ``dual``
    adapter holds a codifferential structure; the interpreter then reads
    every checker arrow ``X -> Y`` as an adapter arrow ``Y -> X``.
    """

    key = "abstract"
    dual = False
    families = frozenset(FAMILIES)

    # objects
    def carrier(self, size: int, slot: str): raise NotImplementedError
    def unit(self): raise NotImplementedError
    def bang(self, r, x): raise NotImplementedError
    def tensor_obj(self, *xs): raise NotImplementedError
    def biproduct(self, xs): raise NotImplementedError

    # hom-values
    def identity(self, x): raise NotImplementedError
    def compose(self, f, g): raise NotImplementedError
    def tensor(self, *fs): raise NotImplementedError
    def add(self, f, g): raise NotImplementedError
    def zero(self, x, y): raise NotImplementedError
    def scale(self, q, f): raise NotImplementedError
    def symmetry(self, x, y): raise NotImplementedError
    def permutation(self, objs, perm): raise NotImplementedError
    def bang_map(self, r, f): raise NotImplementedError
    def injection(self, objs, j): raise NotImplementedError
    def projection(self, objs, j): raise NotImplementedError
    def codiagonal(self, x): raise NotImplementedError
    def diagonal(self, x): raise NotImplementedError
    def equal(self, f, g) -> bool: raise NotImplementedError
    def difference(self, f, g) -> dict: raise NotImplementedError
    def serialize(self, f): raise NotImplementedError
    def morphisms(self, x, y) -> list: raise NotImplementedError
    def boundary(self, f) -> tuple: raise NotImplementedError

    def primitive(self, family, grades, objs):
        raise NotImplementedError

    def struct(self, family: str, grades: tuple, objs: tuple):
        if family in ("seely", "seelyInv", "seelyI", "seelyIInv"):
            return self._seely(family, grades, objs)
        return self.primitive(family, grades, objs)

    def _seely(self, family, grades, objs):
        # the Seely maps are derived from (co)contraction, (co)weakening and !
        if family in ("seelyI", "seelyIInv"):
            fam = "w" if family == "seelyI" else "wbar"
            return self.struct(fam, (), (self.biproduct([]),))
        (r,) = grades
        carriers = {"A": objs[0], "B": objs[1]}
        fwd, bwd = seely_terms(r, T.V("A"), T.V("B"))
        return T.evaluate(fwd if family == "seely" else bwd, self, carriers)


class FrelAdapter(ModelAdapter):
    """Finite sets and relations with the multiset exponential."""

    key = "frel"

    def carrier(self, size, slot="X"):
        return frel.atoms(size, SLOT_NAMES.get(slot, "abcdefghij"))

    def unit(self):
        return frel.UNIT

    def bang(self, r, x):
        return frel.bang_set(r, x)

    def tensor_obj(self, *xs):
        return frel.tensor_objects(*xs)

    def biproduct(self, xs):
        return frel.biproduct_n(list(xs))

    def identity(self, x):
        return frel.identity(x)

    def compose(self, f, g):
        return frel.compose(f, g)

    def tensor(self, *fs):
        return frel.tensor(*fs)

    def add(self, f, g):
        return frel.radd(f, g)

    def zero(self, x, y):
        return frel.rzero(x, y)

    def scale(self, q, f):
        return frel.scale(q, f)

    def symmetry(self, x, y):
        return frel.symmetry(x, y)

    def permutation(self, objs, perm):
        return frel.permutation(objs, perm)

    def bang_map(self, r, f):
        return fm.bang_rel(r, f)

    def injection(self, objs, j):
        return frel.injection(objs, j)

    def projection(self, objs, j):
        return frel.projection(objs, j)

    def codiagonal(self, x):
        return frel.codiagonal(x)

    def diagonal(self, x):
        return frel.diagonal(x)

    def equal(self, f, g):
        return frel.rel_equal(f, g)

    def difference(self, f, g):
        hit = frel.first_difference(f, g)
        if hit is None:
            return {}
        x, a, b = hit
        show = lambda ys: [render(y) for y in sorted(ys, key=sort_key)]
        return {"at": render(x), "lhs": show(a), "rhs": show(b)}

    def serialize(self, f):
        return [[render(x), render(y)] for x, y in f.sorted_pairs()]

    def morphisms(self, x, y):
        return _all_relations(x, y)

    def boundary(self, f):
        return f.source, f.target

    def primitive(self, family, grades, objs):
        g, o = grades, objs
        if family == "d":
            return fm.dereliction(o[0])
        if family == "w":
            return fm.weakening(o[0])
        if family == "c":
            return fm.contraction(g[0], g[1], o[0])
        if family == "p":
            return fm.promotion(g[0], g[1], o[0])
        if family == "mu":
            return fm.mu_tensor(g[0], o[0], o[1])
        if family == "muI":
            return fm.mu_unit(g[0])
        if family == "cbar":
            return fm.cocontraction(g[0], g[1], o[0])
        if family == "wbar":
            return fm.coweakening(o[0])
        if family == "deriv":
            return fm.deriving(g[0], o[0])
        if family == "coder":
            return fm.codereliction(o[0])
        if family == "eps":
            return fm.epsilon(g[0], o[0])
        if family == "sig":
            return fm.varsigma(g[0], o[0])
        if family == "rho":
            return fm.rho(g[0], o[0])
        raise KeyError(family)


@lru_cache(maxsize=256)
def _all_relations(x, y):
    return frel.all_relations(x, y)


class Mutated:
    """Wraps an adapter and replaces one structure-map family by zero."""

    def __init__(self, inner: ModelAdapter, family: str):
        self.inner = inner
        self.family = family
        self.key = f"{inner.key}~{family}"
        self.dual = inner.dual

    def __getattr__(self, name):
        return getattr(self.inner, name)

    def struct(self, family, grades, objs):
        if family == self.family:
            real = self.inner.struct(family, grades, objs)
            return self.inner.zero(*self.inner.boundary(real))
        if family in ("seely", "seelyInv", "seelyI", "seelyIInv"):
            return ModelAdapter._seely(self, family, grades, objs)
        return self.inner.struct(family, grades, objs)


def get_adapter(key: str) -> ModelAdapter:
    if key == "frel":
        return FrelAdapter()
    if key in ("sympoly", "sympoly-primal"):
        from .. import sympoly
        return sympoly.adapter() if key == "sympoly" else sympoly.primal_adapter()
    if "~" in key:
        base, family = key.split("~", 1)
        return Mutated(get_adapter(base), family)
    raise KeyError(f"unknown model {key!r}; known: frel, sympoly, sympoly-primal")
