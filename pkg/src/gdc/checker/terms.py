"""Composition trees for equation sides.

Object terms and morphism terms are plain frozen dataclasses.  They are
interpreted against a model adapter by :func:`evaluate`; when the adapter
declares itself dual (a codifferential model), the interpreter reverses
every composite and swaps the morphism constructors that have opposite
direction, so the same catalog serves both orientations.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any


# -- objects -----------------------------------------------------------------

class ObjTerm:
    def render(self) -> str:  # pragma: no cover - overridden
        raise NotImplementedError


@dataclass(frozen=True)
class V(ObjTerm):
    name: str

    def render(self):
        return self.name


@dataclass(frozen=True)
class Bang(ObjTerm):
    r: int
    of: ObjTerm

    def render(self):
        inner = self.of.render()
        if isinstance(self.of, (Ten, Plus)):
            inner = f"({inner})"
        return f"!{self.r}{inner}"


@dataclass(frozen=True)
class Ten(ObjTerm):
    parts: tuple

    def render(self):
        return "⊗".join(p.render() for p in self.parts) if self.parts else "I"


@dataclass(frozen=True)
class Plus(ObjTerm):
    parts: tuple

    def render(self):
        return "⊕".join(p.render() for p in self.parts) if self.parts else "0"


ONE = Ten(())
NIL = Plus(())


def ten(*parts: ObjTerm) -> ObjTerm:
    return parts[0] if len(parts) == 1 else Ten(tuple(parts))


def plus(*parts: ObjTerm) -> ObjTerm:
    return parts[0] if len(parts) == 1 else Plus(tuple(parts))


def power(a: ObjTerm, n: int) -> ObjTerm:
    return ten(*([a] * n)) if n != 1 else a


# -- morphisms -----------------------------------------------------------------

class MorTerm:
    def __rshift__(self, other: "MorTerm") -> "MorTerm":
        return seq(self, other)

    def __matmul__(self, other: "MorTerm") -> "MorTerm":
        return par(self, other)

    def __add__(self, other: "MorTerm") -> "MorTerm":
        return Sum((self, other))


@dataclass(frozen=True)
class Struct(MorTerm):
    family: str
    grades: tuple
    objs: tuple

    def render(self):
        sub = ",".join(str(g) for g in self.grades)
        name = {"deriv": "∂", "cbar": "c̄", "wbar": "w̄", "coder": "d̄", "mu": "μ⊗",
                "muI": "μI", "eps": "ε", "sig": "ς", "rho": "ρ", "seely": "χ",
                "seelyInv": "χ⁻¹", "seelyI": "χI", "seelyIInv": "χI⁻¹"}.get(self.family, self.family)
        return f"{name}_{sub}" if sub else name


@dataclass(frozen=True)
class Id(MorTerm):
    obj: ObjTerm

    def render(self):
        return "1"


@dataclass(frozen=True)
class Seq(MorTerm):
    parts: tuple

    def render(self):
        return ";".join(_wrap(p, Sum) for p in self.parts)


@dataclass(frozen=True)
class Par(MorTerm):
    parts: tuple

    def render(self):
        return "⊗".join(_wrap(p, (Seq, Sum)) for p in self.parts)


@dataclass(frozen=True)
class Sum(MorTerm):
    parts: tuple

    def render(self):
        return " + ".join(p.render() for p in self.parts)

    def __add__(self, other):
        return Sum(self.parts + (other,))


@dataclass(frozen=True)
class Zero(MorTerm):
    src: ObjTerm
    tgt: ObjTerm

    def render(self):
        return "0"


@dataclass(frozen=True)
class Sym(MorTerm):
    a: ObjTerm
    b: ObjTerm

    def render(self):
        return "σ"


@dataclass(frozen=True)
class Perm(MorTerm):
    objs: tuple
    perm: tuple
    label: str = "θ"

    def render(self):
        return self.label


@dataclass(frozen=True)
class BangM(MorTerm):
    r: int
    of: MorTerm

    def render(self):
        return f"!{self.r}({self.of.render()})"


@dataclass(frozen=True)
class Inj(MorTerm):
    objs: tuple
    j: int
    label: str = ""

    def render(self):
        return f"ι{self.label or self.j}"


@dataclass(frozen=True)
class Proj(MorTerm):
    objs: tuple
    j: int
    label: str = ""

    def render(self):
        return f"π{self.label or self.j}"


@dataclass(frozen=True)
class Codiag(MorTerm):
    obj: ObjTerm

    def render(self):
        return "∇"


@dataclass(frozen=True)
class Scale(MorTerm):
    q: Any
    of: MorTerm

    def render(self):
        return f"{self.q}·{_wrap(self.of, (Seq, Sum, Par))}"


@dataclass(frozen=True)
class Given(MorTerm):
    name: str

    def render(self):
        return self.name


def _wrap(t: MorTerm, kinds) -> str:
    text = t.render()
    return f"({text})" if isinstance(t, kinds) else text


def seq(*parts: MorTerm) -> MorTerm:
    flat: list = []
    for p in parts:
        flat.extend(p.parts if isinstance(p, Seq) else (p,))
    return flat[0] if len(flat) == 1 else Seq(tuple(flat))


def par(*parts: MorTerm) -> MorTerm:
    return parts[0] if len(parts) == 1 else Par(tuple(parts))


def total(parts, src: ObjTerm, tgt: ObjTerm) -> MorTerm:
    """A sum that may be empty (then it is the zero map ``src -> tgt``)."""
    parts = tuple(parts)
    if not parts:
        return Zero(src, tgt)
    return parts[0] if len(parts) == 1 else Sum(parts)


# -- interpretation ------------------------------------------------------------

def evaluate_obj(t: ObjTerm, model, carriers: dict):
    if isinstance(t, V):
        return carriers[t.name]
    if isinstance(t, Bang):
        return model.bang(t.r, evaluate_obj(t.of, model, carriers))
    if isinstance(t, Ten):
        return model.tensor_obj(*(evaluate_obj(p, model, carriers) for p in t.parts))
    if isinstance(t, Plus):
        return model.biproduct([evaluate_obj(p, model, carriers) for p in t.parts])
    raise TypeError(f"not an object term: {t!r}")


def evaluate(t: MorTerm, model, carriers: dict, given: dict | None = None) -> Any:
    """Interpret ``t``; dual models get every arrow reversed."""
    dual = getattr(model, "dual", False)
    ob = lambda o: evaluate_obj(o, model, carriers)
    ev = lambda m: evaluate(m, model, carriers, given)

    if isinstance(t, Struct):
        return model.struct(t.family, t.grades, tuple(ob(o) for o in t.objs))
    if isinstance(t, Id):
        return model.identity(ob(t.obj))
    if isinstance(t, Seq):
        maps = [ev(p) for p in t.parts]
        if dual:
            maps.reverse()
        acc = maps[0]
        for m in maps[1:]:
            acc = model.compose(acc, m)
        return acc
    if isinstance(t, Par):
        return model.tensor(*(ev(p) for p in t.parts))
    if isinstance(t, Sum):
        acc = ev(t.parts[0])
        for p in t.parts[1:]:
            acc = model.add(acc, ev(p))
        return acc
    if isinstance(t, Zero):
        src, tgt = ob(t.src), ob(t.tgt)
        return model.zero(tgt, src) if dual else model.zero(src, tgt)
    if isinstance(t, Sym):
        a, b = ob(t.a), ob(t.b)
        return model.symmetry(b, a) if dual else model.symmetry(a, b)
    if isinstance(t, Perm):
        objs = [ob(o) for o in t.objs]
        if not dual:
            return model.permutation(objs, list(t.perm))
        inverse = [0] * len(t.perm)
        for pos, i in enumerate(t.perm):
            inverse[i] = pos
        return model.permutation([objs[i] for i in t.perm], inverse)
    if isinstance(t, BangM):
        return model.bang_map(t.r, ev(t.of))
    if isinstance(t, Inj):
        objs = [ob(o) for o in t.objs]
        return model.projection(objs, t.j) if dual else model.injection(objs, t.j)
    if isinstance(t, Proj):
        objs = [ob(o) for o in t.objs]
        return model.injection(objs, t.j) if dual else model.projection(objs, t.j)
    if isinstance(t, Codiag):
        x = ob(t.obj)
        return model.diagonal(x) if dual else model.codiagonal(x)
    if isinstance(t, Scale):
        return model.scale(t.q, ev(t.of))
    if isinstance(t, Given):
        return given[t.name]
    raise TypeError(f"not a morphism term: {t!r}")
