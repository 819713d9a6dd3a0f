"""Finite sets and relations.

Objects are :class:`FinSet` values described structurally (explicit atoms,
the unit, tensor products, bang objects, binary biproducts, the zero
object).  The monoidal structure is strict: tensor factors are flattened,
the unit is absorbed, and an element of a k-fold tensor is a flat k-tuple
of factor elements.  Atoms are therefore not allowed to be tuples.

Relations are stored as a source, a target and a memoised image function,
so a composite only ever visits the elements reachable from the sources it
is asked about.  ``Rel.pairs`` materialises the whole graph when needed.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from ._render import render, sort_key
from .multiset import Multiset, enumerate_multisets, multichoose

EMPTY: frozenset = frozenset()


class BoundaryError(ValueError):
    """Two relations were combined along mismatched objects."""


class Tagged:
    """An element of a binary biproduct: ``tag`` is 0 (left) or 1 (right)."""

    __slots__ = ("tag", "value", "_hash")

    def __init__(self, tag: int, value):
        self.tag = tag
        self.value = value
        self._hash = hash(("Tagged", tag, value))

    def __eq__(self, other):
        if not isinstance(other, Tagged):
            return NotImplemented
        return self.tag == other.tag and self.value == other.value

    def __hash__(self):
        return self._hash

    def render(self) -> str:
        return f"{self.tag}:{render(self.value)}"

    def sort_key(self):
        return (4, self.tag, sort_key(self.value))

    def __repr__(self):
        return f"Tagged({self.tag}, {self.value!r})"


class FinSet:
    """A finite set with a fixed element order.

    ``FinSet(["a", "b"])`` builds a set of atoms; the other kinds come from
    :func:`tensor`, :func:`bang_set`, :func:`biproduct` and the constants
    :data:`UNIT` and :data:`ZERO`.
    """

    __slots__ = ("kind", "args", "_key", "_hash", "_elements", "_index", "_atoms")

    def __init__(self, elements: Iterable):
        elements = tuple(elements)
        if len(set(elements)) != len(elements):
            raise ValueError("FinSet elements must be distinct")
        for x in elements:
            if isinstance(x, tuple):
                raise ValueError("atoms may not be tuples (reserved for tensor elements)")
        self._setup("atoms", elements, ("atoms", frozenset(elements)))
        self._elements = elements
        self._atoms = frozenset(elements)

    def _setup(self, kind, args, key):
        self.kind = kind
        self.args = args
        self._key = key
        self._hash = hash(key)
        self._elements = None
        self._index = None
        self._atoms = None

    @classmethod
    def _make(cls, kind: str, args: tuple) -> "FinSet":
        self = object.__new__(cls)
        if kind == "unit":
            key = ("unit",)
        elif kind == "zero":
            key = ("zero",)
        elif kind == "tensor":
            key = ("tensor", tuple(f._key for f in args))
        elif kind == "bang":
            key = ("bang", args[0], args[1]._key)
        elif kind == "sum":
            key = ("sum", args[0]._key, args[1]._key)
        else:
            raise ValueError(kind)
        self._setup(kind, args, key)
        return self

    # -- structure -----------------------------------------------------
    @property
    def arity(self) -> int:
        """Number of flat tensor factors (0 for the unit)."""
        if self.kind == "unit":
            return 0
        if self.kind == "tensor":
            return len(self.args)
        return 1

    @property
    def factors(self) -> tuple:
        if self.kind == "unit":
            return ()
        if self.kind == "tensor":
            return self.args
        return (self,)

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, FinSet):
            return NotImplemented
        return self._hash == other._hash and self._key == other._key

    def __hash__(self):
        return self._hash

    # -- elements ------------------------------------------------------
    @property
    def elements(self) -> tuple:
        if self._elements is None:
            self._elements = tuple(self._enumerate())
        return self._elements

    def _enumerate(self):
        kind = self.kind
        if kind == "unit":
            return [()]
        if kind == "zero":
            return []
        if kind == "tensor":
            return itertools.product(*(f.elements for f in self.args))
        if kind == "bang":
            n, base = self.args
            return enumerate_multisets(base, n)
        if kind == "sum":
            left, right = self.args
            return [Tagged(0, x) for x in left.elements] + [Tagged(1, y) for y in right.elements]
        raise AssertionError(kind)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        kind = self.kind
        if kind == "atoms":
            return len(self.args)
        if kind == "unit":
            return 1
        if kind == "zero":
            return 0
        if kind == "tensor":
            size = 1
            for f in self.args:
                size *= len(f)
            return size
        if kind == "bang":
            return multichoose(len(self.args[1]), self.args[0])
        return len(self.args[0]) + len(self.args[1])

    def __contains__(self, x) -> bool:
        kind = self.kind
        if kind == "atoms":
            try:
                return x in self._atoms
            except TypeError:
                return False
        if kind == "unit":
            return x == ()
        if kind == "zero":
            return False
        if kind == "tensor":
            return (
                isinstance(x, tuple)
                and len(x) == len(self.args)
                and all(part in f for part, f in zip(x, self.args))
            )
        if kind == "bang":
            n, base = self.args
            return (
                isinstance(x, Multiset)
                and x.degree == n
                and all(y in base for y in x.support)
            )
        if kind == "sum":
            return isinstance(x, Tagged) and x.tag in (0, 1) and x.value in self.args[x.tag]
        raise AssertionError(kind)

    def index(self, x) -> int:
        if self._index is None:
            self._index = {e: i for i, e in enumerate(self.elements)}
        return self._index[x]

    # -- display -------------------------------------------------------
    def describe(self) -> str:
        kind = self.kind
        if kind == "atoms":
            return "{" + ",".join(render(x) for x in self.args) + "}"
        if kind == "unit":
            return "I"
        if kind == "zero":
            return "0"
        if kind == "tensor":
            return " ⊗ ".join(_wrap(f) for f in self.args)
        if kind == "bang":
            return f"!_{self.args[0]}{_wrap(self.args[1])}"
        return f"{_wrap(self.args[0])} ⊕ {_wrap(self.args[1])}"

    def __repr__(self) -> str:
        return f"FinSet<{self.describe()}>"


def _wrap(x: FinSet) -> str:
    text = x.describe()
    return f"({text})" if x.kind in ("tensor", "sum") else text


UNIT = FinSet._make("unit", ())
ZERO = FinSet._make("zero", ())


def atoms(n: int, names: Sequence[str] = "abcdefghij") -> FinSet:
    """A carrier of ``n`` named atoms."""
    if n > len(names):
        return FinSet([f"{names[0]}{i}" for i in range(n)])
    return FinSet(list(names[:n]))


def tensor_objects(*sets: FinSet) -> FinSet:
    factors: list = []
    for s in sets:
        factors.extend(s.factors)
    if not factors:
        return UNIT
    if len(factors) == 1:
        return factors[0]
    return FinSet._make("tensor", tuple(factors))


def tensor_power(x: FinSet, n: int) -> FinSet:
    return tensor_objects(*([x] * n))


def bang_set(n: int, x: FinSet) -> FinSet:
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"grade must be a natural number, got {n!r}")
    return FinSet._make("bang", (n, x))


def biproduct(x: FinSet, y: FinSet) -> FinSet:
    return FinSet._make("sum", (x, y))


def biproduct_n(summands: Sequence[FinSet]) -> FinSet:
    """Left-associated iterated biproduct; one summand is returned as is."""
    if not summands:
        return ZERO
    acc = summands[0]
    for s in summands[1:]:
        acc = biproduct(acc, s)
    return acc


# -- element level tensor bookkeeping ---------------------------------------

def parts(x, obj: FinSet) -> tuple:
    a = obj.arity
    if a == 1:
        return (x,)
    return x  # arity 0 gives (), arity k a k-tuple


def join(parts_: Sequence):
    if len(parts_) == 1:
        return parts_[0]
    return tuple(parts_)


def pair(x, xs: FinSet, y, ys: FinSet):
    return join(parts(x, xs) + parts(y, ys))


def split(z, objs: Sequence[FinSet]) -> list:
    """Split an element of ``tensor(*objs)`` into per-object elements."""
    if len(objs) == 1:
        return [z]
    flat = z if isinstance(z, tuple) else (z,)
    out = []
    i = 0
    for o in objs:
        a = o.arity
        out.append(join(flat[i:i + a]) if a != 1 else flat[i])
        i += a
    return out


def inject_elem(k: int, j: int, x):
    """Place ``x`` in summand ``j`` of a left-associated k-fold biproduct."""
    if k == 1:
        return x
    if j == 0:
        v = Tagged(0, x)
        for _ in range(k - 2):
            v = Tagged(0, v)
        return v
    v = Tagged(1, x)
    for _ in range(k - 1 - j):
        v = Tagged(0, v)
    return v


def summand_of(k: int, z):
    """Inverse of :func:`inject_elem`: returns ``(j, x)``."""
    if k == 1:
        return 0, z
    depth = 0
    v = z
    # peel the outer Tagged(0, .) wrappers added by later summands
    while True:
        level = k - 1 - depth  # the biproduct currently peeled has summands 0..level
        if v.tag == 1:
            return level, v.value
        if level == 1:
            return 0, v.value
        v = v.value
        depth += 1


# -- relations -----------------------------------------------------------------

class Rel:
    """A relation ``source -> target``."""

    __slots__ = ("source", "target", "_fn", "_cache")

    def __init__(self, source: FinSet, target: FinSet, pairs: Iterable | None = None,
                 *, image: Callable | None = None, check: bool = True):
        self.source = source
        self.target = target
        self._cache: dict = {}
        if image is not None:
            self._fn = image
            return
        succ: dict = {}
        for x, y in pairs or ():
            if check:
                if x not in source:
                    raise ValueError(f"{render(x)} is not in the source {source.describe()}")
                if y not in target:
                    raise ValueError(f"{render(y)} is not in the target {target.describe()}")
            succ.setdefault(x, set()).add(y)
        frozen = {x: frozenset(ys) for x, ys in succ.items()}
        self._fn = lambda x: frozen.get(x, EMPTY)

    def image(self, x) -> frozenset:
        try:
            return self._cache[x]
        except KeyError:
            ys = self._fn(x)
            if not isinstance(ys, frozenset):
                ys = frozenset(ys)
            self._cache[x] = ys
            return ys

    @property
    def pairs(self) -> frozenset:
        return frozenset((x, y) for x in self.source for y in self.image(x))

    def sorted_pairs(self) -> list:
        key = lambda p: (sort_key(p[0]), sort_key(p[1]))
        return sorted(self.pairs, key=key)

    def __len__(self) -> int:
        return sum(len(self.image(x)) for x in self.source)

    def __eq__(self, other):
        if not isinstance(other, Rel):
            return NotImplemented
        if self.source != other.source or self.target != other.target:
            return False
        return first_difference(self, other) is None

    __hash__ = None

    def __rshift__(self, other: "Rel") -> "Rel":
        return compose(self, other)

    def __matmul__(self, other: "Rel") -> "Rel":
        return tensor(self, other)

    def __add__(self, other: "Rel") -> "Rel":
        return radd(self, other)

    def render(self) -> str:
        body = ", ".join(f"({render(x)}, {render(y)})" for x, y in self.sorted_pairs())
        return "{" + body + "}"

    def __repr__(self) -> str:
        return f"Rel<{self.source.describe()} -> {self.target.describe()}: {len(self)} pairs>"


class _Identity(Rel):
    __slots__ = ()

    def __init__(self, obj: FinSet):
        super().__init__(obj, obj, image=lambda x: frozenset((x,)))


def identity(obj: FinSet) -> Rel:
    return _Identity(obj)


def graph(source: FinSet, target: FinSet, fn: Callable) -> Rel:
    """The relation ``{(x, fn(x))}`` of a function."""
    return Rel(source, target, image=lambda x: frozenset((fn(x),)))


def _boundary(a: FinSet, b: FinSet, what: str) -> None:
    if a != b:
        raise BoundaryError(f"{what}: {a.describe()} vs {b.describe()}")


def compose(*rels: Rel) -> Rel:
    """Diagrammatic composite ``S ; T``: first ``S`` then ``T``."""
    if not rels:
        raise ValueError("compose needs at least one relation")
    acc = rels[0]
    for nxt in rels[1:]:
        acc = _compose2(acc, nxt)
    return acc


def _compose2(s: Rel, t: Rel) -> Rel:
    _boundary(s.target, t.source, "composition")
    if isinstance(s, _Identity):
        return t
    if isinstance(t, _Identity):
        return s

    def image(x):
        ys = s.image(x)
        if not ys:
            return EMPTY
        if len(ys) == 1:
            for y in ys:
                return t.image(y)
        out = set()
        for y in ys:
            out |= t.image(y)
        return out

    return Rel(s.source, t.target, image=image)


def tensor(*rels: Rel) -> Rel:
    """Tensor product of relations (cartesian product of the graphs)."""
    if not rels:
        return identity(UNIT)
    acc = rels[0]
    for nxt in rels[1:]:
        acc = _tensor2(acc, nxt)
    return acc


def _tensor2(s: Rel, t: Rel) -> Rel:
    src = tensor_objects(s.source, t.source)
    tgt = tensor_objects(s.target, t.target)
    if isinstance(s, _Identity) and isinstance(t, _Identity):
        return identity(src)
    objs = [s.source, t.source]
    sx, sy = s.target, t.target

    def image(z):
        x, y = split(z, objs)
        xs = s.image(x)
        if not xs:
            return EMPTY
        ys = t.image(y)
        if not ys:
            return EMPTY
        return frozenset(pair(u, sx, v, sy) for u in xs for v in ys)

    return Rel(src, tgt, image=image)


def symmetry(x: FinSet, y: FinSet) -> Rel:
    """The swap ``x ⊗ y -> y ⊗ x``."""
    src = tensor_objects(x, y)
    tgt = tensor_objects(y, x)

    def fn(z):
        u, v = split(z, [x, y])
        return pair(v, y, u, x)

    return graph(src, tgt, fn)


def permutation(objs: Sequence[FinSet], perm: Sequence[int]) -> Rel:
    """Reorder tensor factors: output position ``i`` holds input factor ``perm[i]``."""
    objs = list(objs)
    src = tensor_objects(*objs)
    tgt = tensor_objects(*(objs[i] for i in perm))

    def fn(z):
        pieces = split(z, objs)
        out = []
        for i in perm:
            out.extend(parts(pieces[i], objs[i]))
        return join(out)

    return graph(src, tgt, fn)


def radd(s: Rel, t: Rel) -> Rel:
    """Sum of relations: union."""
    _boundary(s.source, t.source, "sum (source)")
    _boundary(s.target, t.target, "sum (target)")
    return Rel(s.source, s.target, image=lambda x: s.image(x) | t.image(x))


def rsum(rels: Sequence[Rel], source: FinSet, target: FinSet) -> Rel:
    acc = rzero(source, target)
    for r in rels:
        acc = radd(acc, r)
    return acc


def rzero(x: FinSet, y: FinSet) -> Rel:
    return Rel(x, y, image=lambda _: EMPTY)


def scale(q, s: Rel) -> Rel:
    """Action of a non-negative rational: nonzero scalars act as the identity."""
    q = Fraction(q)
    if q < 0:
        raise ValueError("only non-negative scalars act on relations")
    if q == 0:
        return rzero(s.source, s.target)
    return s


def converse(s: Rel) -> Rel:
    return Rel(s.target, s.source, [(y, x) for x, y in s.pairs], check=False)


def injection(summands: Sequence[FinSet], j: int) -> Rel:
    k = len(summands)
    if not 0 <= j < k:
        raise IndexError(f"no summand {j} in a {k}-fold biproduct")
    return graph(summands[j], biproduct_n(summands), lambda x: inject_elem(k, j, x))


def projection(summands: Sequence[FinSet], j: int) -> Rel:
    k = len(summands)
    if not 0 <= j < k:
        raise IndexError(f"no summand {j} in a {k}-fold biproduct")

    def image(z):
        i, x = summand_of(k, z)
        return frozenset((x,)) if i == j else EMPTY

    return Rel(biproduct_n(summands), summands[j], image=image)


def codiagonal(x: FinSet) -> Rel:
    return graph(biproduct(x, x), x, lambda z: z.value)


def diagonal(x: FinSet) -> Rel:
    tgt = biproduct(x, x)
    return Rel(x, tgt, image=lambda v: frozenset((Tagged(0, v), Tagged(1, v))))


def first_difference(s: Rel, t: Rel):
    """The first source element (in carrier order) where the images differ."""
    for x in s.source:
        a, b = s.image(x), t.image(x)
        if a != b:
            return x, a, b
    return None


def rel_equal(s: Rel, t: Rel) -> bool:
    _boundary(s.source, t.source, "equality (source)")
    _boundary(s.target, t.target, "equality (target)")
    return first_difference(s, t) is None


def all_relations(x: FinSet, y: FinSet) -> list:
    """Every relation ``x -> y``; 2^(|x||y|) of them."""
    cells = list(itertools.product(x.elements, y.elements))
    out = []
    for mask in range(1 << len(cells)):
        chosen = [cells[i] for i in range(len(cells)) if mask >> i & 1]
        out.append(Rel(x, y, chosen, check=False))
    return out


def is_bijection(s: Rel) -> bool:
    """Whether ``s`` is the graph of a bijection ``source -> target``."""
    hit = set()
    for x in s.source:
        ys = s.image(x)
        if len(ys) != 1:
            return False
        (y,) = ys
        if y in hit:
            return False
        hit.add(y)
    return len(hit) == len(s.target)
