"""Finite multisets: the inhabitants of ``!_n X`` in the relational model."""
from __future__ import annotations

import itertools
from math import comb
from typing import Iterable, Iterator, Mapping

from ._render import render, sort_key


class CarrierError(ValueError):
    """An element or multiset does not live over the expected carrier."""


class Multiset:
    """A finitely supported map ``element -> positive multiplicity``.

    Equality and hashing are extensional on the counts.  ``carrier`` is
    kept for validation and rendering only and does not take part in
    equality.
    """

    __slots__ = ("_counts", "_key", "_hash", "degree", "carrier")

    def __init__(self, counts: Mapping | Iterable = (), carrier=None):
        if isinstance(counts, Mapping):
            items = counts.items()
        else:
            acc: dict = {}
            for x in counts:
                acc[x] = acc.get(x, 0) + 1
            items = acc.items()
        clean = {}
        for x, k in items:
            if not isinstance(k, int) or k < 0:
                raise ValueError(f"multiplicity of {x!r} must be a natural number, got {k!r}")
            if k:
                clean[x] = k
        self._counts = clean
        self._key = frozenset(clean.items())
        self._hash = hash(self._key)
        self.degree = sum(clean.values())
        self.carrier = carrier

    @classmethod
    def _trusted(cls, counts: dict, carrier=None) -> "Multiset":
        # counts already normalised (no zero entries)
        self = object.__new__(cls)
        self._counts = counts
        self._key = frozenset(counts.items())
        self._hash = hash(self._key)
        self.degree = sum(counts.values())
        self.carrier = carrier
        return self

    def __eq__(self, other):
        if not isinstance(other, Multiset):
            return NotImplemented
        return self._hash == other._hash and self._key == other._key

    def __hash__(self):
        return self._hash

    def __getitem__(self, x) -> int:
        return self._counts.get(x, 0)

    def __contains__(self, x) -> bool:
        return x in self._counts

    def __len__(self) -> int:
        return self.degree

    def items(self):
        return self._counts.items()

    @property
    def support(self) -> frozenset:
        return frozenset(self._counts)

    def sorted_items(self) -> list:
        return sorted(self._counts.items(), key=lambda kv: sort_key(kv[0]))

    def elements(self) -> list:
        """The entries with repetition, in sorted order."""
        return [x for x, k in self.sorted_items() for _ in range(k)]

    def __add__(self, other: "Multiset") -> "Multiset":
        return msum(self, other)

    def __sub__(self, other: "Multiset") -> "Multiset":
        counts = dict(self._counts)
        for x, k in other.items():
            left = counts.get(x, 0) - k
            if left < 0:
                raise ValueError("multiset difference would go negative")
            if left:
                counts[x] = left
            else:
                counts.pop(x, None)
        return Multiset._trusted(counts, self.carrier)

    def scaled(self, k: int) -> "Multiset":
        if k == 0:
            return Multiset._trusted({}, self.carrier)
        return Multiset._trusted({x: m * k for x, m in self._counts.items()}, self.carrier)

    def le(self, other: "Multiset") -> bool:
        return all(other[x] >= k for x, k in self._counts.items())

    def render(self) -> str:
        return "[" + ",".join(render(x) for x in self.elements()) + "]"

    def sort_key(self):
        return (3, self.degree, tuple(sort_key(x) for x in self.elements()))

    def __repr__(self) -> str:
        return f"Multiset({self.render()})"

    __str__ = render


def _check_member(x, carrier) -> None:
    if carrier is not None and x not in carrier:
        raise CarrierError(f"{render(x)} is not in the carrier")


def delta(x, carrier=None) -> Multiset:
    """The singleton multiset on ``x``."""
    _check_member(x, carrier)
    return Multiset._trusted({x: 1}, carrier)


def zero_multiset(carrier=None) -> Multiset:
    return Multiset._trusted({}, carrier)


def msum(f: Multiset, g: Multiset) -> Multiset:
    """Pointwise sum."""
    if f.carrier is not None and g.carrier is not None and f.carrier != g.carrier:
        raise CarrierError("cannot add multisets over different carriers")
    if not g._counts:
        return f
    if not f._counts:
        return g
    counts = dict(f._counts)
    for x, k in g._counts.items():
        counts[x] = counts.get(x, 0) + k
    return Multiset._trusted(counts, f.carrier if f.carrier is not None else g.carrier)


def multichoose(k: int, n: int) -> int:
    """Number of degree-``n`` multisets over ``k`` elements."""
    if k == 0:
        return 1 if n == 0 else 0
    return comb(n + k - 1, n)


def enumerate_multisets(carrier, n: int) -> list:
    """All multisets of degree ``n`` over ``carrier``, each once.

    Order is lexicographic on the sorted entry sequences, e.g. over
    ``a < b``: ``[a,a], [a,b], [b,b]``.
    """
    elements = list(carrier)
    out = []
    for combo in itertools.combinations_with_replacement(range(len(elements)), n):
        counts: dict = {}
        for i in combo:
            x = elements[i]
            counts[x] = counts.get(x, 0) + 1
        out.append(Multiset._trusted(counts, carrier))
    return out


def submultisets(f: Multiset, n: int) -> Iterator[Multiset]:
    """All ``g <= f`` of degree ``n``."""
    items = f.sorted_items()
    carrier = f.carrier

    def go(i: int, left: int, acc: dict):
        if left == 0:
            yield Multiset._trusted(dict(acc), carrier)
            return
        if i == len(items):
            return
        x, k = items[i]
        rest = sum(m for _, m in items[i + 1:])
        for take in range(min(k, left), -1, -1):
            if left - take > rest:
                break
            if take:
                acc[x] = take
            yield from go(i + 1, left - take, acc)
            acc.pop(x, None)

    if n < 0 or n > f.degree:
        return iter(())
    return go(0, n, {})


def multisets_over(elements: list, n: int, carrier=None) -> Iterator[Multiset]:
    """Degree-``n`` multisets whose support lies in ``elements``."""
    for combo in itertools.combinations_with_replacement(range(len(elements)), n):
        counts: dict = {}
        for i in combo:
            x = elements[i]
            counts[x] = counts.get(x, 0) + 1
        yield Multiset._trusted(counts, carrier)
