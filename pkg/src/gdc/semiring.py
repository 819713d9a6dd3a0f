"""Grading semirings.

A grade indexes the exponential family ``!_r``.  Only semirings whose
addition splits every element into finitely many pairs (the
*finite additive split* property) can index the bimonoid and Seely sums,
so :func:`splittings` refuses anything not declared that way.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Iterable, Optional

Grade = Any


@dataclass(frozen=True)
class GradeSemiring:
    name: str
    add: Callable[[Grade, Grade], Grade]
    mul: Callable[[Grade, Grade], Grade]
    zero: Grade
    one: Grade
    # all elements "of size <= bound", in a fixed order
    elements: Callable[[int], list] = field(repr=False)
    contains: Callable[[Any], bool] = field(repr=False)
    fas: bool = False
    # exact splitting of r; only meaningful when fas is True
    split: Optional[Callable[[Grade], list]] = field(default=None, repr=False)
    inverse: Optional[Callable[[Grade], Grade]] = field(default=None, repr=False)

    def __str__(self) -> str:
        return self.name


class NotFASError(ValueError):
    """Raised when a splitting is requested from a semiring that is not f.a.s."""


def _nat_elements(bound: int) -> list:
    return list(range(bound + 1))


def _is_nat(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool) and x >= 0


NAT = GradeSemiring(
    name="nat",
    add=lambda a, b: a + b,
    mul=lambda a, b: a * b,
    zero=0,
    one=1,
    elements=_nat_elements,
    contains=_is_nat,
    fas=True,
    split=lambda r: [(s, r - s) for s in range(r + 1)],
)


def _nat2_split(r):
    first = NAT.split(r[0])
    second = NAT.split(r[1])
    pairs = [((a, c), (b, d)) for (a, b) in first for (c, d) in second]
    return sorted(pairs)


# componentwise N x N: its unit (1,1) splits as (1,0) + (0,1), so condition
# (ii) fails and it is not declared f.a.s.
def _is_nat_pair(x) -> bool:
    return isinstance(x, tuple) and len(x) == 2 and all(_is_nat(c) for c in x)


NAT2 = GradeSemiring(
    name="nat2",
    add=lambda a, b: (a[0] + b[0], a[1] + b[1]),
    mul=lambda a, b: (a[0] * b[0], a[1] * b[1]),
    zero=(0, 0),
    one=(1, 1),
    elements=lambda bound: list(itertools.product(range(bound + 1), repeat=2)),
    contains=_is_nat_pair,
    fas=False,
    split=_nat2_split,
)

# N x N with the dual-number product (a,b)(c,d) = (ac, ad+bc); unit (1,0)
NAT_DUAL = GradeSemiring(
    name="nat-dual",
    add=NAT2.add,
    mul=lambda a, b: (a[0] * b[0], a[0] * b[1] + a[1] * b[0]),
    zero=(0, 0),
    one=(1, 0),
    elements=NAT2.elements,
    contains=_is_nat_pair,
    fas=True,
    split=_nat2_split,
)


def _rat_elements(bound: int) -> list:
    seen = {Fraction(p, q) for p in range(bound + 1) for q in range(1, bound + 1)}
    return sorted(seen)


RAT_NONNEG = GradeSemiring(
    name="rat-nonneg",
    add=lambda a, b: a + b,
    mul=lambda a, b: a * b,
    zero=Fraction(0),
    one=Fraction(1),
    elements=_rat_elements,
    contains=lambda x: isinstance(x, (int, Fraction)) and x >= 0,
    fas=False,
    inverse=lambda x: 1 / Fraction(x),
)

# the two-element semiring with 1 + 1 = 1; kept for f.a.s. counterexamples
BOOL = GradeSemiring(
    name="bool",
    add=lambda a, b: a or b,
    mul=lambda a, b: a and b,
    zero=False,
    one=True,
    elements=lambda bound: [False, True] if bound >= 1 else [False],
    contains=lambda x: isinstance(x, bool),
    fas=False,
)

SEMIRINGS = {sr.name: sr for sr in (NAT, NAT2, NAT_DUAL, RAT_NONNEG, BOOL)}


def get_semiring(key: str) -> GradeSemiring:
    try:
        return SEMIRINGS[key]
    except KeyError:
        raise KeyError(f"unknown semiring {key!r}; known: {', '.join(SEMIRINGS)}") from None


def splittings(r: Grade, sr: GradeSemiring = NAT) -> list:
    """All pairs ``(s, t)`` with ``s + t == r``, sorted by first component."""
    if not sr.fas or sr.split is None:
        raise NotFASError(f"semiring {sr.name} is not finite additive split")
    if not sr.contains(r):
        raise ValueError(f"{r!r} is not an element of {sr.name}")
    return sr.split(r)


def nat_image(n: int, sr: GradeSemiring = NAT) -> Grade:
    """The canonical image of the natural number ``n`` in ``sr``."""
    if n < 0:
        raise ValueError("nat_image takes a natural number")
    acc = sr.zero
    for _ in range(n):
        acc = sr.add(acc, sr.one)
    return acc


@dataclass(frozen=True)
class FasReport:
    passed: bool
    condition: Optional[str] = None
    counterexample: Any = None
    checked: int = 0

    def __str__(self) -> str:
        if self.passed:
            return f"pass ({self.checked} elements)"
        return f"fail at condition ({self.condition}): {self.counterexample!r}"


def check_fas(sr: GradeSemiring, bound: int) -> FasReport:
    """Bounded search for a violation of the three f.a.s. conditions.

    Condition (i) is approximated by stability: the splittings of each
    element found among elements up to ``bound`` must not grow when the
    search is widened to ``2 * bound``.
    """
    small = sr.elements(bound)
    wide = sr.elements(2 * bound)
    small_set = set(small)

    buckets: dict = {}
    for s, t in itertools.product(wide, repeat=2):
        buckets.setdefault(sr.add(s, t), set()).add((s, t))

    # (i) finiteness, via stability of the splitting sets
    for r in small:
        full = buckets.get(r, set())
        inside = {(s, t) for s, t in full if s in small_set and t in small_set}
        if full != inside:
            extra = sorted(full - inside, key=repr)[0]
            return FasReport(False, "i", {"element": r, "new_splitting": extra}, len(small))

    # (ii) 0 and 1 split only trivially
    zero, one = sr.zero, sr.one
    zero_split = buckets.get(zero, set())
    if zero_split != {(zero, zero)}:
        bad = sorted(zero_split - {(zero, zero)}, key=repr)[0]
        return FasReport(False, "ii", {"element": zero, "splitting": bad}, len(small))
    one_split = buckets.get(one, set())
    expected = {(zero, one), (one, zero)}
    if one_split != expected:
        bad = sorted(one_split ^ expected, key=repr)[0]
        return FasReport(False, "ii", {"element": one, "splitting": bad}, len(small))

    # (iii) cancellativity: r + _ is injective
    for r in small:
        seen: dict = {}
        for s in small:
            key = sr.add(r, s)
            if key in seen and seen[key] != s:
                return FasReport(
                    False, "iii", {"r": r, "s": seen[key], "t": s, "sum": key}, len(small)
                )
            seen[key] = s
    return FasReport(True, checked=len(small))


def grades_upto(bound: int, sr: GradeSemiring = NAT) -> Iterable[Grade]:
    return sr.elements(bound)
