"""Formulas, derivations, typing and relational denotation for graded
differential linear logic sequents.

Contexts are ordered; exchange is an explicit rule.  Rules that act on a
single context formula (dereliction, weakening, contraction, the left
additive rules) act on the last position unless an index is given.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .. import frel, frel_model as fm
from ..frel import Rel
from ..semiring import NAT, GradeSemiring, get_semiring, splittings
from .sexp import ParseError, SList, Sym, read_all, read_one


class GdillError(ValueError):
    """A derivation that does not type-check, or cannot be denoted."""

    def __init__(self, message: str, node=None):
        where = f"{node.line}:{node.col}: {node.rule}: " if node is not None else ""
        super().__init__(where + message)
        self.node = node


# -- formulas -------------------------------------------------------------------

class Formula:
    pass


@dataclass(frozen=True)
class Atom(Formula):
    name: str

    def render(self):
        return self.name


@dataclass(frozen=True)
class Unit(Formula):
    def render(self):
        return "I"


@dataclass(frozen=True)
class Ten(Formula):
    left: Formula
    right: Formula

    def render(self):
        return f"{_paren(self.left, Plus)} ⊗ {_paren(self.right, (Plus, Ten))}"


@dataclass(frozen=True)
class Plus(Formula):
    left: Formula
    right: Formula

    def render(self):
        return f"{_paren(self.left, ())} ⊕ {_paren(self.right, Plus)}"


@dataclass(frozen=True)
class Bang(Formula):
    grade: object
    body: Formula

    def render(self):
        return f"!{_grade_text(self.grade)} {_paren(self.body, (Ten, Plus))}"


def _paren(f: Formula, kinds) -> str:
    text = f.render()
    return f"({text})" if isinstance(f, kinds) else text


@dataclass(frozen=True)
class GradeOp:
    """A grade expression ``a + b`` or ``a * b`` over names and literals."""
    op: str
    left: object
    right: object


def _grade_text(g) -> str:
    if isinstance(g, GradeOp):
        return f"({_grade_text(g.left)}{g.op}{_grade_text(g.right)})"
    if isinstance(g, tuple):
        return "(" + ",".join(str(c) for c in g) + ")"
    return str(g)


def plus_n(parts: list) -> Formula:
    """Left-associated iterated ⊕, as the biproduct convention of frel."""
    acc = parts[0]
    for p in parts[1:]:
        acc = Plus(acc, p)
    return acc


@dataclass(frozen=True)
class Sequent:
    context: tuple
    conclusion: Formula

    def render(self) -> str:
        ctx = ", ".join(f.render() for f in self.context)
        return f"{ctx} ⊢ {self.conclusion.render()}" if ctx else f"⊢ {self.conclusion.render()}"

    __str__ = render


# -- derivations ------------------------------------------------------------------

@dataclass(frozen=True)
class Derivation:
    rule: str
    args: tuple = ()
    premises: tuple = ()
    line: int = 0
    col: int = 0


# argument kinds: g grade, f formula, F formula list, i index, b binder pair,
# d derivation; a trailing "?" marks an optional argument
RULES = {
    "ax": "f",
    "cut": "d d i?",
    "exch": "i d",
    "tensor-l": "i? d",
    "tensor-r": "d d",
    "prom": "g G? d",
    "der": "i? d",
    "weak": "f d",
    "contr": "g g d",
    "cocontr": "g g d d",
    "coweak": "f",
    "diff": "g d d",
    "coder": "d",
    "plus-l": "d d",
    "plus-r1": "f d",
    "plus-r2": "f d",
    "with-r": "d d",
    "with-l1": "f d",
    "with-l2": "f d",
    "sum": "d d",
    "zero": "F f",
    "with-r-split": "g b d",
    "plus-l-split": "g b d",
}

_NAME = re.compile(r"^[a-z][a-z0-9_]*$")
_ATOM = re.compile(r"^[A-Z][A-Za-z0-9_]*$")


def _err(msg: str, node) -> ParseError:
    return ParseError(msg, node.line, node.col)


def parse_grade(node):
    """A numeral, a grade variable, or ``(+ g h)`` / ``(* g h)``."""
    if isinstance(node, Sym):
        t = node.text
        if t.isdigit():
            return int(t)
        if re.fullmatch(r"\d+/\d+", t):
            return Fraction(t)
        if _NAME.match(t):
            return t
        raise _err(f"malformed grade literal {t!r}", node)
    items = node.items
    if len(items) == 3 and isinstance(items[0], Sym) and items[0].text in "+*":
        return GradeOp(items[0].text, parse_grade(items[1]), parse_grade(items[2]))
    raise _err("malformed grade expression", node)


def parse_formula(node) -> Formula:
    if isinstance(node, Sym):
        if node.text == "I":
            return Unit()
        if _ATOM.match(node.text):
            return Atom(node.text)
        raise _err(f"not a formula: {node.text!r}", node)
    if not node.items or not isinstance(node.items[0], Sym):
        raise _err("empty formula", node)
    head, rest = node.items[0].text, node.items[1:]
    if head == "atom" and len(rest) == 1 and isinstance(rest[0], Sym) and _ATOM.match(rest[0].text):
        return Atom(rest[0].text)
    if head in ("ten", "plus") and len(rest) >= 2:
        parts = [parse_formula(x) for x in rest]
        ctor = Ten if head == "ten" else Plus
        acc = parts[0]
        for p in parts[1:]:
            acc = ctor(acc, p)
        return acc
    if head == "bang" and len(rest) == 2:
        return Bang(parse_grade(rest[0]), parse_formula(rest[1]))
    raise _err(f"malformed formula ({head} ...)", node)


def _is_index(node) -> bool:
    return isinstance(node, Sym) and node.text.isdigit()


def parse_derivation(node) -> Derivation:
    if not isinstance(node, SList) or not node.items or not isinstance(node.items[0], Sym):
        raise _err("expected a derivation (rule ...)", node)
    label = node.items[0].text
    if label not in RULES:
        raise _err(f"unknown rule {label!r}", node.items[0])
    raw = list(node.items[1:])
    kinds = RULES[label].split()
    required = [k for k in kinds if not k.endswith("?")]
    # optional arguments are present exactly when the count allows them
    present = set(kinds) if len(raw) == len(kinds) else set(required)
    if len(raw) not in (len(kinds), len(required)):
        raise _err(f"{label} expects {len(required)} argument(s)"
                   + (f" (or {len(kinds)})" if len(kinds) != len(required) else "")
                   + f", got {len(raw)}", node)
    args, prem = [], []
    it = iter(raw)
    for kind in kinds:
        if kind not in present:
            args.append(None)
            continue
        x = next(it)
        k = kind.rstrip("?")
        if k == "d":
            prem.append(parse_derivation(x))
        elif k == "g":
            args.append(parse_grade(x))
        elif k == "G":
            if not isinstance(x, SList):
                raise _err("expected a list of grades", x)
            args.append(tuple(parse_grade(g) for g in x.items))
        elif k == "f":
            args.append(parse_formula(x))
        elif k == "F":
            if not isinstance(x, SList):
                raise _err("expected a list of formulas", x)
            args.append(tuple(parse_formula(f) for f in x.items))
        elif k == "i":
            if not _is_index(x):
                raise _err("expected a context index", x)
            args.append(int(x.text))
        elif k == "b":
            ok = (isinstance(x, SList) and len(x.items) == 2
                  and all(isinstance(v, Sym) and _NAME.match(v.text) for v in x.items))
            if not ok:
                raise _err("expected a binder pair like (s t)", x)
            args.append((x.items[0].text, x.items[1].text))
    return Derivation(label, tuple(args), tuple(prem), node.line, node.col)


def parse(text: str) -> Derivation:
    """Read one derivation."""
    return parse_derivation(read_one(text))


@dataclass
class Proof:
    name: str
    params: tuple
    derivation: Derivation


@dataclass
class ProofFile:
    semiring: GradeSemiring = NAT
    proofs: dict = field(default_factory=dict)

    def __getitem__(self, name: str) -> Proof:
        return self.proofs[name]


def parse_file(text: str) -> ProofFile:
    """Read a proof file: ``#semiring`` header, then ``(proof name [(params)] derivation)``."""
    sr = NAT
    body = []
    for n, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if stripped.startswith("#"):
            words = stripped[1:].split()
            if len(words) == 2 and words[0] == "semiring":
                try:
                    sr = get_semiring(words[1])
                except KeyError as exc:
                    raise ParseError(str(exc.args[0]), n, 1) from None
            else:
                raise ParseError(f"unknown directive {stripped!r}", n, 1)
            body.append("")
        else:
            body.append(line)
    out = ProofFile(sr)
    for form in read_all("\n".join(body)):
        items = form.items if isinstance(form, SList) else ()
        if len(items) not in (3, 4) or not isinstance(items[0], Sym) or items[0].text != "proof" \
                or not isinstance(items[1], Sym):
            raise _err("expected (proof name [(params)] derivation)", form)
        name = items[1].text
        params: tuple = ()
        if len(items) == 4:
            plist = items[2]
            if not isinstance(plist, SList) or not all(
                    isinstance(p, Sym) and _NAME.match(p.text) for p in plist.items):
                raise _err("expected a parameter list of grade names", plist)
            params = tuple(p.text for p in plist.items)
        if name in out.proofs:
            raise _err(f"duplicate proof {name!r}", form)
        out.proofs[name] = Proof(name, params, parse_derivation(items[-1]))
    return out


# -- typing --------------------------------------------------------------------------

class _Grades:
    def __init__(self, sr: GradeSemiring, env: dict):
        self.sr = sr
        self.env = env

    def value(self, g, node):
        if isinstance(g, GradeOp):
            x, y = self.value(g.left, node), self.value(g.right, node)
            return self.sr.add(x, y) if g.op == "+" else self.sr.mul(x, y)
        if isinstance(g, str):
            if g not in self.env:
                raise GdillError(f"unbound grade {g!r}", node)
            return self.env[g]
        if not self.sr.contains(g):
            raise GdillError(f"{g!r} is not a grade of {self.sr.name}", node)
        return g

    def formula(self, f: Formula, node) -> Formula:
        if isinstance(f, Bang):
            return Bang(self.value(f.grade, node), self.formula(f.body, node))
        if isinstance(f, (Ten, Plus)):
            return type(f)(self.formula(f.left, node), self.formula(f.right, node))
        return f

    def bind(self, names, values) -> "_Grades":
        env = dict(self.env)
        env.update(zip(names, values))
        return _Grades(self.sr, env)


def _last(ctx: tuple, i, node) -> int:
    if not ctx:
        raise GdillError("the premise context is empty", node)
    k = len(ctx) - 1 if i is None else i
    if not 0 <= k < len(ctx):
        raise GdillError(f"no context position {k}", node)
    return k


def _need(cond: bool, msg: str, node) -> None:
    if not cond:
        raise GdillError(msg, node)


def _typed(d: Derivation, G: _Grades) -> Sequent:
    r, a = d.rule, d.args
    prem = lambda j, g=G: _typed(d.premises[j], g)
    show = lambda f: f.render()

    if r == "ax":
        f = G.formula(a[0], d)
        return Sequent((f,), f)
    if r == "cut":
        s1, s2 = prem(0), prem(1)
        k = a[0]
        if k is None:
            hits = [i for i, f in enumerate(s2.context) if f == s1.conclusion]
            _need(bool(hits), f"{show(s1.conclusion)} does not occur in the right premise's context", d)
            k = hits[0]
        _need(0 <= k < len(s2.context) and s2.context[k] == s1.conclusion,
              f"cut formula {show(s1.conclusion)} is not at position {k}", d)
        return Sequent(s2.context[:k] + s1.context + s2.context[k + 1:], s2.conclusion)
    if r == "exch":
        s = prem(0)
        i = a[0]
        _need(0 <= i < len(s.context) - 1, f"cannot exchange positions {i} and {i + 1}", d)
        ctx = list(s.context)
        ctx[i], ctx[i + 1] = ctx[i + 1], ctx[i]
        return Sequent(tuple(ctx), s.conclusion)
    if r == "tensor-l":
        s = prem(0)
        i = len(s.context) - 2 if a[0] is None else a[0]
        _need(0 <= i < len(s.context) - 1, "tensor-l needs two adjacent context formulas", d)
        ctx = s.context[:i] + (Ten(s.context[i], s.context[i + 1]),) + s.context[i + 2:]
        return Sequent(ctx, s.conclusion)
    if r == "tensor-r":
        s1, s2 = prem(0), prem(1)
        return Sequent(s1.context + s2.context, Ten(s1.conclusion, s2.conclusion))
    if r == "prom":
        rr = G.value(a[0], d)
        s = prem(0)
        _need(all(isinstance(f, Bang) for f in s.context),
              "promotion needs a context of banged formulas only", d)
        grades = tuple(f.grade for f in s.context)
        if a[1] is not None:
            given = tuple(G.value(g, d) for g in a[1])
            _need(given == grades, f"declared grades {given} but the context has {grades}", d)
        ctx = tuple(Bang(G.sr.mul(rr, f.grade), f.body) for f in s.context)
        return Sequent(ctx, Bang(rr, s.conclusion))
    if r == "der":
        s = prem(0)
        k = _last(s.context, a[0], d)
        ctx = list(s.context)
        ctx[k] = Bang(G.sr.one, ctx[k])
        return Sequent(tuple(ctx), s.conclusion)
    if r == "weak":
        s = prem(0)
        return Sequent(s.context + (Bang(G.sr.zero, G.formula(a[0], d)),), s.conclusion)
    if r == "contr":
        x, y = G.value(a[0], d), G.value(a[1], d)
        s = prem(0)
        _need(len(s.context) >= 2, "contraction needs two context formulas", d)
        f, g = s.context[-2], s.context[-1]
        ok = (isinstance(f, Bang) and isinstance(g, Bang) and f.body == g.body
              and (f.grade, g.grade) == (x, y))
        _need(ok, f"expected !{x} A, !{y} A at the end of the context, found {show(f)}, {show(g)}", d)
        return Sequent(s.context[:-2] + (Bang(G.sr.add(x, y), f.body),), s.conclusion)
    if r == "cocontr":
        x, y = G.value(a[0], d), G.value(a[1], d)
        s1, s2 = prem(0), prem(1)
        c1, c2 = s1.conclusion, s2.conclusion
        _need(isinstance(c1, Bang) and c1.grade == x, f"left premise must conclude !{x} A", d)
        _need(c2 == Bang(y, c1.body), f"right premise must conclude !{y} {show(c1.body)}", d)
        return Sequent(s1.context + s2.context, Bang(G.sr.add(x, y), c1.body))
    if r == "coweak":
        return Sequent((), Bang(G.sr.zero, G.formula(a[0], d)))
    if r == "diff":
        x = G.value(a[0], d)
        s1, s2 = prem(0), prem(1)
        c1 = s1.conclusion
        _need(isinstance(c1, Bang) and c1.grade == x, f"left premise must conclude !{x} A", d)
        _need(s2.conclusion == c1.body, f"right premise must conclude {show(c1.body)}", d)
        return Sequent(s1.context + s2.context, Bang(G.sr.add(x, G.sr.one), c1.body))
    if r == "coder":
        s = prem(0)
        return Sequent(s.context, Bang(G.sr.one, s.conclusion))
    if r == "plus-l":
        s1, s2 = prem(0), prem(1)
        _need(bool(s1.context) and bool(s2.context), "plus-l needs a formula to split on", d)
        _need(s1.context[:-1] == s2.context[:-1] and s1.conclusion == s2.conclusion,
              "plus-l premises must share context and conclusion", d)
        return Sequent(s1.context[:-1] + (Plus(s1.context[-1], s2.context[-1]),), s1.conclusion)
    if r in ("plus-r1", "plus-r2"):
        other = G.formula(a[0], d)
        s = prem(0)
        c = Plus(s.conclusion, other) if r == "plus-r1" else Plus(other, s.conclusion)
        return Sequent(s.context, c)
    if r == "with-r":
        s1, s2 = prem(0), prem(1)
        _need(s1.context == s2.context, "with-r premises must share their context", d)
        return Sequent(s1.context, Plus(s1.conclusion, s2.conclusion))
    if r in ("with-l1", "with-l2"):
        other = G.formula(a[0], d)
        s = prem(0)
        k = _last(s.context, None, d)
        f = s.context[k]
        new = Plus(f, other) if r == "with-l1" else Plus(other, f)
        return Sequent(s.context[:k] + (new,), s.conclusion)
    if r == "sum":
        s1, s2 = prem(0), prem(1)
        _need(s1 == s2, f"summands prove different sequents: {s1} and {s2}", d)
        return s1
    if r == "zero":
        ctx = tuple(G.formula(f, d) for f in a[0])
        return Sequent(ctx, G.formula(a[1], d))
    if r in ("with-r-split", "plus-l-split"):
        total = G.value(a[0], d)
        seqs = [prem(0, G.bind(a[1], st)) for st in splittings(total, G.sr)]
        if r == "with-r-split":
            _need(all(s.context == seqs[0].context for s in seqs),
                  "the instances do not share a context", d)
            return Sequent(seqs[0].context, plus_n([s.conclusion for s in seqs]))
        _need(all(s.context and s.context[:-1] == seqs[0].context[:-1]
                  and s.conclusion == seqs[0].conclusion for s in seqs),
              "the instances must share context prefix and conclusion", d)
        return Sequent(seqs[0].context[:-1] + (plus_n([s.context[-1] for s in seqs]),),
                       seqs[0].conclusion)
    raise GdillError(f"unknown rule {r!r}", d)


def infer(d: Derivation, grades: dict | None = None, semiring: GradeSemiring = NAT) -> Sequent:
    """The sequent proved by ``d``; ``grades`` binds free grade names."""
    return _typed(d, _Grades(semiring, dict(grades or {})))


# -- relational denotation -------------------------------------------------------------

def make_env(sizes: dict) -> dict:
    """Atom carriers named by consecutive letters: {"A": 2, "B": 1} gives {a,b} and {c}."""
    letters = "abcdefghijklmnopqrstuvwxyz"
    env, used = {}, 0
    for name in sorted(sizes):
        n = sizes[name]
        names = letters[used:used + n]
        env[name] = frel.atoms(n, names) if len(names) == n else frel.atoms(n, name.lower())
        used += n
    return env


def formula_obj(f: Formula, env: dict):
    if isinstance(f, Atom):
        if f.name not in env:
            raise GdillError(f"no carrier for atom {f.name}")
        return env[f.name]
    if isinstance(f, Unit):
        return frel.UNIT
    if isinstance(f, Ten):
        return frel.tensor_objects(formula_obj(f.left, env), formula_obj(f.right, env))
    if isinstance(f, Plus):
        return frel.biproduct(formula_obj(f.left, env), formula_obj(f.right, env))
    if isinstance(f, Bang):
        return frel.bang_set(f.grade, formula_obj(f.body, env))
    raise TypeError(f)


def _ctx(fs, env):
    return frel.tensor_objects(*(formula_obj(f, env) for f in fs))


def _around(ctx: tuple, k: int, middle: Rel, env) -> Rel:
    """``1 ⊗ middle ⊗ 1`` with ``middle`` at context position ``k``."""
    left = frel.identity(_ctx(ctx[:k], env))
    right = frel.identity(_ctx(ctx[k + 1:], env))
    return frel.tensor(left, middle, right)


def _summands(f: Formula, n: int) -> list:
    """The n summands of a left-associated iterated ⊕."""
    out = []
    for _ in range(n - 1):
        out.append(f.right)
        f = f.left
    out.append(f)
    return out[::-1]


def _mu_n(r: int, objs: list) -> Rel:
    """``!_r B_1 ⊗ … ⊗ !_r B_n -> !_r(B_1 ⊗ … ⊗ B_n)``."""
    if not objs:
        return fm.mu_unit(r)
    acc = frel.identity(frel.bang_set(r, objs[0]))
    inner = objs[0]
    for b in objs[1:]:
        acc = frel.compose(frel.tensor(acc, frel.identity(frel.bang_set(r, b))),
                           fm.mu_tensor(r, inner, b))
        inner = frel.tensor_objects(inner, b)
    return acc


def _denote(d: Derivation, G: _Grades, env: dict) -> Rel:
    r, a = d.rule, d.args
    seq = _typed(d, G)
    sub = lambda j, g=G: _denote(d.premises[j], g, env)
    ob = lambda f: formula_obj(f, env)

    if r == "ax":
        return frel.identity(ob(seq.conclusion))
    if r == "cut":
        s1, s2 = _typed(d.premises[0], G), _typed(d.premises[1], G)
        k = a[0] if a[0] is not None else s2.context.index(s1.conclusion)
        return frel.compose(_around(s2.context, k, sub(0), env), sub(1))
    if r == "exch":
        i = a[0]
        objs = [ob(f) for f in seq.context]
        perm = list(range(len(objs)))
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
        return frel.compose(frel.permutation(objs, perm), sub(0))
    if r == "tensor-l":
        return sub(0)  # strict monoidal: the context object is unchanged
    if r == "tensor-r":
        return frel.tensor(sub(0), sub(1))
    if r == "prom":
        rr = G.value(a[0], d)
        inner = _typed(d.premises[0], G).context
        ps = [fm.promotion(rr, f.grade, ob(f.body)) for f in inner]
        return frel.compose(frel.tensor(*ps), _mu_n(rr, [ob(f) for f in inner]),
                            fm.bang_rel(rr, sub(0)))
    if r == "der":
        k = _last(seq.context, a[0], d)
        return frel.compose(_around(seq.context, k, fm.dereliction(ob(seq.context[k].body)), env),
                            sub(0))
    if r == "weak":
        k = len(seq.context) - 1
        return frel.compose(_around(seq.context, k, fm.weakening(ob(seq.context[k].body)), env),
                            sub(0))
    if r == "contr":
        x, y = G.value(a[0], d), G.value(a[1], d)
        k = len(seq.context) - 1
        return frel.compose(
            _around(seq.context, k, fm.contraction(x, y, ob(seq.context[k].body)), env), sub(0))
    if r == "cocontr":
        x, y = G.value(a[0], d), G.value(a[1], d)
        return frel.compose(frel.tensor(sub(0), sub(1)),
                            fm.cocontraction(x, y, ob(seq.conclusion.body)))
    if r == "coweak":
        return fm.coweakening(ob(seq.conclusion.body))
    if r == "diff":
        x = G.value(a[0], d)
        return frel.compose(frel.tensor(sub(0), sub(1)), fm.deriving(x, ob(seq.conclusion.body)))
    if r == "coder":
        return frel.compose(sub(0), fm.codereliction(ob(seq.conclusion.body)))
    if r in ("plus-l", "with-l1", "with-l2"):
        k = len(seq.context) - 1
        split_on = seq.context[k]
        summands = [ob(split_on.left), ob(split_on.right)]
        branches = {"plus-l": [0, 1], "with-l1": [0], "with-l2": [1]}[r]
        terms = [frel.compose(_around(seq.context, k, frel.projection(summands, j), env),
                              sub(idx))
                 for idx, j in enumerate(branches)]
        return frel.rsum(terms, ob_ctx(seq, env), ob(seq.conclusion))
    if r in ("plus-r1", "plus-r2"):
        c = seq.conclusion
        j = 0 if r == "plus-r1" else 1
        return frel.compose(sub(0), frel.injection([ob(c.left), ob(c.right)], j))
    if r == "with-r":
        c = seq.conclusion
        summands = [ob(c.left), ob(c.right)]
        terms = [frel.compose(sub(j), frel.injection(summands, j)) for j in (0, 1)]
        return frel.rsum(terms, ob_ctx(seq, env), ob(c))
    if r == "sum":
        return frel.radd(sub(0), sub(1))
    if r == "zero":
        return frel.rzero(ob_ctx(seq, env), ob(seq.conclusion))
    if r in ("with-r-split", "plus-l-split"):
        total = G.value(a[0], d)
        splits = splittings(total, G.sr)
        insts = [G.bind(a[1], st) for st in splits]
        if r == "with-r-split":
            summands = [ob(f) for f in _summands(seq.conclusion, len(splits))]
            terms = [frel.compose(sub(0, g), frel.injection(summands, j))
                     for j, g in enumerate(insts)]
        else:
            k = len(seq.context) - 1
            summands = [ob(f) for f in _summands(seq.context[k], len(splits))]
            terms = [frel.compose(_around(seq.context, k, frel.projection(summands, j), env),
                                  sub(0, g))
                     for j, g in enumerate(insts)]
        return frel.rsum(terms, ob_ctx(seq, env), ob(seq.conclusion))
    raise GdillError(f"no denotation for rule {r!r}", d)


def ob_ctx(seq: Sequent, env: dict):
    return _ctx(seq.context, env)


def denote(d: Derivation, env: dict, grades: dict | None = None) -> Rel:
    """The relation ``[[Γ]] -> [[C]]`` denoted by ``d``; grades are naturals."""
    G = _Grades(NAT, dict(grades or {}))
    _typed(d, G)
    return _denote(d, G, env)


def equal_denotation(d1: Derivation, d2: Derivation, env: dict, grades: dict | None = None) -> bool:
    s1, s2 = infer(d1, grades), infer(d2, grades)
    if s1 != s2:
        raise GdillError(f"the proofs end in different sequents: {s1} and {s2}")
    return frel.rel_equal(denote(d1, env, grades), denote(d2, env, grades))
