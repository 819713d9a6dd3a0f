"""Command-line front end: ``gdc check | eval | diff | seely | catalog``."""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import frel, frel_model as fm
from ._render import render, sort_key
from .checker import CheckConfig, catalog, check_all, get_adapter
from .gdill import (
    Atom, Bang, GdillError, ParseError, Plus, Ten, corpus_names, denote, infer, load_corpus,
    make_env, parse_file,
)
from .semiring import NAT, splittings

MODELS = ("frel", "sympoly", "sympoly-primal")
DEFAULT_GRADE = 2
DEFAULT_ATOM_SIZE = 2


def _positive(text: str) -> int:
    n = int(text)
    if n < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return n


def _binding(text: str) -> tuple:
    name, sep, value = text.partition("=")
    if not sep or not name:
        raise argparse.ArgumentTypeError(f"expected NAME=N, got {text!r}")
    return name, _positive(value)


# -- check -----------------------------------------------------------------------------

def cmd_check(args, out) -> int:
    is_poly = args.model.startswith("sympoly")
    max_grade = args.max_grade if args.max_grade is not None else (
        args.max_degree if is_poly and args.max_degree is not None else 3)
    max_set = args.max_set if args.max_set is not None else (
        args.vars if is_poly and args.vars is not None else (2 if is_poly else 3))
    only = tuple(s for part in args.only for s in part.split(",") if s)
    config = CheckConfig(max_grade=max_grade, max_set=max_set, workers=args.workers, only=only)
    report = check_all(get_adapter(args.model), config)
    if args.format == "records":
        for r in report.results:
            out.write(json.dumps(r.record(timing=args.timing), ensure_ascii=False,
                                 sort_keys=True) + "\n")
    else:
        out.write(report.summary() + "\n")
        for r in report.failures:
            out.write(f"FAIL {r.equation} grades={list(r.grades)} sizes={list(r.sizes)}\n")
            for k, v in (r.counterexample or {}).items():
                out.write(f"  {k}: {v}\n")
    return 0 if report.ok else 1


# -- eval ------------------------------------------------------------------------------

def _atoms(f, acc: set) -> set:
    if isinstance(f, Atom):
        acc.add(f.name)
    elif isinstance(f, (Ten, Plus)):
        _atoms(f.left, acc)
        _atoms(f.right, acc)
    elif isinstance(f, Bang):
        _atoms(f.body, acc)
    return acc


def _load_proofs(source: str):
    path = Path(source)
    if path.exists():
        return parse_file(path.read_text())
    if source in corpus_names():
        return load_corpus(source)
    raise FileNotFoundError(f"{source}: no such file or corpus (corpus: {', '.join(corpus_names())})")


def cmd_eval(args, out) -> int:
    try:
        pf = _load_proofs(args.source)
    except (ParseError, GdillError) as exc:
        out.write(f"{args.source}:{exc}\n")
        return 2
    grades_given = dict(args.grade)
    sizes_given = dict(args.env)
    names = list(pf.proofs) if not args.proof else args.proof
    seqs, rels = {}, {}
    status = 0
    for name in names:
        if name not in pf.proofs:
            out.write(f"{name}: no such proof\n")
            return 2
        proof = pf[name]
        grades = {p: grades_given.get(p, DEFAULT_GRADE) for p in proof.params}
        try:
            seq = infer(proof.derivation, grades, pf.semiring)
        except GdillError as exc:
            out.write(f"{args.source}:{exc}\n")
            status = 2
            continue
        seqs[name] = seq
        shown = ", ".join(f"{k}={v}" for k, v in grades.items())
        out.write(f"{name}{' [' + shown + ']' if shown else ''}: {seq}\n")
        if pf.semiring is not NAT:
            continue
        atoms = set()
        for f in seq.context + (seq.conclusion,):
            _atoms(f, atoms)
        env = make_env({a: sizes_given.get(a, DEFAULT_ATOM_SIZE) for a in atoms})
        rels[name] = denote(proof.derivation, env, grades)
        if not args.quiet:
            out.write(f"  {rels[name].render()}\n")
    if args.compare:
        p, q = args.compare
        if p not in rels or q not in rels:
            out.write("compare: both proofs must be selected and denotable\n")
            return 2
        a, b = rels[p], rels[q]
        if args.roundtrip:
            ok = (a.target == b.source and b.target == a.source
                  and frel.rel_equal(frel.compose(a, b), frel.identity(a.source))
                  and frel.rel_equal(frel.compose(b, a), frel.identity(b.source)))
            out.write(f"inverse: {'yes' if ok else 'no'}\n")
        else:
            ok = seqs[p] == seqs[q] and frel.rel_equal(a, b)
            out.write(f"equal: {'yes' if ok else 'no'}\n")
        status = status or (0 if ok else 1)
    return status


# -- diff ------------------------------------------------------------------------------

def cmd_diff(args, out) -> int:
    from .sympoly import HomPoly, PolyError, contract, derive
    names = tuple(v.strip() for v in args.vars.split(",") if v.strip())
    try:
        p = HomPoly.parse(args.poly, names)
        t = derive(p)
    except PolyError as exc:
        out.write(f"error: {exc}\n")
        return 2
    out.write(f"{t}\n")
    euler = contract(t)
    ok = euler == p.scaled(p.degree)
    out.write(f"Euler: {euler} = {p.degree}·({p}): {'yes' if ok else 'no'}\n")
    return 0 if ok else 1


# -- seely -----------------------------------------------------------------------------

def cmd_seely(args, out) -> int:
    nx, ny = args.sizes
    r = args.grade
    x, y = make_env({"A": nx, "B": ny}).values()
    fwd = fm.seely(r, x, y)
    split = list(splittings(r, NAT))
    for f in fwd.source:
        for z in sorted(fwd.image(f), key=sort_key):
            j, v = frel.summand_of(len(split), z)
            s, t = split[j]
            out.write(f"{render(f)}  ↔  [{s},{t}] {render(v)}\n")
    left = len(fwd.source)
    terms = [len(frel.bang_set(s, x)) * len(frel.bang_set(t, y)) for s, t in split]
    right = " + ".join(f"{len(frel.bang_set(s, x))}·{len(frel.bang_set(t, y))}" for s, t in split)
    ok = frel.is_bijection(fwd) and left == sum(terms)
    out.write(f"{left} ↔ {right} = {sum(terms)}; bijection: {'yes' if ok else 'no'}\n")
    return 0 if ok else 1


# -- catalog ---------------------------------------------------------------------------

def cmd_catalog(args, out) -> int:
    for eq in catalog():
        out.write(f"{eq.id}\t{eq.caption}\t{eq.formula}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="gdc", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="check the equation catalog in a model")
    c.add_argument("--model", choices=MODELS, default="frel")
    c.add_argument("--max-grade", type=_positive)
    c.add_argument("--max-set", type=_positive, help="largest carrier (basis) size")
    c.add_argument("--max-degree", type=_positive, help="polynomial models: alias of --max-grade")
    c.add_argument("--vars", type=_positive, help="polynomial models: alias of --max-set")
    c.add_argument("--only", action="append", default=[],
                   help="equation id or id prefix; repeatable or comma separated")
    c.add_argument("--format", choices=("text", "records"), default="text")
    c.add_argument("--timing", action="store_true", help="add per-check seconds to records")
    c.add_argument("--workers", type=int, help="worker processes (default: $GDC_WORKERS or 1)")
    c.add_argument("--out", help="write the report here instead of stdout")
    c.set_defaults(func=cmd_check)

    e = sub.add_parser("eval", help="type-check and denote proofs")
    e.add_argument("source", help="a proof file, or a corpus name: " + ", ".join(corpus_names()))
    e.add_argument("--proof", action="append", default=[], help="restrict to these proofs")
    e.add_argument("--env", action="append", type=_binding, default=[],
                   help=f"atom carrier size, e.g. A=2 (default {DEFAULT_ATOM_SIZE})")
    e.add_argument("--grade", action="append", type=_binding, default=[],
                   help=f"proof parameter, e.g. r=2 (default {DEFAULT_GRADE})")
    e.add_argument("--compare", nargs=2, metavar=("P", "Q"))
    e.add_argument("--roundtrip", action="store_true",
                   help="with --compare: test that P and Q are mutually inverse")
    e.add_argument("--quiet", action="store_true", help="omit the relations")
    e.add_argument("--out")
    e.set_defaults(func=cmd_eval)

    d = sub.add_parser("diff", help="differentiate a homogeneous polynomial")
    d.add_argument("poly")
    d.add_argument("--vars", default="x,y,z")
    d.add_argument("--out")
    d.set_defaults(func=cmd_diff)

    s = sub.add_parser("seely", help="print the graded Seely bijection")
    s.add_argument("--sizes", nargs=2, type=_positive, default=(1, 1), metavar=("NX", "NY"))
    s.add_argument("--grade", type=_positive, default=2)
    s.add_argument("--out")
    s.set_defaults(func=cmd_seely)

    k = sub.add_parser("catalog", help="list the checked equations")
    k.add_argument("--out")
    k.set_defaults(func=cmd_catalog)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if getattr(args, "out", None):
            with open(args.out, "w", encoding="utf-8") as fh:
                return args.func(args, fh)
        return args.func(args, sys.stdout)
    except (KeyError, FileNotFoundError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) else exc
        sys.stderr.write(f"error: {msg}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
