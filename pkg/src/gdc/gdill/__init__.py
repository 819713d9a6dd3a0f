"""A sequent language for graded differential linear logic, with relational semantics."""
from .core import (
    Atom, Bang, Derivation, Formula, GdillError, Plus, Proof, ProofFile, Sequent, Ten, Unit,
    denote, equal_denotation, infer, make_env, parse, parse_file, parse_formula,
)
from .corpus import corpus_names, load_corpus
from .sexp import ParseError

__all__ = [
    "Atom", "Bang", "Derivation", "Formula", "GdillError", "ParseError", "Plus", "Proof",
    "ProofFile", "Sequent", "Ten", "Unit", "denote", "equal_denotation", "infer", "make_env",
    "parse", "parse_file", "parse_formula", "corpus_names", "load_corpus",
]
