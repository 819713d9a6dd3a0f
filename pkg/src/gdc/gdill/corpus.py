"""Access to the bundled proof files."""
from __future__ import annotations

from importlib import resources

from .core import ProofFile, parse_file

PACKAGE = "gdc.corpus"


def corpus_names() -> list:
    return sorted(p.name[:-4] for p in resources.files(PACKAGE).iterdir() if p.name.endswith(".gdl"))


def load_corpus(name: str) -> ProofFile:
    """Parse ``<name>.gdl`` from the bundled corpus."""
    path = resources.files(PACKAGE) / f"{name}.gdl"
    if not path.is_file():
        raise KeyError(f"no corpus file {name!r}; known: {', '.join(corpus_names())}")
    return parse_file(path.read_text(encoding="utf-8"))
