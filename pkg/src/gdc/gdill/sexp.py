"""A small s-expression reader that remembers where every node came from."""
from __future__ import annotations

from dataclasses import dataclass


class ParseError(ValueError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{line}:{col}: {message}")
        self.line = line
        self.col = col


@dataclass(frozen=True)
class Sym:
    text: str
    line: int
    col: int


@dataclass(frozen=True)
class SList:
    items: tuple
    line: int
    col: int


def _tokens(text: str):
    line, col = 1, 1
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            line, col = line + 1, 1
            i += 1
            continue
        if ch.isspace():
            i += 1
            col += 1
            continue
        if ch == ";":
            while i < len(text) and text[i] != "\n":
                i += 1
            continue
        if ch in "()":
            yield ch, line, col
            i += 1
            col += 1
            continue
        start, start_col = i, col
        while i < len(text) and not text[i].isspace() and text[i] not in "();":
            i += 1
            col += 1
        yield text[start:i], line, start_col


def read_all(text: str) -> list:
    """Every top-level form in ``text``."""
    stack: list = [[]]
    opens: list = []
    for tok, line, col in _tokens(text):
        if tok == "(":
            stack.append([])
            opens.append((line, col))
        elif tok == ")":
            if not opens:
                raise ParseError("unexpected ')'", line, col)
            items = stack.pop()
            l0, c0 = opens.pop()
            stack[-1].append(SList(tuple(items), l0, c0))
        else:
            stack[-1].append(Sym(tok, line, col))
    if opens:
        l0, c0 = opens[-1]
        raise ParseError("unclosed '('", l0, c0)
    return stack[0]


def read_one(text: str):
    forms = read_all(text)
    if len(forms) != 1:
        raise ParseError(f"expected one form, found {len(forms)}", 1, 1)
    return forms[0]
