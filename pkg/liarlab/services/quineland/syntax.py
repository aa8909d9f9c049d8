"""Quineland syntax: a quotation language with a self-application term.

Terms are ``x``, quotes ``<e>`` of any expression, and ``diag(t)``; formulas
are ``Pr(t)``, ``~f`` and ``(a & b)``. An ``x`` inside a quote is quoted text,
not an occurrence of the variable.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import count as _count
from typing import Callable, Iterator, Union

from liarlab.errors import FormulaSyntaxError


# --- Terms ---

@dataclass(frozen=True)
class VarX:
    pass


@dataclass(frozen=True)
class Quote:
    payload: "QExpr"


@dataclass(frozen=True)
class Diag:
    arg: "QTerm"


QTerm = Union[VarX, Quote, Diag]
X = VarX()


# --- Formulas ---

@dataclass(frozen=True)
class Pr:
    arg: QTerm


@dataclass(frozen=True)
class Not:
    body: "QFormula"


@dataclass(frozen=True)
class And:
    left: "QFormula"
    right: "QFormula"


QFormula = Union[Pr, Not, And]
QExpr = Union[QTerm, QFormula]
FORMULA_TYPES = (Pr, Not, And)


def is_formula(e) -> bool:
    return isinstance(e, FORMULA_TYPES)


# --- Structure ---

def size(e: QExpr) -> int:
    if isinstance(e, VarX):
        return 1
    if isinstance(e, Quote):
        return 1 + size(e.payload)
    if isinstance(e, (Diag, Pr)):
        return 1 + size(e.arg)
    if isinstance(e, Not):
        return 1 + size(e.body)
    return 1 + size(e.left) + size(e.right)


def has_free_x(e: QExpr) -> bool:
    if isinstance(e, VarX):
        return True
    if isinstance(e, Quote):
        return False
    if isinstance(e, (Diag, Pr)):
        return has_free_x(e.arg)
    if isinstance(e, Not):
        return has_free_x(e.body)
    return has_free_x(e.left) or has_free_x(e.right)


def is_sentence(e) -> bool:
    return is_formula(e) and not has_free_x(e)


def replace_x(e: QExpr, fn: Callable[[], QTerm]) -> QExpr:
    """Rebuild ``e`` with every free ``x`` replaced by ``fn()``."""
    if isinstance(e, VarX):
        return fn()
    if isinstance(e, Quote):
        return e
    if isinstance(e, Diag):
        return Diag(replace_x(e.arg, fn))
    if isinstance(e, Pr):
        return Pr(replace_x(e.arg, fn))
    if isinstance(e, Not):
        return Not(replace_x(e.body, fn))
    return And(replace_x(e.left, fn), replace_x(e.right, fn))


def substitute(f: QFormula, n: QTerm) -> QFormula:
    if not has_free_x(f):
        return f
    return replace_x(f, lambda: n)


# --- Canonical printer ---

def serialize(e: QExpr) -> str:
    if isinstance(e, VarX):
        return "x"
    if isinstance(e, Quote):
        return f"<{serialize(e.payload)}>"
    if isinstance(e, Diag):
        return f"diag({serialize(e.arg)})"
    if isinstance(e, Pr):
        return f"Pr({serialize(e.arg)})"
    if isinstance(e, Not):
        return "~" + serialize(e.body)
    return f"({serialize(e.left)} & {serialize(e.right)})"


# --- Parser ---

GRAMMAR = "F ::= 'Pr' '(' T ')' | '~' F | '(' F '&' F ')' ; T ::= 'x' | '<' E '>' | 'diag' '(' T ')' ; E ::= F | T"

_TOKEN = re.compile(r"\s*(Pr|diag|x|[<>()~&])")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens: list[tuple[str, int]] = []
        pos = 0
        while True:
            m = _TOKEN.match(text, pos)
            if m is None:
                rest = text[pos:].lstrip()
                if not rest:
                    break
                at = len(text) - len(rest)
                raise FormulaSyntaxError(f"unexpected character {rest[0]!r}", at, text)
            self.tokens.append((m.group(1), m.start(1)))
            pos = m.end()
        self.tokens.append(("", len(text)))
        self.i = 0

    def peek(self) -> str:
        return self.tokens[self.i][0]

    def take(self) -> tuple[str, int]:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value: str) -> None:
        got, pos = self.take()
        if got != value:
            raise FormulaSyntaxError(f"expected {value!r}, found {got or 'end of input'!r}", pos, self.text)

    def parse(self) -> QExpr:
        e = self.expression()
        got, pos = self.tokens[self.i]
        if got:
            raise FormulaSyntaxError(f"unexpected {got!r}", pos, self.text)
        return e

    def expression(self) -> QExpr:
        if self.peek() in ("Pr", "~", "("):
            return self.formula()
        return self.term()

    def formula(self) -> QFormula:
        got, pos = self.take()
        if got == "Pr":
            self.expect("(")
            t = self.term()
            self.expect(")")
            return Pr(t)
        if got == "~":
            return Not(self.formula())
        if got == "(":
            left = self.formula()
            self.expect("&")
            right = self.formula()
            self.expect(")")
            return And(left, right)
        raise FormulaSyntaxError(f"expected a formula, found {got or 'end of input'!r}", pos, self.text)

    def term(self) -> QTerm:
        got, pos = self.take()
        if got == "x":
            return X
        if got == "<":
            payload = self.expression()
            self.expect(">")
            return Quote(payload)
        if got == "diag":
            self.expect("(")
            t = self.term()
            self.expect(")")
            return Diag(t)
        raise FormulaSyntaxError(f"expected a term, found {got or 'end of input'!r}", pos, self.text)


def parse(text: str) -> QExpr:
    """Any expression: a term or a formula."""
    return _Parser(text).parse()


def parse_formula(text: str) -> QFormula:
    e = parse(text)
    if not is_formula(e):
        raise FormulaSyntaxError("expected a formula, found a term", 0, text)
    return e


# --- Enumeration ---

@lru_cache(maxsize=None)
def _terms(n: int) -> tuple:
    if n == 1:
        return (X,)
    return tuple(Quote(e) for e in _expressions(n - 1)) + tuple(Diag(t) for t in _terms(n - 1))


@lru_cache(maxsize=None)
def _formulas(n: int) -> tuple:
    if n < 2:
        return ()
    out: list = [Pr(t) for t in _terms(n - 1)]
    out.extend(Not(f) for f in _formulas(n - 1))
    for k in range(2, n - 2):
        out.extend(And(a, b) for a in _formulas(k) for b in _formulas(n - 1 - k))
    return tuple(out)


def _expressions(n: int) -> tuple:
    return _terms(n) + _formulas(n)


@lru_cache(maxsize=32)
def formulas_of_size(n: int) -> tuple:
    """Formulas with ``n`` nodes, as ``(text, formula)`` in byte order."""
    ranked = [(serialize(f), f) for f in _formulas(n)]
    ranked.sort(key=lambda pair: pair[0].encode())
    return tuple(ranked)


def iter_formulas() -> Iterator[QFormula]:
    for n in _count(2):
        for _text, f in formulas_of_size(n):
            yield f


def enumerate_up_to_size(cap: int) -> Iterator[QFormula]:
    for n in range(2, cap + 1):
        for _text, f in formulas_of_size(n):
            yield f
